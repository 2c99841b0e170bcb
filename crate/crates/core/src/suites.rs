//! The named verification suites.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::group::{
    central_product_quotient, fiber_product, find_isomorphism, hom_from_generator_images,
    involutions, is_central_product, is_isomorphic, zoo, ConcreteGroup, GroupHom, Subgroup,
};
use crate::numeric::{ExactMatrix, GaussianRational, Matrix2};
use crate::presentation::{
    bundled, central_product_presentation, group_from_coset_table, presentation_order_audit,
    quotient_presentation, svk_presentation, todd_coxeter, w, CosetStatus, Presentation, Word,
};
use crate::pseudo_fermion::{
    build_pf, constants_of_motion, hamiltonian, pauli_group_realization, point_report, PFParams,
    SweepPoint, CLOSURE_TOL,
};
use crate::report::{Status, VerificationReport as R};
use crate::sphere::{
    check_action_axioms, check_freeness, exact_samples_c, exact_samples_q, orbit, z4_act,
    CorruptedQ8Action, ExactPointC, ExactPointQ, Q8Action, SpherePoint, SpherePointC, SpherePointQ,
    Z4Action,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PauliMatrix,
    Presentations,
    Products,
    Svk,
    Sphere,
    Pseudofermion,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "pauli-matrix",
        "presentations",
        "products",
        "svk",
        "sphere",
        "pseudofermion",
        "all",
    ];

    fn parts() -> [Suite; 6] {
        [
            Suite::PauliMatrix,
            Suite::Presentations,
            Suite::Products,
            Suite::Svk,
            Suite::Sphere,
            Suite::Pseudofermion,
        ]
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "pauli-matrix" => Suite::PauliMatrix,
            "presentations" => Suite::Presentations,
            "products" => Suite::Products,
            "svk" => Suite::Svk,
            "sphere" => Suite::Sphere,
            "pseudofermion" => Suite::Pseudofermion,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Suite::PauliMatrix,
            Suite::Presentations,
            Suite::Products,
            Suite::Svk,
            Suite::Sphere,
            Suite::Pseudofermion,
            Suite::All,
        ]
        .iter()
        .position(|s| s == self)
        .expect("listed");
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    pub tol: f64,
    /// Largest coset bound tried by the order audit.
    pub coset_bound: usize,
    pub seed: u64,
    pub sphere_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            coset_bound: 100_000,
            seed: 0,
            sphere_samples: 1000,
        }
    }
}

/// Runs a suite; reports are sorted by `check_id`.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<R> {
    let mut out = match suite {
        Suite::PauliMatrix => pauli_matrix(),
        Suite::Presentations => presentations(cfg),
        Suite::Products => products(),
        Suite::Svk => svk(),
        Suite::Sphere => sphere(cfg),
        Suite::Pseudofermion => pseudofermion(cfg),
        Suite::All => Suite::parts()
            .iter()
            .flat_map(|&s| run_suite(s, cfg))
            .collect(),
    };
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

/// Isomorphism witness as a label-to-label map.
pub fn iso_witness(g: &ConcreteGroup, h: &ConcreteGroup, map: &[usize]) -> Value {
    Value::Object(
        g.elements()
            .map(|x| {
                (
                    g.label(x).to_string(),
                    Value::String(h.label(map[x]).to_string()),
                )
            })
            .collect(),
    )
}

fn iso_report(id: &str, anchor: &str, g: &ConcreteGroup, h: &ConcreteGroup) -> R {
    let map = find_isomorphism(g, h);
    let r = R::check(id, anchor, map.is_some())
        .metric("order", g.order() as f64)
        .metric("target_order", h.order() as f64);
    match map {
        Some(m) => r.witness(json!({ "isomorphism": iso_witness(g, h, &m) })),
        None => r,
    }
}

fn tc_group(p: &Presentation, bound: usize) -> Option<ConcreteGroup> {
    let t = todd_coxeter(p, &[], bound).ok()?;
    group_from_coset_table(&t).ok()
}

fn pauli_matrix() -> Vec<R> {
    let closure = zoo::pauli_closure();
    let g = &closure.group;
    let [x, y, z] = zoo::pauli_generators();
    let one = ExactMatrix::identity();
    let xyz = x.mat_mul(&y).mat_mul(&z);
    let i_one = ExactMatrix::scalar(GaussianRational::from_integers(0, 1));
    let mut out = vec![R::check(
        "pauli-matrix/01-closure-order",
        "Pauli group has order 16",
        g.order() == 16,
    )
    .metric("order", g.order() as f64)
    .witness(json!({ "elements": g.labels() }))];

    let central = [&x, &y, &z]
        .iter()
        .all(|m| xyz.mat_mul(m) == m.mat_mul(&xyz));
    let order4 = xyz.pow(4) == one && xyz.pow(2) != one;
    out.push(
        R::check(
            "pauli-matrix/02-xyz-central",
            "XYZ = iI is central of order 4",
            xyz == i_one && central && order4,
        )
        .metric("order_of_xyz", if order4 { 4.0 } else { 0.0 }),
    );

    let rels: Vec<(&str, bool)> = vec![
        ("X^2 = 1", x.pow(2) == one),
        ("Y^2 = 1", y.pow(2) == one),
        ("Z^2 = 1", z.pow(2) == one),
        ("(YZ)^4 = 1", y.mat_mul(&z).pow(4) == one),
        ("(ZX)^4 = 1", z.mat_mul(&x).pow(4) == one),
        ("(XY)^4 = 1", x.mat_mul(&y).pow(4) == one),
        ("(XYZ)^4 = 1", xyz.pow(4) == one),
        ("[XYZ, X] = 1", xyz.commutator(&x).is_zero(0.0)),
        ("[XYZ, Y] = 1", xyz.commutator(&y).is_zero(0.0)),
        ("[XYZ, Z] = 1", xyz.commutator(&z).is_zero(0.0)),
        (
            "XY = iZ",
            x.mat_mul(&y) == z.scale(&GaussianRational::from_integers(0, 1)),
        ),
        (
            "YZ = iX",
            y.mat_mul(&z) == x.scale(&GaussianRational::from_integers(0, 1)),
        ),
        (
            "ZX = iY",
            z.mat_mul(&x) == y.scale(&GaussianRational::from_integers(0, 1)),
        ),
    ];
    let failures = rels.iter().filter(|(_, ok)| !ok).count();
    out.push(
        R::check(
            "pauli-matrix/03-relations",
            "Pauli matrix relations hold exactly",
            failures == 0,
        )
        .metric("relations", rels.len() as f64)
        .metric("failures", failures as f64)
        .witness(json!(rels
            .iter()
            .map(|(n, ok)| json!({ "relation": n, "holds": ok }))
            .collect::<Vec<_>>())),
    );
    out.push(
        R::check("pauli-matrix/04-table-audit", "plumbing", g.audit().is_ok())
            .metric("order", g.order() as f64),
    );

    let idx = |m: &Matrix2<GaussianRational>| closure.index_of(|e| e == m).expect("closed");
    let images = [idx(&x), idx(&y), idx(&z)];
    let hom = hom_from_generator_images(&bundled::pauli_xyz(), &images, g);
    out.push(
        R::check(
            "pauli-matrix/05-xyz-presentation-maps-onto",
            "the three-generator presentation surjects onto the matrix group",
            hom.as_ref().is_ok_and(|h| h.surjective),
        )
        .metric("image_order", hom.map_or(0.0, |h| h.image.order() as f64)),
    );
    out
}

/// `u ↦ XY`, `xy ↦ Y·XYZ`, `y ↦ XYZ` in the labelled Pauli group.
pub fn uxy_images(p: &ConcreteGroup) -> [usize; 3] {
    let (x, y, z) = (
        p.find_label("X").unwrap(),
        p.find_label("Y").unwrap(),
        p.find_label("Z").unwrap(),
    );
    let xyz = p.mul(p.mul(x, y), z);
    [p.mul(x, y), p.mul(y, xyz), xyz]
}

/// Audit bounds: powers of ten from 100 up to `max`, plus `max` itself.
pub fn audit_bounds(max: usize) -> Vec<usize> {
    let mut b: Vec<usize> = [100, 1_000, 10_000, 100_000]
        .into_iter()
        .filter(|&x| x < max)
        .collect();
    b.push(max.max(1));
    b
}

fn audit_report(id: &str, anchor: &str, p: &Presentation, bounds: &[usize]) -> R {
    match presentation_order_audit(p, bounds, Some(16)) {
        Ok(a) => {
            let consistent = a.divisible.unwrap_or(true);
            let status = if consistent {
                Status::Recorded
            } else {
                Status::Fail
            };
            let mut r = R::new(id, anchor, status)
                .metric("completed", if a.completed() { 1.0 } else { 0.0 })
                .metric("max_bound", *bounds.last().unwrap_or(&0) as f64);
            if let Some(n) = a.order {
                r = r.metric("order", n as f64);
            }
            r.witness(serde_json::to_value(&a).expect("audit serializes"))
        }
        Err(e) => R::new(id, anchor, Status::Fail).witness(json!({ "error": e.to_string() })),
    }
}

fn presentations(cfg: &SuiteConfig) -> Vec<R> {
    let pauli = zoo::pauli();
    let cases: [(&str, Presentation, usize, ConcreteGroup, &str); 5] = [
        (
            "01-z4",
            bundled::z4(),
            4,
            zoo::z4(),
            "cyclic group of order 4",
        ),
        (
            "02-q8",
            bundled::q8(),
            8,
            zoo::quaternion(),
            "quaternion presentation on u, xy",
        ),
        ("03-d8", bundled::d8(), 8, zoo::dihedral8(), "plumbing"),
        (
            "04-pauli-uxy",
            bundled::pauli_uxy(),
            16,
            pauli.clone(),
            "equivalent presentation of the Pauli group on u, xy, y",
        ),
        (
            "05-seifquo",
            bundled::seifquo(),
            16,
            pauli.clone(),
            "quotient presentation of the Pauli group",
        ),
    ];
    let mut out = Vec::new();
    for (id, p, want, target, anchor) in cases {
        let t = todd_coxeter(&p, &[], 1000).expect("bundled presentations are well formed");
        let order = t.is_complete().then(|| t.coset_count());
        let realized = group_from_coset_table(&t).ok();
        let map = realized.as_ref().and_then(|g| find_isomorphism(g, &target));
        let ok = order == Some(want) && map.is_some() && t.verify(&p);
        let mut r = R::check(format!("presentations/{id}"), anchor, ok)
            .metric("cosets", t.coset_count() as f64)
            .metric("expected", want as f64);
        if let (Some(g), Some(m)) = (&realized, &map) {
            r = r.witness(json!({ "isomorphism": iso_witness(g, &target, m) }));
        }
        out.push(r);
    }

    let t = todd_coxeter(&bundled::q8_free_z4(), &[], 1000).expect("well formed");
    out.push(
        R::new(
            "presentations/06-q8-free-z4",
            "free product of Q8 and Z4 is infinite",
            if t.status() == CosetStatus::BoundExceeded {
                Status::BoundExceeded
            } else {
                Status::Fail
            },
        )
        .metric("bound", 1000.0)
        .metric("live_cosets", t.coset_count() as f64),
    );

    for (id, p) in [
        ("07-seifquo-hom", bundled::seifquo()),
        ("08-pauli-uxy-hom", bundled::pauli_uxy()),
    ] {
        let images = uxy_images(&pauli);
        let h = hom_from_generator_images(&p, &images, &pauli);
        let order = tc_group(&p, 1000).map_or(0, |g| g.order());
        let ok = h.as_ref().is_ok_and(|h| h.surjective) && order == pauli.order();
        out.push(
            R::check(
                format!("presentations/{id}"),
                "u -> XY, x -> Y, y -> XYZ is an isomorphism onto the matrix group",
                ok,
            )
            .metric("presented_order", order as f64)
            .metric("image_order", h.as_ref().map_or(0.0, |h| h.image.order() as f64))
            .witness(json!({ "u": pauli.label(images[0]), "xy": pauli.label(images[1]), "y": pauli.label(images[2]) })),
        );
    }

    let bounds = audit_bounds(cfg.coset_bound);
    out.push(audit_report(
        "presentations/09-xyz-audit",
        "order audit of the three-generator presentation",
        &bundled::pauli_xyz(),
        &bounds,
    ));
    let central = [
        w("X Y Z X Y Z X Y Z X Y Z"),
        w("Z^-1 Y^-1 X^-1 X^-1 X Y Z X"),
        w("Z^-1 Y^-1 X^-1 Y^-1 X Y Z Y"),
        w("Z^-1 Y^-1 X^-1 Z^-1 X Y Z Z"),
    ];
    let with_central =
        quotient_presentation(&bundled::pauli_xyz(), &central).expect("known generators");
    out.push(audit_report(
        "presentations/10-xyz-central-audit",
        "three-generator presentation with XYZ central of order 4",
        &with_central,
        &bounds,
    ));

    let q = quotient_presentation(&bundled::q8(), &[w("u^2")]).expect("known generators");
    let (big, small) = (tc_group(&bundled::q8(), 100), tc_group(&q, 100));
    let divides = matches!((&big, &small), (Some(b), Some(s)) if b.order() % s.order() == 0);
    out.push(
        R::check(
            "presentations/11-quotient-divides",
            "plumbing",
            divides && q.generators() == bundled::q8().generators(),
        )
        .metric("order", big.map_or(0.0, |g| g.order() as f64))
        .metric("quotient_order", small.map_or(0.0, |g| g.order() as f64)),
    );
    out
}

fn products() -> Vec<R> {
    let pauli = zoo::pauli();
    let q8 = zoo::quaternion();
    let d8 = zoo::dihedral8();
    let z4 = zoo::z4();
    let mut out = Vec::new();
    let pairs = [
        ("01-q8-central-z4", &q8, "Q8", "P = Q8 o Z4"),
        ("02-d8-central-z4", &d8, "D8", "P = D8 o Z4"),
    ];
    for (id, a, name, anchor) in pairs {
        let za = zoo::central_involution(name, a).expect("zoo group");
        let zb = zoo::central_involution("Z4", &z4).expect("zoo group");
        match central_product_quotient(a, za, &z4, zb) {
            Ok(cp) => {
                let base = iso_report(&format!("products/{id}"), anchor, &cp.group, &pauli);
                let ok = base.status == Status::Pass
                    && cp.group.order() == 16
                    && cp.factors_commute_and_generate();
                out.push(R {
                    status: Status::from_bool(ok),
                    ..base
                });
            }
            Err(e) => out.push(
                R::new(format!("products/{id}"), anchor, Status::Fail)
                    .witness(json!({ "error": e.to_string() })),
            ),
        }
    }

    let (iq, id8) = (involutions(&q8), involutions(&d8));
    out.push(
        R::check(
            "products/03-q8-not-d8",
            "Q8 and D8 are not isomorphic",
            !is_isomorphic(&q8, &d8) && iq == 1 && id8 == 5,
        )
        .metric("q8_involutions", iq as f64)
        .metric("d8_involutions", id8 as f64),
    );

    let z2 = zoo::cyclic(2);
    let fiber = GroupHom::from_generator_images(q8.clone(), z2.clone(), &[1, 0])
        .and_then(|e1| {
            GroupHom::from_generator_images(z4.clone(), z2.clone(), &[1]).map(|e2| (e1, e2))
        })
        .and_then(|(e1, e2)| fiber_product(&e1, &e2));
    out.push(match fiber {
        Ok(f) => R::check(
            "products/04-fiber-product",
            "subdirect product of Q8 and Z4 over Z2",
            f.checks.all() && f.group().order() == 16,
        )
        .metric("order", f.group().order() as f64)
        .metric(
            "projections_surjective",
            f64::from(u8::from(f.checks.projections_surjective)),
        )
        .metric("kernels_match", f64::from(u8::from(f.checks.kernels_match)))
        .metric(
            "kernel_product",
            f64::from(u8::from(f.checks.kernel_product)),
        )
        .metric(
            "quotient_is_target",
            f64::from(u8::from(f.checks.quotient_is_target)),
        )
        .metric(
            "isomorphic_to_pauli",
            f64::from(u8::from(is_isomorphic(f.group(), &pauli))),
        ),
        Err(e) => R::new(
            "products/04-fiber-product",
            "subdirect product of Q8 and Z4 over Z2",
            Status::Fail,
        )
        .witness(json!({ "error": e.to_string() })),
    });

    let cp = central_product_presentation(&bundled::q8(), &bundled::z4(), &[(w("u^2"), w("y^-2"))])
        .expect("disjoint");
    let g = tc_group(&cp, 1000);
    out.push(match &g {
        Some(g) => {
            let base = iso_report(
                "products/05-central-presentation",
                "central product presentation of Q8 and Z4",
                g,
                &pauli,
            );
            R {
                status: Status::from_bool(base.status == Status::Pass && g.order() == 16),
                ..base
            }
        }
        None => R::new(
            "products/05-central-presentation",
            "central product presentation of Q8 and Z4",
            Status::Fail,
        ),
    });
    let direct =
        central_product_presentation(&bundled::q8(), &bundled::z4(), &[]).expect("disjoint");
    let n = tc_group(&direct, 1000).map_or(0, |g| g.order());
    out.push(
        R::check("products/06-direct-presentation", "plumbing", n == 32).metric("order", n as f64),
    );

    let q_sub = Subgroup::generated(&pauli, &uxy_images(&pauli)[..2]);
    let y_sub = Subgroup::generated(&pauli, &uxy_images(&pauli)[2..]);
    let check = is_central_product(&pauli, &q_sub.embedding, &y_sub.embedding);
    out.push(match check {
        Ok(c) => R::check(
            "products/07-pauli-is-central-product",
            "P = Q8 o Z4 inside the matrix group",
            c.is_central_product && c.intersection_central && is_isomorphic(&q_sub.group, &q8),
        )
        .metric("q8_order", q_sub.order() as f64)
        .metric("z4_order", y_sub.order() as f64)
        .metric("intersection", c.intersection.len() as f64),
        Err(e) => R::new(
            "products/07-pauli-is-central-product",
            "P = Q8 o Z4 inside the matrix group",
            Status::Fail,
        )
        .witness(json!({ "error": e.to_string() })),
    });
    out
}

/// Route (i): amalgamate over `u² = y²`, then force the factors to commute.
pub fn svk_route_amalgam() -> Presentation {
    let amalgam = svk_presentation(&bundled::q8(), &bundled::z4(), &[(w("u^2"), w("y^2"))])
        .expect("known generators");
    let commutators: Vec<Word> = ["u", "xy"]
        .iter()
        .map(|s| Word::commutator(&Word::gen(s), &Word::gen("y")))
        .collect();
    quotient_presentation(&amalgam, &commutators).expect("known generators")
}

/// Route (ii): free product, then `uy = yu`, `xy·y = y·xy`, `u² = y²`.
pub fn svk_route_free() -> Presentation {
    let free = svk_presentation(&bundled::q8(), &bundled::z4(), &[]).expect("known generators");
    let extra = [
        Word::relation(&w("u y"), &w("y u")),
        Word::relation(&w("xy y"), &w("y xy")),
        Word::relation(&w("u^2"), &w("y^2")),
    ];
    quotient_presentation(&free, &extra).expect("known generators")
}

fn svk() -> Vec<R> {
    let pauli = zoo::pauli();
    let mut out = Vec::new();
    let routes = [
        (
            "01-amalgam-route",
            svk_route_amalgam(),
            "amalgamated product modulo commutators is P",
        ),
        (
            "02-free-product-route",
            svk_route_free(),
            "free product modulo the identifying relations is P",
        ),
    ];
    let mut realized = Vec::new();
    for (id, p, anchor) in routes {
        match tc_group(&p, 1000) {
            Some(g) => {
                let base = iso_report(&format!("svk/{id}"), anchor, &g, &pauli);
                out.push(R {
                    status: Status::from_bool(base.status == Status::Pass && g.order() == 16),
                    ..base
                });
                realized.push(g);
            }
            None => out.push(R::new(format!("svk/{id}"), anchor, Status::Fail)),
        }
    }
    out.push(
        R::check(
            "svk/03-routes-agree",
            "both routes give the same group",
            realized.len() == 2 && is_isomorphic(&realized[0], &realized[1]),
        )
        .metric("routes", realized.len() as f64),
    );

    let amalgam = svk_presentation(&bundled::q8(), &bundled::z4(), &[(w("u^2"), w("y^2"))])
        .expect("known generators");
    let t = todd_coxeter(&amalgam, &[], 1000).expect("well formed");
    out.push(
        R::new(
            "svk/04-amalgam-alone",
            "amalgamated product before the quotient",
            if t.is_complete() {
                Status::Recorded
            } else {
                Status::BoundExceeded
            },
        )
        .metric("bound", 1000.0)
        .metric("live_cosets", t.coset_count() as f64)
        .witness(json!({ "presentation": amalgam.to_text() })),
    );

    let a = Presentation::from_strs(&["a"], &["a^2"]).expect("valid");
    let b = Presentation::from_strs(&["b"], &["b^2"]).expect("valid");
    let n = svk_presentation(&a, &b, &[(w("a"), w("b"))])
        .ok()
        .and_then(|p| tc_group(&p, 100))
        .map_or(0, |g| g.order());
    out.push(
        R::check("svk/05-identified-involutions", "plumbing", n == 2).metric("order", n as f64),
    );
    out
}

fn sphere(cfg: &SuiteConfig) -> Vec<R> {
    let n = cfg.sphere_samples;
    let sq = exact_samples_q(n, cfg.seed);
    let sc = exact_samples_c(n, cfg.seed);
    let q = Q8Action::new();
    let z = Z4Action::new();
    let mut out = Vec::new();
    let tol = 0.0;

    let aq = check_action_axioms(&q, &sq, tol);
    out.push(
        R::check(
            "sphere/01-q8-axioms",
            "action axioms for Q8 on S3",
            aq.passed(),
        )
        .metric("samples", aq.samples as f64)
        .metric("compatibility_checks", aq.compatibility_checks as f64)
        .witness(serde_json::to_value(&aq).expect("serializes")),
    );
    let fq = check_freeness(&q, &sq, tol);
    out.push(
        R::check("sphere/02-q8-free", "Q8 acts freely on S3", fq.passed())
            .metric("samples", fq.samples as f64)
            .metric("fixed_points", fq.fixed_points as f64)
            .metric("min_displacement", fq.min_displacement.unwrap_or(0.0))
            .witness(serde_json::to_value(&fq).expect("serializes")),
    );
    let az = check_action_axioms(&z, &sc, tol);
    out.push(
        R::check(
            "sphere/03-z4-axioms",
            "action axioms for Z4 on S3",
            az.passed(),
        )
        .metric("samples", az.samples as f64)
        .metric("compatibility_checks", az.compatibility_checks as f64)
        .witness(serde_json::to_value(&az).expect("serializes")),
    );
    let fz = check_freeness(&z, &sc, tol);
    out.push(
        R::check("sphere/04-z4-free", "Z4 acts freely on S3", fz.passed())
            .metric("samples", fz.samples as f64)
            .metric("fixed_points", fz.fixed_points as f64)
            .metric("min_displacement", fz.min_displacement.unwrap_or(0.0))
            .witness(serde_json::to_value(&fz).expect("serializes")),
    );
    let h4 = sc.iter().filter(|p| z4_act(4, p) == **p).count();
    out.push(
        R::check(
            "sphere/05-h4-identity",
            "h^4 is the identity",
            h4 == sc.len(),
        )
        .metric("exact_matches", h4 as f64),
    );

    let oq = sq.iter().filter(|x| orbit(&q, x, tol).len() == 8).count();
    let oz = sc.iter().filter(|p| orbit(&z, p, tol).len() == 4).count();
    out.push(
        R::check(
            "sphere/06-orbit-sizes",
            "orbits of a free action have |G| points",
            oq == sq.len() && oz == sc.len(),
        )
        .metric("q8_full_orbits", oq as f64)
        .metric("z4_full_orbits", oz as f64),
    );

    let corrupted = check_action_axioms(&CorruptedQ8Action::new(), &sq[..sq.len().min(100)], tol);
    out.push(
        R::check(
            "sphere/07-negative-control",
            "plumbing",
            corrupted.compatibility_failures > 0,
        )
        .metric(
            "compatibility_failures",
            corrupted.compatibility_failures as f64,
        ),
    );

    let one: ExactPointQ =
        SpherePointQ::new(crate::numeric::ExactQuaternion::one(), 0.0).expect("unit");
    let o1 = orbit(&q, &one, tol);
    let e0: ExactPointC = SpherePointC::new(
        GaussianRational::from_integers(1, 0),
        GaussianRational::from_integers(0, 0),
        0.0,
    )
    .expect("unit");
    let o2 = orbit(&z, &e0, tol);
    let expected: Vec<ExactPointC> = [(1, 0), (0, 1), (-1, 0), (0, -1)]
        .iter()
        .map(|&(re, im)| {
            SpherePointC::new(
                GaussianRational::from_integers(re, im),
                GaussianRational::from_integers(0, 0),
                0.0,
            )
            .expect("unit")
        })
        .collect();
    let same_set = o2.len() == 4 && expected.iter().all(|e| o2.iter().any(|p| p.same(e, 0.0)));
    out.push(
        R::check(
            "sphere/08-basic-orbits",
            "orbit of 1 is the eight units",
            o1.len() == 8 && same_set,
        )
        .metric("q8_orbit_of_one", o1.len() as f64)
        .metric("z4_orbit_of_e0", o2.len() as f64),
    );
    out
}

/// `|ω| ∈ {1, 2, 5}`, `θ ∈ {0, π/4, 1}`, `δ ∈ {0, ±|ω|/2}`.
pub fn pf_grid() -> Vec<(f64, f64, f64)> {
    let mut out = Vec::new();
    for w in [1.0, 2.0, 5.0] {
        for t in [0.0, std::f64::consts::FRAC_PI_4, 1.0] {
            for d in [0.0, w / 2.0, -w / 2.0] {
                out.push((w, t, d));
            }
        }
    }
    out
}

fn pseudofermion(cfg: &SuiteConfig) -> Vec<R> {
    let mut out = Vec::new();
    let grid = pf_grid();
    let mut passed = 0;
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for &(w, t, d) in &grid {
        match point_report(
            &SweepPoint {
                omega_abs: w,
                theta: t,
                delta: d,
                alpha: 0.0,
            },
            cfg.tol,
        ) {
            Ok(r) => {
                worst = worst
                    .max(r.relations.max_residual())
                    .max(r.mu_relations.max_residual())
                    .max(r.hamiltonian.number_form_residual)
                    .max(r.hamiltonian.mu3_form_residual)
                    .max(r.hamiltonian.eigenvalue_residual)
                    .max(r.eigen.biorthogonality)
                    .max(r.metric.max_residual());
                if r.passed {
                    passed += 1;
                } else {
                    failures.push(json!([w, t, d]));
                }
            }
            Err(e) => failures.push(json!({ "point": [w, t, d], "error": e.to_string() })),
        }
    }
    out.push(
        R::check(
            "pseudofermion/01-grid-identities",
            "pseudo-fermion identities across the parameter grid",
            passed == grid.len(),
        )
        .metric("points", grid.len() as f64)
        .metric("passed", passed as f64)
        .metric("max_residual", worst)
        .witness(json!({ "failures": failures })),
    );

    let mut group_ok = 0;
    for &(w, t, d) in &grid {
        let ok = PFParams::new(w, t, d)
            .ok()
            .and_then(|p| pauli_group_realization(&p, CLOSURE_TOL).ok())
            .is_some_and(|r| {
                r.group.order() == 16
                    && r.pauli_iso.is_some()
                    && r.q8.order() == 8
                    && r.q8_is_quaternion
            });
        group_ok += usize::from(ok);
    }
    out.push(
        R::check(
            "pseudofermion/02-group-realization",
            "u, xy, y generate a copy of P at every grid point",
            group_ok == grid.len(),
        )
        .metric("points", grid.len() as f64)
        .metric("isomorphic", group_ok as f64),
    );

    let mut worst_y: f64 = 0.0;
    let mut motion_ok = true;
    for &(w, t, d) in &grid {
        let p = PFParams::new(w, t, d).expect("grid is valid");
        for alpha in [0.0, 1.0, -3.0] {
            match constants_of_motion(&p, alpha, cfg.tol.max(1e-10)) {
                Ok(m) => {
                    worst_y = worst_y.max(m.commutator_y);
                    motion_ok &= m.passed;
                }
                Err(_) => motion_ok = false,
            }
        }
    }
    out.push(
        R::check(
            "pseudofermion/03-constants-of-motion",
            "y commutes with H' for every alpha",
            motion_ok && worst_y == 0.0,
        )
        .metric("max_commutator_y", worst_y),
    );

    let limit = PFParams::new(1.0, 0.0, 0.0).expect("valid");
    let [u, xy, _] = crate::pseudo_fermion::generators_u_xy_y(&limit);
    let minus_i = crate::numeric::Complex64::new(0.0, -1.0);
    let du = u.max_norm_diff(&crate::numeric::ComplexMatrix::pauli_x().scale(&minus_i));
    let dxy = xy.max_norm_diff(&crate::numeric::ComplexMatrix::pauli_y().scale(&minus_i));
    out.push(
        R::check(
            "pseudofermion/04-limit",
            "u -> -iX and xy -> -iY as theta, delta -> 0",
            du <= 1e-14 && dxy <= 1e-14,
        )
        .metric("u_residual", du)
        .metric("xy_residual", dxy),
    );

    let sample = PFParams::new(5.0, 0.0, 3.0).expect("valid");
    let h = hamiltonian(&sample, cfg.tol);
    let ev_ok = (h.eigenvalues[0][0] + 2.0).abs() <= cfg.tol
        && (h.eigenvalues[1][0] - 2.0).abs() <= cfg.tol;
    out.push(
        R::check(
            "pseudofermion/05-sample-eigenvalues",
            "H_eff has eigenvalues -Omega/2 and Omega/2",
            h.passed && ev_ok && !h.hermitian,
        )
        .metric("omega_cap", sample.omega_cap)
        .metric("lower", h.eigenvalues[0][0])
        .metric("upper", h.eigenvalues[1][0])
        .witness(json!({ "a": crate::pseudo_fermion::matrix_json(&build_pf(&sample).a) })),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn audit_bounds_shape() {
        assert_eq!(audit_bounds(100_000), vec![100, 1_000, 10_000, 100_000]);
        assert_eq!(audit_bounds(500), vec![100, 500]);
        assert_eq!(audit_bounds(50), vec![50]);
    }

    #[test]
    fn fast_suites_pass() {
        let cfg = SuiteConfig {
            sphere_samples: 60,
            coset_bound: 1000,
            ..Default::default()
        };
        for s in [
            Suite::PauliMatrix,
            Suite::Presentations,
            Suite::Products,
            Suite::Svk,
            Suite::Sphere,
            Suite::Pseudofermion,
        ] {
            let reports = run_suite(s, &cfg);
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(!r.failed(), "{}", r.summary_line());
            }
        }
    }
}
