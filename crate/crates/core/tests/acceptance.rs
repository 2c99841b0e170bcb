//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use pauli_core::group::{
    central_product_quotient, fiber_product, find_isomorphism, involutions, is_isomorphic,
    verify_isomorphism, zoo, ConcreteGroup, GroupHom,
};
use pauli_core::numeric::{Complex64, ComplexMatrix, ExactMatrix, GaussianRational};
use pauli_core::presentation::{
    bundled, group_from_coset_table, presentation_order_audit, todd_coxeter, CosetStatus,
    Presentation,
};
use pauli_core::pseudo_fermion::{
    build_pf, constants_of_motion, eigensystem, generators_u_xy_y, hamiltonian, metric_operators,
    mu_operators, pauli_group_realization, verify_pf_relations, PFParams, CLOSURE_TOL,
};
use pauli_core::report::Status;
use pauli_core::sphere::{
    check_action_axioms, check_freeness, exact_samples_c, exact_samples_q, orbit, z4_act, Q8Action,
    Z4Action,
};
use pauli_core::suites::{
    pf_grid, run_suite, svk_route_amalgam, svk_route_free, Suite, SuiteConfig,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let within = took < limit;
    Outcome {
        pass: o.pass && within,
        detail: format!(
            "{}; {:.3}s (limit {}s)",
            o.detail,
            took.as_secs_f64(),
            limit.as_secs_f64()
        ),
    }
}

fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_integers(re, im)
}

/// The sixteen products of `{±1, ±i}` with `{I, X, Y, Z}`, built without
/// closure.
fn scalar_times_pauli() -> Vec<ExactMatrix> {
    let mats = [
        ExactMatrix::identity(),
        ExactMatrix::pauli_x(),
        ExactMatrix::pauli_y(),
        ExactMatrix::pauli_z(),
    ];
    let scalars = [gi(1, 0), gi(-1, 0), gi(0, 1), gi(0, -1)];
    scalars
        .iter()
        .flat_map(|s| mats.iter().map(move |m| m.scale(s)))
        .collect()
}

fn criterion_1() -> Outcome {
    timed(Duration::from_secs(1), || {
        let c = zoo::pauli_closure();
        let (x, y, z) = (
            ExactMatrix::pauli_x(),
            ExactMatrix::pauli_y(),
            ExactMatrix::pauli_z(),
        );
        let one = ExactMatrix::identity();
        let xyz = x.mat_mul(&y).mat_mul(&z);
        let expected = scalar_times_pauli();
        let same_set = c.elements.len() == 16 && expected.iter().all(|m| c.elements.contains(m));
        let central = c.elements.iter().all(|g| g.mat_mul(&xyz) == xyz.mat_mul(g));
        let order4 = xyz.pow(4) == one && xyz.pow(2) != one && xyz.pow(3) != one;
        let rels = [
            x.pow(2),
            y.pow(2),
            z.pow(2),
            y.mat_mul(&z).pow(4),
            z.mat_mul(&x).pow(4),
            x.mat_mul(&y).pow(4),
            xyz.pow(4),
        ]
        .iter()
        .all(|m| *m == one);
        let ok = same_set && xyz == ExactMatrix::scalar(gi(0, 1)) && central && order4 && rels;
        outcome(
            ok,
            format!(
                "order {}, XYZ central of order 4: {}, relations hold: {rels}",
                c.elements.len(),
                central && order4
            ),
        )
    })
}

fn realized(p: &Presentation) -> Option<(usize, ConcreteGroup)> {
    let t = todd_coxeter(p, &[], 10_000).ok()?;
    if !t.is_complete() || !t.verify(p) {
        return None;
    }
    Some((t.coset_count(), group_from_coset_table(&t).ok()?))
}

fn criterion_2() -> Outcome {
    let cases = [
        ("z4", bundled::z4(), 4, zoo::z4()),
        ("q8", bundled::q8(), 8, zoo::quaternion()),
        ("d8", bundled::d8(), 8, zoo::dihedral8()),
        ("pauli_uxy", bundled::pauli_uxy(), 16, zoo::pauli()),
        ("seifquo", bundled::seifquo(), 16, zoo::pauli()),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, p, want, target) in cases {
        let start = Instant::now();
        let r = realized(&p);
        let witness = r.as_ref().and_then(|(_, g)| {
            find_isomorphism(g, &target).map(|m| verify_isomorphism(g, &target, &m))
        });
        let fast = start.elapsed() < Duration::from_secs(1);
        let order = r.as_ref().map_or(0, |(n, _)| *n);
        ok &= order == want && witness == Some(true) && fast;
        parts.push(format!("{name}={order}"));
    }
    outcome(ok, format!("{} with verified witnesses", parts.join(" ")))
}

fn criterion_3() -> Outcome {
    let pauli = zoo::pauli();
    let a = realized(&svk_route_amalgam());
    let b = realized(&svk_route_free());
    match (a, b) {
        (Some((na, ga)), Some((nb, gb))) => {
            let wa =
                find_isomorphism(&ga, &pauli).is_some_and(|m| verify_isomorphism(&ga, &pauli, &m));
            let wb =
                find_isomorphism(&gb, &pauli).is_some_and(|m| verify_isomorphism(&gb, &pauli, &m));
            outcome(
                na == 16 && nb == 16 && wa && wb,
                format!(
                    "amalgam route {na}, free-product route {nb}, both isomorphic to P: {}",
                    wa && wb
                ),
            )
        }
        _ => outcome(false, "a route did not enumerate"),
    }
}

fn criterion_4() -> Outcome {
    let pauli = zoo::pauli();
    let z4 = zoo::z4();
    let y2 = z4.element("y^2").expect("label");
    let q8 = zoo::quaternion();
    let d8 = zoo::dihedral8();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g, z) in [
        ("Q8", &q8, q8.element("-1").expect("label")),
        ("D8", &d8, d8.element("r^2").expect("label")),
    ] {
        match central_product_quotient(g, z, &z4, y2) {
            Ok(cp) => {
                let iso = find_isomorphism(&cp.group, &pauli)
                    .is_some_and(|m| verify_isomorphism(&cp.group, &pauli, &m));
                ok &= cp.group.order() == 16 && iso;
                parts.push(format!("{name}oZ4 order {} iso {iso}", cp.group.order()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{name}: {e}"));
            }
        }
    }
    let (iq, id) = (involutions(&q8), involutions(&d8));
    let distinct = !is_isomorphic(&q8, &d8);
    ok &= distinct && iq == 1 && id == 5;
    outcome(
        ok,
        format!(
            "{}; Q8~D8 {}, involutions {iq} vs {id}",
            parts.join(", "),
            !distinct
        ),
    )
}

fn criterion_5() -> Outcome {
    let z2 = zoo::cyclic(2);
    let q8 = zoo::quaternion();
    let z4 = zoo::z4();
    let built = GroupHom::from_generator_images(q8, z2.clone(), &[1, 0]).and_then(|e1| {
        GroupHom::from_generator_images(z4, z2, &[1]).and_then(|e2| fiber_product(&e1, &e2))
    });
    match built {
        Ok(f) => {
            let c = &f.checks;
            outcome(
                c.all() && f.group().order() == 16 && f.group().audit().is_ok(),
                format!(
                    "order {}, (a) {} (b) {} (c) {}",
                    f.group().order(),
                    c.projections_surjective,
                    c.kernels_match && c.kernel_product,
                    c.quotient_is_target
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn criterion_6() -> Outcome {
    timed(Duration::from_secs(5), || {
        let n = 1000;
        let sq = exact_samples_q(n, 2024);
        let sc = exact_samples_c(n, 2024);
        let (q, z) = (Q8Action::new(), Z4Action::new());
        let axioms = check_action_axioms(&q, &sq, 0.0).passed()
            && check_action_axioms(&z, &sc, 0.0).passed();
        let free = check_freeness(&q, &sq, 0.0).passed() && check_freeness(&z, &sc, 0.0).passed();
        let h4 = sc.iter().all(|p| z4_act(4, p) == *p);
        let orbits = sq.iter().all(|x| orbit(&q, x, 0.0).len() == 8)
            && sc.iter().all(|p| orbit(&z, p, 0.0).len() == 4);
        outcome(axioms && free && h4 && orbits, format!("{n} exact samples per action: axioms {axioms}, free {free}, h^4 = 1 {h4}, full orbits {orbits}"))
    })
}

fn criterion_7() -> Outcome {
    const TOL: f64 = 1e-10;
    timed(Duration::from_secs(1), || {
        let grid = pf_grid();
        let mut worst: f64 = 0.0;
        let mut ok = true;
        for &(w, t, d) in &grid {
            let Ok(p) = PFParams::new(w, t, d) else {
                ok = false;
                continue;
            };
            let pf = build_pf(&p);
            let rel = verify_pf_relations(&pf, TOL);
            let mu = mu_operators(&pf).relations();
            let h = hamiltonian(&p, TOL);
            let Ok(es) = eigensystem(&pf, TOL) else {
                ok = false;
                continue;
            };
            let e = es.check(TOL);
            let m = metric_operators(&es, TOL);
            let residuals = [
                rel.max_residual(),
                mu.max_residual(),
                h.number_form_residual,
                h.mu3_form_residual,
                h.eigenvalue_residual,
                e.biorthogonality,
                m.inverse_residual,
                m.intertwining[0],
                m.intertwining[1],
            ];
            worst = residuals.iter().fold(worst, |a, &b| a.max(b));
            let bounds = (0..2).all(|k| m.norms[k] <= m.norm_bounds[k] + TOL);
            ok &= residuals.iter().all(|&r| r <= TOL) && bounds && e.passed && m.passed;
        }
        let sample = hamiltonian(&PFParams::new(5.0, 0.0, 3.0).expect("valid"), TOL);
        let pm2 = (sample.eigenvalues[0][0] + 2.0).abs() <= TOL
            && (sample.eigenvalues[1][0] - 2.0).abs() <= TOL
            && sample.eigenvalues.iter().all(|z| z[1].abs() <= TOL);
        outcome(
            ok && pm2,
            format!(
                "{} grid points, max residual {worst:.2e}, (5,0,3) eigenvalues ±2: {pm2}",
                grid.len()
            ),
        )
    })
}

fn criterion_8() -> Outcome {
    let exact = zoo::pauli();
    let q8 = zoo::quaternion();
    let grid = pf_grid();
    let mut ok = true;
    let mut worst_y: f64 = 0.0;
    for &(w, t, d) in &grid {
        let p = PFParams::new(w, t, d).expect("valid grid");
        match pauli_group_realization(&p, CLOSURE_TOL) {
            Ok(r) => {
                let witness = r
                    .pauli_iso
                    .as_ref()
                    .is_some_and(|m| verify_isomorphism(&r.group, &exact, m));
                let q8_ok = r.q8.order() == 8 && is_isomorphic(&r.q8.group, &q8);
                ok &= r.group.order() == 16 && witness && q8_ok;
            }
            Err(_) => ok = false,
        }
        for alpha in [0.0, 1.0, -3.0] {
            match constants_of_motion(&p, alpha, 1e-10) {
                Ok(m) => worst_y = worst_y.max(m.commutator_y),
                Err(_) => ok = false,
            }
        }
    }
    ok &= worst_y == 0.0;
    outcome(
        ok,
        format!(
            "{} points: order 16 and isomorphic, <u, xy> = Q8, max |[H', y]| = {worst_y:e}",
            grid.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let p = PFParams::new(1.0, 0.0, 0.0).expect("valid");
    let [u, xy, _] = generators_u_xy_y(&p);
    let minus_i = Complex64::new(0.0, -1.0);
    let du = u.max_norm_diff(&ComplexMatrix::pauli_x().scale(&minus_i));
    let dxy = xy.max_norm_diff(&ComplexMatrix::pauli_y().scale(&minus_i));
    outcome(
        du <= 1e-14 && dxy <= 1e-14,
        format!("|u + iX| = {du:e}, |xy + iY| = {dxy:e}"),
    )
}

fn criterion_10() -> Outcome {
    let bounds = [100, 1_000, 10_000, 100_000];
    let audit = match presentation_order_audit(&bundled::pauli_xyz(), &bounds, Some(16)) {
        Ok(a) => a,
        Err(e) => return outcome(false, e.to_string()),
    };
    let cfg = SuiteConfig {
        coset_bound: 100_000,
        ..Default::default()
    };
    let report = run_suite(Suite::Presentations, &cfg)
        .into_iter()
        .find(|r| r.check_id == "presentations/09-xyz-audit");
    let recorded = report
        .as_ref()
        .is_some_and(|r| r.status == Status::Recorded);
    let steps_ok = audit.steps.iter().all(|s| s.live_cosets <= s.bound)
        && audit
            .steps
            .iter()
            .rev()
            .skip(1)
            .all(|s| s.status == CosetStatus::BoundExceeded);
    let consistent = match audit.order {
        Some(n) => n % 16 == 0 && audit.divisible == Some(true),
        None => {
            audit.steps.len() == bounds.len()
                && audit
                    .steps
                    .iter()
                    .all(|s| s.status == CosetStatus::BoundExceeded)
        }
    };
    let trajectory: Vec<String> = audit
        .steps
        .iter()
        .map(|s| format!("{}:{:?}", s.bound, s.status))
        .collect();
    outcome(
        recorded && steps_ok && consistent,
        format!(
            "RECORDED {recorded}; order {:?}; trajectory [{}]",
            audit.order,
            trajectory.join(", ")
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("matrix closure of X, Y, Z", criterion_1),
        ("coset enumeration of bundled presentations", criterion_2),
        ("two amalgamation routes agree", criterion_3),
        ("central products with Z4", criterion_4),
        ("fiber product over Z2", criterion_5),
        ("sphere actions", criterion_6),
        ("pseudo-fermion identities", criterion_7),
        ("group realization stability", criterion_8),
        ("limit consistency", criterion_9),
        ("three-generator presentation audit", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {} {name}: {}",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
