//! The quaternion and cyclic actions on the unit 3-sphere, with exact
//! axiom, freeness and orbit checks.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::group::{zoo, ConcreteGroup};
use crate::numeric::{
    rational, unit_label, BigRational, ComplexField, ExactQuaternion, GaussianRational, Quaternion,
    RealField,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SphereError {
    #[error("{0} is not one of the eight quaternion units")]
    NotUnitGroupElement(String),
    #[error("point is not on the unit sphere")]
    NotOnSphere,
}

/// A unit quaternion. `‖x‖² = 1` exactly for rational coefficients and
/// within tolerance for doubles.
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePointQ<R>(Quaternion<R>);

pub type ExactPointQ = SpherePointQ<BigRational>;

impl<R: RealField> SpherePointQ<R> {
    pub fn new(q: Quaternion<R>, tol: f64) -> Result<Self, SphereError> {
        if q.norm_sq().approx_eq(&R::one(), tol) {
            Ok(Self(q))
        } else {
            Err(SphereError::NotOnSphere)
        }
    }

    pub fn quaternion(&self) -> &Quaternion<R> {
        &self.0
    }
}

/// A point `(z₀, z₁)` of `ℂ²` with `|z₀|² + |z₁|² = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePointC<S> {
    z0: S,
    z1: S,
}

pub type ExactPointC = SpherePointC<GaussianRational>;

fn norm_sq_c<S: ComplexField>(z0: &S, z1: &S) -> S {
    z0.conj() * z0.clone() + z1.conj() * z1.clone()
}

impl<S: ComplexField> SpherePointC<S> {
    pub fn new(z0: S, z1: S, tol: f64) -> Result<Self, SphereError> {
        if norm_sq_c(&z0, &z1).approx_eq(&S::one(), tol) {
            Ok(Self { z0, z1 })
        } else {
            Err(SphereError::NotOnSphere)
        }
    }

    pub fn z0(&self) -> &S {
        &self.z0
    }

    pub fn z1(&self) -> &S {
        &self.z1
    }

    pub fn neg(&self) -> Self {
        Self {
            z0: -self.z0.clone(),
            z1: -self.z1.clone(),
        }
    }
}

/// Points on which the sphere checks operate.
pub trait SpherePoint: Clone {
    fn on_sphere(&self, tol: f64) -> bool;
    /// Exact equality in the rational regime.
    fn same(&self, other: &Self, tol: f64) -> bool;
    fn distance(&self, other: &Self) -> f64;
}

impl<R: RealField> SpherePoint for SpherePointQ<R> {
    fn on_sphere(&self, tol: f64) -> bool {
        self.0.norm_sq().approx_eq(&R::one(), tol)
    }

    fn same(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    fn distance(&self, other: &Self) -> f64 {
        self.0.sub(&other.0).norm_sq().to_f64().sqrt()
    }
}

impl<S: ComplexField> SpherePoint for SpherePointC<S> {
    fn on_sphere(&self, tol: f64) -> bool {
        norm_sq_c(&self.z0, &self.z1).approx_eq(&S::one(), tol)
    }

    fn same(&self, other: &Self, tol: f64) -> bool {
        self.z0.approx_eq(&other.z0, tol) && self.z1.approx_eq(&other.z1, tol)
    }

    fn distance(&self, other: &Self) -> f64 {
        let d0 = (self.z0.clone() - other.z0.clone()).modulus();
        let d1 = (self.z1.clone() - other.z1.clone()).modulus();
        d0.hypot(d1)
    }
}

/// Left multiplication by a quaternion unit.
pub fn q8_act<R: RealField>(
    g: &Quaternion<R>,
    x: &SpherePointQ<R>,
) -> Result<SpherePointQ<R>, SphereError> {
    if unit_label(g).is_none() {
        return Err(SphereError::NotUnitGroupElement(format!("{g:?}")));
    }
    Ok(SpherePointQ(g.quat_mul(&x.0)))
}

fn times_i_pow<S: ComplexField>(z: &S, k: i64) -> S {
    (0..k.rem_euclid(4)).fold(z.clone(), |acc, _| acc * S::i())
}

/// `(z₀, z₁) ↦ (iⁿ z₀, (−i)ⁿ z₁)`.
pub fn z4_act<S: ComplexField>(n: i64, p: &SpherePointC<S>) -> SpherePointC<S> {
    SpherePointC {
        z0: times_i_pow(&p.z0, n),
        z1: times_i_pow(&p.z1, -n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub element: String,
    pub statement: String,
    pub value: String,
    pub holds: bool,
}

/// A finite group acting on sphere points, indexed by the group's element
/// indices.
pub trait SphereAction {
    type Point: SpherePoint;
    fn name(&self) -> &str;
    fn group(&self) -> &ConcreteGroup;
    fn act(&self, g: usize, x: &Self::Point) -> Self::Point;
    /// Sample-independent or sample-wide analytic freeness evidence.
    fn certificates(&self, _samples: &[Self::Point]) -> Vec<Certificate> {
        Vec::new()
    }
}

pub struct Q8Action {
    group: ConcreteGroup,
    units: Vec<ExactQuaternion>,
}

impl Q8Action {
    pub fn new() -> Self {
        let c = zoo::quaternion_closure();
        Self {
            units: c.elements,
            group: c.group,
        }
    }

    pub fn unit(&self, g: usize) -> &ExactQuaternion {
        &self.units[g]
    }
}

impl Default for Q8Action {
    fn default() -> Self {
        Self::new()
    }
}

impl SphereAction for Q8Action {
    type Point = ExactPointQ;

    fn name(&self) -> &str {
        "Q8 on S3 by left multiplication"
    }

    fn group(&self) -> &ConcreteGroup {
        &self.group
    }

    fn act(&self, g: usize, x: &ExactPointQ) -> ExactPointQ {
        SpherePointQ(self.units[g].quat_mul(&x.0))
    }

    /// `g·x = x` forces `(g − 1)·x = 0`, impossible for `x ≠ 0` when
    /// `‖g − 1‖² ≠ 0`.
    fn certificates(&self, _samples: &[ExactPointQ]) -> Vec<Certificate> {
        let one = ExactQuaternion::one();
        self.group
            .elements()
            .filter(|&g| g != self.group.identity())
            .map(|g| {
                let n = self.units[g].sub(&one).norm_sq();
                Certificate {
                    element: self.group.label(g).to_string(),
                    statement: "|g - 1|^2 != 0".into(),
                    value: n.to_string(),
                    holds: n != BigRational::from_integer(BigInt::from(0)),
                }
            })
            .collect()
    }
}

pub struct Z4Action {
    group: ConcreteGroup,
}

impl Z4Action {
    pub fn new() -> Self {
        Self { group: zoo::z4() }
    }
}

impl Default for Z4Action {
    fn default() -> Self {
        Self::new()
    }
}

impl SphereAction for Z4Action {
    type Point = ExactPointC;

    fn name(&self) -> &str {
        "Z4 on S3 by (i^n z0, (-i)^n z1)"
    }

    fn group(&self) -> &ConcreteGroup {
        &self.group
    }

    fn act(&self, g: usize, p: &ExactPointC) -> ExactPointC {
        z4_act(g as i64, p)
    }

    /// `h²(p) = −p` on every sample; a fixed point of `h²` would satisfy
    /// `p = −p`, which has no solution of norm one. Fixed points of `h` and
    /// `h³` are fixed by `h²`.
    fn certificates(&self, samples: &[ExactPointC]) -> Vec<Certificate> {
        let agree = samples.iter().filter(|p| z4_act(2, p) == p.neg()).count();
        vec![Certificate {
            element: "y^2".into(),
            statement: "h^2(p) = -p".into(),
            value: format!("{agree}/{}", samples.len()),
            holds: agree == samples.len(),
        }]
    }
}

/// Negative control: `g·x = g x g`. The identity axiom and norm hold but
/// compatibility fails.
pub struct CorruptedQ8Action {
    inner: Q8Action,
}

impl CorruptedQ8Action {
    pub fn new() -> Self {
        Self {
            inner: Q8Action::new(),
        }
    }
}

impl Default for CorruptedQ8Action {
    fn default() -> Self {
        Self::new()
    }
}

impl SphereAction for CorruptedQ8Action {
    type Point = ExactPointQ;

    fn name(&self) -> &str {
        "corrupted Q8 action g x g"
    }

    fn group(&self) -> &ConcreteGroup {
        self.inner.group()
    }

    fn act(&self, g: usize, x: &ExactPointQ) -> ExactPointQ {
        let u = self.inner.unit(g);
        SpherePointQ(u.quat_mul(&x.0).quat_mul(u))
    }
}

/// The trivial group acting by the identity.
pub struct TrivialAction<P> {
    group: ConcreteGroup,
    _point: std::marker::PhantomData<P>,
}

impl<P> TrivialAction<P> {
    pub fn new() -> Self {
        Self {
            group: zoo::cyclic(1),
            _point: std::marker::PhantomData,
        }
    }
}

impl<P> Default for TrivialAction<P> {
    fn default() -> Self {
        Self::new()
    }
}

impl<P: SpherePoint> SphereAction for TrivialAction<P> {
    type Point = P;

    fn name(&self) -> &str {
        "trivial group"
    }

    fn group(&self) -> &ConcreteGroup {
        &self.group
    }

    fn act(&self, _g: usize, x: &P) -> P {
        x.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub action: String,
    pub group_order: usize,
    pub samples: usize,
    pub identity_failures: usize,
    pub compatibility_checks: usize,
    pub compatibility_failures: usize,
    pub norm_failures: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.identity_failures == 0 && self.compatibility_failures == 0 && self.norm_failures == 0
    }
}

/// Checks `1·x = x`, `g·(h·x) = (gh)·x` and `‖g·x‖ = 1` over all group
/// elements and samples.
pub fn check_action_axioms<A: SphereAction>(
    action: &A,
    samples: &[A::Point],
    tol: f64,
) -> AxiomReport {
    let g = action.group();
    let n = g.order();
    let mut r = AxiomReport {
        action: action.name().to_string(),
        group_order: n,
        samples: samples.len(),
        identity_failures: 0,
        compatibility_checks: 0,
        compatibility_failures: 0,
        norm_failures: 0,
    };
    for x in samples {
        if !action.act(g.identity(), x).same(x, tol) {
            r.identity_failures += 1;
        }
        let images: Vec<A::Point> = g.elements().map(|h| action.act(h, x)).collect();
        r.norm_failures += images.iter().filter(|y| !y.on_sphere(tol)).count();
        for a in g.elements() {
            for (b, hx) in images.iter().enumerate() {
                r.compatibility_checks += 1;
                if !action.act(a, hx).same(&images[g.mul(a, b)], tol) {
                    r.compatibility_failures += 1;
                }
            }
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FreenessReport {
    pub action: String,
    pub group_order: usize,
    pub samples: usize,
    pub fixed_points: usize,
    /// Least distance `‖g·x − x‖` over non-identity `g`; `None` for the
    /// trivial group or no samples.
    pub min_displacement: Option<f64>,
    pub certificates: Vec<Certificate>,
    pub note: String,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.fixed_points == 0 && self.certificates.iter().all(|c| c.holds)
    }
}

/// Counts pairs `(g ≠ 1, x)` with `g·x = x`. Proper discontinuity is not
/// tested; it follows from freeness for finite groups on Hausdorff spaces.
pub fn check_freeness<A: SphereAction>(
    action: &A,
    samples: &[A::Point],
    tol: f64,
) -> FreenessReport {
    let g = action.group();
    let mut fixed = 0;
    let mut min_d: Option<f64> = None;
    for x in samples {
        for h in g.elements().filter(|&h| h != g.identity()) {
            let y = action.act(h, x);
            if y.same(x, tol) {
                fixed += 1;
            }
            let d = y.distance(x);
            min_d = Some(min_d.map_or(d, |m| m.min(d)));
        }
    }
    FreenessReport {
        action: action.name().to_string(),
        group_order: g.order(),
        samples: samples.len(),
        fixed_points: fixed,
        min_displacement: min_d,
        certificates: action.certificates(samples),
        note: "proper discontinuity follows from freeness of a finite group on a Hausdorff space"
            .into(),
    }
}

/// Distinct images of `x`, in group element order.
pub fn orbit<A: SphereAction>(action: &A, x: &A::Point, tol: f64) -> Vec<A::Point> {
    let mut out: Vec<A::Point> = Vec::new();
    for g in action.group().elements() {
        let y = action.act(g, x);
        if !out.iter().any(|z| z.same(&y, tol)) {
            out.push(y);
        }
    }
    out
}

/// `±3/5, ±4/5` in every ordered pair of coordinate slots: 48 points.
pub fn bundled_exact_family() -> Vec<ExactQuaternion> {
    let zero = rational(0, 1);
    let mut out = Vec::new();
    for p in 0..4 {
        for q in (0..4).filter(|&q| q != p) {
            for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut c = [zero.clone(), zero.clone(), zero.clone(), zero.clone()];
                c[p] = rational(3 * s, 5);
                c[q] = rational(4 * t, 5);
                let [a, b, cc, d] = c;
                out.push(Quaternion::new(a, b, cc, d));
            }
        }
    }
    out
}

/// `w² / ‖w‖²` is a unit quaternion for any nonzero `w`, and every rational
/// unit `q ≠ −1` arises from `w = 1 + q`.
fn unit_from(w: &ExactQuaternion) -> ExactQuaternion {
    let n = w.norm_sq();
    w.quat_mul(w).scale(&(rational(1, 1) / n))
}

/// `count` exact unit quaternions: the bundled family first, then seeded
/// random rational points.
pub fn exact_unit_quaternions(count: usize, seed: u64) -> Vec<ExactQuaternion> {
    let mut out: Vec<ExactQuaternion> = bundled_exact_family().into_iter().take(count).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let c: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-12..=12));
        if c == [0; 4] {
            continue;
        }
        out.push(unit_from(&Quaternion::from_integers(
            c[0], c[1], c[2], c[3],
        )));
    }
    out
}

pub fn exact_samples_q(count: usize, seed: u64) -> Vec<ExactPointQ> {
    exact_unit_quaternions(count, seed)
        .into_iter()
        .map(SpherePointQ)
        .collect()
}

/// The same points read as `(a + bi, c + di)`.
pub fn exact_samples_c(count: usize, seed: u64) -> Vec<ExactPointC> {
    exact_unit_quaternions(count, seed)
        .into_iter()
        .map(|q| {
            let [a, b, c, d] = q.coefficients().map(Clone::clone);
            SpherePointC {
                z0: GaussianRational::new(a, b),
                z1: GaussianRational::new(c, d),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Complex64;

    fn pq(a: i64, b: i64, c: i64, d: i64) -> ExactPointQ {
        SpherePointQ::new(Quaternion::from_integers(a, b, c, d), 0.0).unwrap()
    }

    fn pc(z0: (i64, i64), z1: (i64, i64)) -> ExactPointC {
        SpherePointC::new(
            GaussianRational::from_integers(z0.0, z0.1),
            GaussianRational::from_integers(z1.0, z1.1),
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn q8_act_examples() {
        let x = SpherePointQ::new(exact_unit_quaternions(60, 1)[55].clone(), 0.0).unwrap();
        let minus_one = Quaternion::from_integers(-1, 0, 0, 0);
        assert_eq!(
            q8_act(&minus_one, &x).unwrap().quaternion(),
            &-x.quaternion()
        );
        assert_eq!(
            q8_act(&ExactQuaternion::i(), &pq(1, 0, 0, 0)).unwrap(),
            pq(0, 1, 0, 0)
        );
        assert_eq!(
            q8_act(&ExactQuaternion::i(), &pq(0, 0, 1, 0)).unwrap(),
            pq(0, 0, 0, 1)
        );
        assert!(matches!(
            q8_act(&Quaternion::from_integers(1, 1, 0, 0), &x),
            Err(SphereError::NotUnitGroupElement(_))
        ));
        assert_eq!(
            SpherePointQ::new(ExactQuaternion::from_integers(1, 1, 0, 0), 0.0),
            Err(SphereError::NotOnSphere)
        );
    }

    #[test]
    fn z4_act_examples() {
        assert_eq!(z4_act(1, &pc((1, 0), (0, 0))), pc((0, 1), (0, 0)));
        let p = exact_samples_c(50, 3).pop().unwrap();
        assert_eq!(z4_act(4, &p), p);
        assert_eq!(z4_act(2, &p), p.neg());
        assert_eq!(z4_act(-1, &p), z4_act(3, &p));
        let f =
            SpherePointC::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8), 1e-12).unwrap();
        assert!(z4_act(4, &f).same(&f, 1e-15));
        assert!(SpherePointC::new(
            GaussianRational::from_integers(1, 0),
            GaussianRational::from_integers(1, 0),
            0.0
        )
        .is_err());
    }

    #[test]
    fn samples_are_exact_units() {
        let s = exact_unit_quaternions(200, 7);
        assert_eq!(s.len(), 200);
        assert!(s.iter().all(|q| q.norm_sq() == rational(1, 1)));
        assert_eq!(s, exact_unit_quaternions(200, 7));
        assert_ne!(s[100..], exact_unit_quaternions(200, 8)[100..]);
        assert!(exact_samples_c(200, 7).iter().all(|p| p.on_sphere(0.0)));
    }

    #[test]
    fn axioms_and_freeness() {
        let q = Q8Action::new();
        let sq = exact_samples_q(100, 11);
        assert!(check_action_axioms(&q, &sq, 0.0).passed());
        let fq = check_freeness(&q, &sq, 0.0);
        assert!(fq.passed());
        assert_eq!(fq.certificates.len(), 7);
        let z = Z4Action::new();
        let sc = exact_samples_c(100, 11);
        assert!(check_action_axioms(&z, &sc, 0.0).passed());
        assert!(check_freeness(&z, &sc, 0.0).passed());
    }

    #[test]
    fn corrupted_action_fails_compatibility() {
        let r = check_action_axioms(&CorruptedQ8Action::new(), &exact_samples_q(60, 2), 0.0);
        assert_eq!(r.identity_failures, 0);
        assert_eq!(r.norm_failures, 0);
        assert!(r.compatibility_failures > 0);
    }

    #[test]
    fn trivial_group_is_vacuously_free() {
        let t = TrivialAction::<ExactPointQ>::new();
        let r = check_freeness(&t, &exact_samples_q(10, 0), 0.0);
        assert!(r.passed());
        assert_eq!(r.min_displacement, None);
    }

    #[test]
    fn orbits() {
        let q = Q8Action::new();
        let o = orbit(&q, &pq(1, 0, 0, 0), 0.0);
        assert_eq!(o.len(), 8);
        for u in [
            ExactQuaternion::one(),
            ExactQuaternion::i(),
            ExactQuaternion::j(),
            ExactQuaternion::k(),
        ] {
            assert!(o.iter().any(|p| *p.quaternion() == u));
            assert!(o.iter().any(|p| *p.quaternion() == -&u));
        }
        let z = Z4Action::new();
        let oz = orbit(&z, &pc((1, 0), (0, 0)), 0.0);
        assert_eq!(
            oz,
            vec![
                pc((1, 0), (0, 0)),
                pc((0, 1), (0, 0)),
                pc((-1, 0), (0, 0)),
                pc((0, -1), (0, 0))
            ]
        );
    }
}
