//! Pseudo-fermion operators of the two-level non-Hermitian atom, the Pauli
//! group they generate, and the biorthogonal eigen/metric structure.
//!
//! All arithmetic is in doubles; identities are checked as residual norms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{
    close_under_product, find_isomorphism, is_isomorphic, zoo, ConcreteGroup, GroupError, Subgroup,
};
use crate::numeric::vector::{self, fix_phase, inner, kernel_2x2, outer, CVec2};
use crate::numeric::{Complex64, ComplexMatrix, NumericError, DEFAULT_TOL};

/// Entrywise tolerance when closing floating matrices into a group.
pub const CLOSURE_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PfError {
    #[error("invalid regime: {0}")]
    InvalidRegime(String),
    #[error("degenerate normalization: |<phi0, psi0>| = {0}")]
    DegenerateNormalization(f64),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `(|ω|, θ, δ)` with `Ω = √(|ω|² − δ²) > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PFParams {
    pub omega_abs: f64,
    pub theta: f64,
    pub delta: f64,
    pub omega_cap: f64,
}

impl PFParams {
    pub fn new(omega_abs: f64, theta: f64, delta: f64) -> Result<Self, PfError> {
        if ![omega_abs, theta, delta].iter().all(|v| v.is_finite()) {
            return Err(PfError::InvalidRegime("parameters must be finite".into()));
        }
        if omega_abs <= 0.0 {
            return Err(PfError::InvalidRegime(format!(
                "|omega| = {omega_abs} must be positive"
            )));
        }
        let omega_cap_sq = omega_abs * omega_abs - delta * delta;
        if omega_cap_sq <= 0.0 {
            return Err(PfError::InvalidRegime(format!(
                "|omega| = {omega_abs} must exceed |delta| = {} for a real positive Omega",
                delta.abs()
            )));
        }
        Ok(Self {
            omega_abs,
            theta,
            delta,
            omega_cap: omega_cap_sq.sqrt(),
        })
    }

    /// `ω = |ω| e^{iθ}`.
    pub fn omega(&self) -> Complex64 {
        Complex64::from_polar(self.omega_abs, self.theta)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PFPair {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
}

/// The explicit pair with `{a, b} = 1`, `a² = b² = 0` and `b ≠ a†` once
/// `δ ≠ 0`.
pub fn build_pf(p: &PFParams) -> PFPair {
    let w = c(p.omega_abs, 0.0);
    let big = p.omega_cap;
    let e_plus = Complex64::from_polar(1.0, p.theta);
    let e_minus = e_plus.conj();
    let s = c(1.0 / (2.0 * big), 0.0);
    let a =
        ComplexMatrix::new(-w, -e_minus * c(big, p.delta), e_plus * c(big, -p.delta), w).scale(&s);
    let b =
        ComplexMatrix::new(-w, e_minus * c(big, -p.delta), -e_plus * c(big, p.delta), w).scale(&s);
    PFPair { a, b }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub anticommutator_residual: f64,
    pub a_squared_residual: f64,
    pub b_squared_residual: f64,
    pub passed: bool,
}

impl RelationReport {
    pub fn max_residual(&self) -> f64 {
        self.anticommutator_residual
            .max(self.a_squared_residual)
            .max(self.b_squared_residual)
    }
}

/// Residuals of `{a, b} − 1`, `a²` and `b²`.
pub fn verify_pf_relations(pf: &PFPair, tol: f64) -> RelationReport {
    let anti =
        pf.a.anticommutator(&pf.b)
            .max_norm_diff(&ComplexMatrix::identity());
    let a2 = pf.a.mat_mul(&pf.a).max_norm();
    let b2 = pf.b.mat_mul(&pf.b).max_norm();
    RelationReport {
        anticommutator_residual: anti,
        a_squared_residual: a2,
        b_squared_residual: b2,
        passed: anti <= tol && a2 <= tol && b2 <= tol,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PauliTriple {
    pub mu1: ComplexMatrix,
    pub mu2: ComplexMatrix,
    pub mu3: ComplexMatrix,
}

/// `μ₁ = b + a`, `μ₂ = i(b − a)`, `μ₃ = [a, b]`.
pub fn mu_operators(pf: &PFPair) -> PauliTriple {
    PauliTriple {
        mu1: &pf.b + &pf.a,
        mu2: (&pf.b - &pf.a).scale(&c(0.0, 1.0)),
        mu3: pf.a.commutator(&pf.b),
    }
}

/// `ρ_j = μ_j†`.
pub fn rho_operators(pf: &PFPair) -> PauliTriple {
    let mu = mu_operators(pf);
    PauliTriple {
        mu1: mu.mu1.adjoint(),
        mu2: mu.mu2.adjoint(),
        mu3: mu.mu3.adjoint(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TripleReport {
    pub square_residuals: [f64; 3],
    /// `μ₁μ₂ − iμ₃`, `μ₂μ₃ − iμ₁`, `μ₃μ₁ − iμ₂`.
    pub product_residuals: [f64; 3],
    /// `μ₁μ₂μ₃ − i`.
    pub triple_product_residual: f64,
}

impl TripleReport {
    pub fn max_residual(&self) -> f64 {
        self.square_residuals
            .iter()
            .chain(&self.product_residuals)
            .fold(self.triple_product_residual, |m, &r| m.max(r))
    }
}

impl PauliTriple {
    pub fn relations(&self) -> TripleReport {
        let one = ComplexMatrix::identity();
        let i = c(0.0, 1.0);
        let m = [&self.mu1, &self.mu2, &self.mu3];
        TripleReport {
            square_residuals: m.map(|x| x.mat_mul(x).max_norm_diff(&one)),
            product_residuals: [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
                .map(|(p, q, r)| m[p].mat_mul(m[q]).max_norm_diff(&m[r].scale(&i))),
            triple_product_residual: self
                .mu1
                .mat_mul(&self.mu2)
                .mat_mul(&self.mu3)
                .max_norm_diff(&one.scale(&i)),
        }
    }
}

/// `½[[−iδ, ω̄], [ω, iδ]]`.
pub fn h_eff(p: &PFParams) -> ComplexMatrix {
    let w = p.omega();
    ComplexMatrix::new(c(0.0, -p.delta), w.conj(), w, c(0.0, p.delta)).scale(&c(0.5, 0.0))
}

pub type MatrixJson = [[[f64; 2]; 2]; 2];

pub fn matrix_json(m: &ComplexMatrix) -> MatrixJson {
    m.m.map(|row| row.map(|z| [z.re, z.im]))
}

pub fn vector_json(v: &CVec2) -> [[f64; 2]; 2] {
    v.map(|z| [z.re, z.im])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HamiltonianReport {
    pub h_eff: MatrixJson,
    /// `‖H − Ω(ba − ½)‖`.
    pub number_form_residual: f64,
    /// `‖H + (Ω/2)μ₃‖`.
    pub mu3_form_residual: f64,
    /// Eigenvalues sorted by real part, each `[re, im]`.
    pub eigenvalues: [[f64; 2]; 2],
    /// Distance of the eigenvalues from `∓Ω/2`.
    pub eigenvalue_residual: f64,
    pub trace_residual: f64,
    /// `det H + Ω²/4`.
    pub det_residual: f64,
    pub hermitian: bool,
    pub passed: bool,
}

/// Builds `H_eff` and checks it against its two operator forms.
pub fn hamiltonian(p: &PFParams, tol: f64) -> HamiltonianReport {
    let h = h_eff(p);
    let pf = build_pf(p);
    let big = p.omega_cap;
    let number =
        pf.b.mat_mul(&pf.a)
            .sub_mat(&ComplexMatrix::identity().scale(&c(0.5, 0.0)))
            .scale(&c(big, 0.0));
    let mu3 = mu_operators(&pf).mu3.scale(&c(-big / 2.0, 0.0));
    let ev = h.eigenvalues();
    let ev_res = (ev[0] - c(-big / 2.0, 0.0))
        .norm()
        .max((ev[1] - c(big / 2.0, 0.0)).norm());
    let r = HamiltonianReport {
        h_eff: matrix_json(&h),
        number_form_residual: h.max_norm_diff(&number),
        mu3_form_residual: h.max_norm_diff(&mu3),
        eigenvalues: ev.map(|z| [z.re, z.im]),
        eigenvalue_residual: ev_res,
        trace_residual: h.trace().norm(),
        det_residual: (h.det() + c(big * big / 4.0, 0.0)).norm(),
        hermitian: h.approx_eq(&h.adjoint(), tol),
        passed: false,
    };
    HamiltonianReport {
        passed: [
            r.number_form_residual,
            r.mu3_form_residual,
            r.eigenvalue_residual,
            r.trace_residual,
            r.det_residual,
        ]
        .iter()
        .all(|&x| x <= tol),
        ..r
    }
}

/// The group `P_μ` generated by `u = iμ₃`, `xy = iμ₂`, `y = i·1`.
#[derive(Clone, Debug)]
pub struct Realization {
    pub group: ConcreteGroup,
    pub elements: Vec<ComplexMatrix>,
    pub u: ComplexMatrix,
    pub xy: ComplexMatrix,
    pub y: ComplexMatrix,
    /// Isomorphism onto the exact matrix Pauli group, if one exists.
    pub pauli_iso: Option<Vec<usize>>,
    pub q8: Subgroup,
    pub q8_is_quaternion: bool,
    pub z4: Subgroup,
}

pub fn generators_u_xy_y(p: &PFParams) -> [ComplexMatrix; 3] {
    let mu = mu_operators(&build_pf(p));
    let i = c(0.0, 1.0);
    [
        mu.mu3.scale(&i),
        mu.mu2.scale(&i),
        ComplexMatrix::identity().scale(&i),
    ]
}

/// Closes `{u, xy, y}` with entrywise tolerance `tol` and compares the result
/// with the exact Pauli group and its quaternion subgroup.
pub fn pauli_group_realization(p: &PFParams, tol: f64) -> Result<Realization, PfError> {
    let gens = generators_u_xy_y(p);
    let names = ["u", "xy", "y"];
    let closure = close_under_product(&gens, |x, y| x.mat_mul(y), |x, y| x.approx_eq(y, tol), 64)?;
    let labels = closure
        .words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            if i == closure.group.identity() {
                "1".to_string()
            } else {
                w.iter().map(|&k| names[k]).collect::<Vec<_>>().join(" ")
            }
        })
        .collect();
    let group = closure
        .group
        .with_labels(labels)?
        .with_provenance("pseudo-fermion closure");
    let gi = group.generators().to_vec();
    let q8 = Subgroup::generated(&group, &gi[..2]);
    let z4 = Subgroup::generated(&group, &gi[2..]);
    let [u, xy, y] = gens;
    Ok(Realization {
        pauli_iso: find_isomorphism(&group, &zoo::pauli()),
        q8_is_quaternion: is_isomorphic(&q8.group, &zoo::quaternion()),
        group,
        elements: closure.elements,
        u,
        xy,
        y,
        q8,
        z4,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MotionReport {
    pub alpha: f64,
    /// `‖[H′, y]‖`.
    pub commutator_y: f64,
    /// `‖[H′, u]‖`; nonzero for generic parameters.
    pub commutator_u: f64,
    /// Coefficients of `μ₂` and `μ₃` in `H′`, each `[re, im]`.
    pub span_coefficients: [[f64; 2]; 2],
    pub expected_coefficients: [f64; 2],
    pub coefficient_residual: f64,
    pub span_residual: f64,
    pub passed: bool,
}

fn frobenius(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    a.adjoint().mat_mul(b).trace()
}

/// `H′ = −(Ω/2)μ₃ + αμ₂`: checks that `y` commutes with it and recovers its
/// coordinates in `span{μ₂, μ₃}` from the Gram system.
pub fn constants_of_motion(p: &PFParams, alpha: f64, tol: f64) -> Result<MotionReport, PfError> {
    let mu = mu_operators(&build_pf(p));
    let big = p.omega_cap;
    let h = mu
        .mu3
        .scale(&c(-big / 2.0, 0.0))
        .add_mat(&mu.mu2.scale(&c(alpha, 0.0)));
    let [u, _, y] = generators_u_xy_y(p);
    let basis = [&mu.mu2, &mu.mu3];
    let gram = ComplexMatrix::new(
        frobenius(basis[0], basis[0]),
        frobenius(basis[0], basis[1]),
        frobenius(basis[1], basis[0]),
        frobenius(basis[1], basis[1]),
    );
    let rhs = [frobenius(basis[0], &h), frobenius(basis[1], &h)];
    let coeffs = gram.inverse(tol)?.apply(&rhs);
    let fitted = basis[0]
        .scale(&coeffs[0])
        .add_mat(&basis[1].scale(&coeffs[1]));
    let expected = [alpha, -big / 2.0];
    let coefficient_residual = (coeffs[0] - c(expected[0], 0.0))
        .norm()
        .max((coeffs[1] - c(expected[1], 0.0)).norm());
    let commutator_y = h.commutator(&y).max_norm();
    let span_residual = h.max_norm_diff(&fitted);
    Ok(MotionReport {
        alpha,
        commutator_y,
        commutator_u: h.commutator(&u).max_norm(),
        span_coefficients: coeffs.map(|z| [z.re, z.im]),
        expected_coefficients: expected,
        coefficient_residual,
        span_residual,
        passed: commutator_y <= tol && span_residual <= tol && coefficient_residual <= tol,
    })
}

/// Vacua, excited vectors and number operator. `Ψ₀` is rescaled so that
/// `⟨φ₀, Ψ₀⟩ = 1`; `φ₀` keeps the unit-norm phase convention.
#[derive(Clone, Debug, PartialEq)]
pub struct PFEigensystem {
    pub pf: PFPair,
    pub phi: [CVec2; 2],
    pub psi: [CVec2; 2],
    pub n: ComplexMatrix,
}

pub fn eigensystem(pf: &PFPair, tol: f64) -> Result<PFEigensystem, PfError> {
    let phi0 = fix_phase(&kernel_2x2(&pf.a, tol)?, tol);
    let psi0_raw = fix_phase(&kernel_2x2(&pf.b.adjoint(), tol)?, tol);
    let pairing = inner(&phi0, &psi0_raw);
    if pairing.norm() <= tol {
        return Err(PfError::DegenerateNormalization(pairing.norm()));
    }
    let psi0 = vector::scale(&psi0_raw, pairing.inv());
    let phi1 = pf.b.apply(&phi0);
    let psi1 = pf.a.adjoint().apply(&psi0);
    Ok(PFEigensystem {
        pf: pf.clone(),
        phi: [phi0, phi1],
        psi: [psi0, psi1],
        n: pf.b.mat_mul(&pf.a),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenReport {
    pub a_phi0: f64,
    pub bdag_psi0: f64,
    /// `‖Nφₙ − nφₙ‖` for `n = 0, 1`.
    pub number_phi: [f64; 2],
    /// `‖N†Ψₙ − nΨₙ‖`.
    pub number_psi: [f64; 2],
    /// `‖aφ₁ − φ₀‖`, `‖b†Ψ₁ − Ψ₀‖`.
    pub ladder: [f64; 2],
    /// `max |⟨φₖ, Ψₙ⟩ − δₖₙ|`.
    pub biorthogonality: f64,
    pub passed: bool,
}

impl PFEigensystem {
    pub fn check(&self, tol: f64) -> EigenReport {
        let a = &self.pf.a;
        let bdag = self.pf.b.adjoint();
        let ndag = self.n.adjoint();
        let zero = [c(0.0, 0.0); 2];
        let eig = |m: &ComplexMatrix, v: &CVec2, k: f64| {
            vector::max_diff(&m.apply(v), &vector::scale(v, c(k, 0.0)))
        };
        let mut bio: f64 = 0.0;
        for k in 0..2 {
            for n in 0..2 {
                let want = if k == n { 1.0 } else { 0.0 };
                bio = bio.max((inner(&self.phi[k], &self.psi[n]) - c(want, 0.0)).norm());
            }
        }
        let r = EigenReport {
            a_phi0: vector::max_diff(&a.apply(&self.phi[0]), &zero),
            bdag_psi0: vector::max_diff(&bdag.apply(&self.psi[0]), &zero),
            number_phi: [
                eig(&self.n, &self.phi[0], 0.0),
                eig(&self.n, &self.phi[1], 1.0),
            ],
            number_psi: [eig(&ndag, &self.psi[0], 0.0), eig(&ndag, &self.psi[1], 1.0)],
            ladder: [
                vector::max_diff(&a.apply(&self.phi[1]), &self.phi[0]),
                vector::max_diff(&bdag.apply(&self.psi[1]), &self.psi[0]),
            ],
            biorthogonality: bio,
            passed: false,
        };
        let worst = [r.a_phi0, r.bdag_psi0, r.biorthogonality]
            .into_iter()
            .chain(r.number_phi)
            .chain(r.number_psi)
            .chain(r.ladder)
            .fold(0.0, f64::max);
        EigenReport {
            passed: worst <= tol,
            ..r
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricReport {
    pub s_phi: MatrixJson,
    pub s_psi: MatrixJson,
    pub self_adjoint: [f64; 2],
    /// Least eigenvalue of `S_φ` and of `S_Ψ`.
    pub min_eigenvalues: [f64; 2],
    /// `‖S_φS_Ψ − 1‖`.
    pub inverse_residual: f64,
    /// `max ‖S_φΨₙ − φₙ‖`, `max ‖S_Ψφₙ − Ψₙ‖`.
    pub mapping: [f64; 2],
    /// `‖S_ΨN − N†S_Ψ‖`, `‖S_φN† − NS_φ‖`.
    pub intertwining: [f64; 2],
    /// `‖S_φ‖`, `‖S_Ψ‖` and their bounds `Σ‖φₙ‖²`, `Σ‖Ψₙ‖²`.
    pub norms: [f64; 2],
    pub norm_bounds: [f64; 2],
    pub passed: bool,
}

impl MetricReport {
    pub fn max_residual(&self) -> f64 {
        self.self_adjoint
            .into_iter()
            .chain(self.mapping)
            .chain(self.intertwining)
            .fold(self.inverse_residual, f64::max)
    }
}

/// `S_φ = Σ φₙφₙ†` and `S_Ψ = Σ ΨₙΨₙ†` with their defining properties.
pub fn metric_operators(es: &PFEigensystem, tol: f64) -> MetricReport {
    let s_phi = outer(&es.phi[0], &es.phi[0]).add_mat(&outer(&es.phi[1], &es.phi[1]));
    let s_psi = outer(&es.psi[0], &es.psi[0]).add_mat(&outer(&es.psi[1], &es.psi[1]));
    let n = &es.n;
    let ndag = n.adjoint();
    let min_eig = |m: &ComplexMatrix| {
        m.eigenvalues()
            .iter()
            .map(|z| z.re)
            .fold(f64::INFINITY, f64::min)
    };
    let map_res = |s: &ComplexMatrix, from: &[CVec2; 2], to: &[CVec2; 2]| {
        (0..2)
            .map(|k| vector::max_diff(&s.apply(&from[k]), &to[k]))
            .fold(0.0, f64::max)
    };
    let sq = |v: &CVec2| vector::norm(v).powi(2);
    let r = MetricReport {
        s_phi: matrix_json(&s_phi),
        s_psi: matrix_json(&s_psi),
        self_adjoint: [
            s_phi.max_norm_diff(&s_phi.adjoint()),
            s_psi.max_norm_diff(&s_psi.adjoint()),
        ],
        min_eigenvalues: [min_eig(&s_phi), min_eig(&s_psi)],
        inverse_residual: s_phi
            .mat_mul(&s_psi)
            .max_norm_diff(&ComplexMatrix::identity()),
        mapping: [
            map_res(&s_phi, &es.psi, &es.phi),
            map_res(&s_psi, &es.phi, &es.psi),
        ],
        intertwining: [
            s_psi.mat_mul(n).max_norm_diff(&ndag.mat_mul(&s_psi)),
            s_phi.mat_mul(&ndag).max_norm_diff(&n.mat_mul(&s_phi)),
        ],
        norms: [s_phi.operator_norm(), s_psi.operator_norm()],
        norm_bounds: [
            sq(&es.phi[0]) + sq(&es.phi[1]),
            sq(&es.psi[0]) + sq(&es.psi[1]),
        ],
        passed: false,
    };
    let passed = r.max_residual() <= tol
        && r.min_eigenvalues.iter().all(|&e| e > tol)
        && (0..2).all(|k| r.norms[k] <= r.norm_bounds[k] + tol);
    MetricReport { passed, ..r }
}

/// `Φ(t) = Σₙ e^{−iEₙt} ⟨Ψₙ, Φ(0)⟩ φₙ` with `E₀ = −Ω/2`, `E₁ = Ω/2`.
pub fn evolve(p: &PFParams, state: &CVec2, t: f64) -> Result<CVec2, PfError> {
    let es = eigensystem(&build_pf(p), DEFAULT_TOL)?;
    let energies = [-p.omega_cap / 2.0, p.omega_cap / 2.0];
    let mut out = [c(0.0, 0.0); 2];
    for ((phi, psi), e) in es.phi.iter().zip(&es.psi).zip(energies) {
        let coeff = inner(psi, state) * Complex64::from_polar(1.0, -e * t);
        out = vector::add(&out, &vector::scale(phi, coeff));
    }
    Ok(out)
}

/// `‖i Φ̇(t) − H Φ(t)‖` with a central difference of step `h`.
pub fn evolution_residual(p: &PFParams, state: &CVec2, t: f64, h: f64) -> Result<f64, PfError> {
    let fwd = evolve(p, state, t + h)?;
    let bwd = evolve(p, state, t - h)?;
    let now = evolve(p, state, t)?;
    let deriv = vector::scale(&vector::sub(&fwd, &bwd), c(0.0, 1.0 / (2.0 * h)));
    Ok(vector::max_diff(&deriv, &h_eff(p).apply(&now)))
}

/// One entry of a parameter sweep.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub omega_abs: f64,
    pub theta: f64,
    pub delta: f64,
    #[serde(default)]
    pub alpha: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointReport {
    pub params: PFParams,
    pub a: MatrixJson,
    pub b: MatrixJson,
    pub relations: RelationReport,
    pub mu_relations: TripleReport,
    pub rho_relations: TripleReport,
    pub hamiltonian: HamiltonianReport,
    pub group_order: usize,
    pub isomorphic_to_pauli: bool,
    pub q8_order: usize,
    pub q8_is_quaternion: bool,
    pub z4_order: usize,
    pub u: MatrixJson,
    pub xy: MatrixJson,
    pub motion: MotionReport,
    pub eigen: EigenReport,
    pub metric: MetricReport,
    pub phase_convention: String,
    pub passed: bool,
}

/// Every per-point check in one report.
pub fn point_report(point: &SweepPoint, tol: f64) -> Result<PointReport, PfError> {
    let p = PFParams::new(point.omega_abs, point.theta, point.delta)?;
    let pf = build_pf(&p);
    let mu = mu_operators(&pf);
    let rho = rho_operators(&pf);
    let real = pauli_group_realization(&p, CLOSURE_TOL)?;
    let es = eigensystem(&pf, tol)?;
    let r = PointReport {
        params: p,
        a: matrix_json(&pf.a),
        b: matrix_json(&pf.b),
        relations: verify_pf_relations(&pf, tol),
        mu_relations: mu.relations(),
        rho_relations: rho.relations(),
        hamiltonian: hamiltonian(&p, tol),
        group_order: real.group.order(),
        isomorphic_to_pauli: real.pauli_iso.is_some(),
        q8_order: real.q8.order(),
        q8_is_quaternion: real.q8_is_quaternion,
        z4_order: real.z4.order(),
        u: matrix_json(&real.u),
        xy: matrix_json(&real.xy),
        motion: constants_of_motion(&p, point.alpha, tol)?,
        eigen: es.check(tol),
        metric: metric_operators(&es, tol),
        phase_convention: "phi0 and psi0 unit norm with first significant component real positive; psi0 then rescaled so <phi0, psi0> = 1".into(),
        passed: false,
    };
    let passed = r.relations.passed
        && r.mu_relations.max_residual() <= tol
        && r.rho_relations.max_residual() <= tol
        && r.hamiltonian.passed
        && r.group_order == 16
        && r.isomorphic_to_pauli
        && r.q8_order == 8
        && r.q8_is_quaternion
        && r.z4_order == 4
        && r.motion.passed
        && r.eigen.passed
        && r.metric.passed;
    Ok(PointReport { passed, ..r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(e: [[(f64, f64); 2]; 2]) -> ComplexMatrix {
        ComplexMatrix::new(
            c(e[0][0].0, e[0][0].1),
            c(e[0][1].0, e[0][1].1),
            c(e[1][0].0, e[1][0].1),
            c(e[1][1].0, e[1][1].1),
        )
    }

    fn p(w: f64, t: f64, d: f64) -> PFParams {
        PFParams::new(w, t, d).unwrap()
    }

    #[test]
    fn build_examples() {
        let q = p(5.0, 0.0, 3.0);
        assert_eq!(q.omega_cap, 4.0);
        let a = build_pf(&q).a;
        let want =
            cm([[(-5.0, 0.0), (-4.0, -3.0)], [(4.0, -3.0), (5.0, 0.0)]]).scale(&c(0.125, 0.0));
        assert!(a.approx_eq(&want, 1e-15));
        let pf = build_pf(&p(1.0, 0.0, 0.0));
        assert!(pf.a.approx_eq(
            &cm([[(-0.5, 0.0), (-0.5, 0.0)], [(0.5, 0.0), (0.5, 0.0)]]),
            1e-15
        ));
        assert!(pf.b.approx_eq(
            &cm([[(-0.5, 0.0), (0.5, 0.0)], [(-0.5, 0.0), (0.5, 0.0)]]),
            1e-15
        ));
        assert!(matches!(
            PFParams::new(1.0, 0.0, 1.0),
            Err(PfError::InvalidRegime(_))
        ));
        assert!(matches!(
            PFParams::new(1.0, 0.0, 2.0),
            Err(PfError::InvalidRegime(_))
        ));
        assert!(matches!(
            PFParams::new(0.0, 0.0, 0.0),
            Err(PfError::InvalidRegime(_))
        ));
    }

    #[test]
    fn relation_controls() {
        assert!(verify_pf_relations(&build_pf(&p(5.0, 0.0, 3.0)), 1e-12).passed);
        let a = cm([[(0.0, 0.0), (1.0, 0.0)], [(0.0, 0.0), (0.0, 0.0)]]);
        assert!(verify_pf_relations(&PFPair { b: a.adjoint(), a }, 1e-12).passed);
        let z = ComplexMatrix::zero();
        let r = verify_pf_relations(&PFPair { a: z.clone(), b: z }, 1e-12);
        assert!(!r.passed);
        assert_eq!(r.anticommutator_residual, 1.0);
    }

    #[test]
    fn mu_triple_at_the_limit_point() {
        let mu = mu_operators(&build_pf(&p(1.0, 0.0, 0.0)));
        assert!(mu
            .mu2
            .approx_eq(&ComplexMatrix::pauli_y().scale(&c(-1.0, 0.0)), 1e-15));
        let t = mu_operators(&build_pf(&p(5.0, 0.0, 3.0))).relations();
        assert!(t.max_residual() < 1e-12, "{t:?}");
    }

    #[test]
    fn hamiltonian_examples() {
        let r = hamiltonian(&p(5.0, 0.0, 3.0), 1e-12);
        assert!(r.passed, "{r:?}");
        assert!(
            (r.eigenvalues[0][0] + 2.0).abs() < 1e-12 && (r.eigenvalues[1][0] - 2.0).abs() < 1e-12
        );
        assert!(h_eff(&p(5.0, 0.0, 3.0)).approx_eq(
            &cm([[(0.0, -1.5), (2.5, 0.0)], [(2.5, 0.0), (0.0, 1.5)]]),
            1e-15
        ));
        assert!(!r.hermitian);
        let r1 = hamiltonian(&p(1.0, 0.0, 0.0), 1e-12);
        assert!(h_eff(&p(1.0, 0.0, 0.0))
            .approx_eq(&ComplexMatrix::pauli_x().scale(&c(0.5, 0.0)), 1e-15));
        assert!(r1.hermitian && r1.passed);
    }

    #[test]
    fn realization_and_limit() {
        let r = pauli_group_realization(&p(5.0, 0.0, 3.0), CLOSURE_TOL).unwrap();
        assert_eq!(r.group.order(), 16);
        assert!(r.pauli_iso.is_some());
        assert_eq!(r.q8.order(), 8);
        assert!(r.q8_is_quaternion);
        assert_eq!(r.z4.order(), 4);
        let l = pauli_group_realization(&p(1.0, 0.0, 0.0), CLOSURE_TOL).unwrap();
        let minus_i = c(0.0, -1.0);
        assert!(l
            .u
            .approx_eq(&ComplexMatrix::pauli_x().scale(&minus_i), 1e-14));
        assert!(l
            .xy
            .approx_eq(&ComplexMatrix::pauli_y().scale(&minus_i), 1e-14));
    }

    #[test]
    fn motion_examples() {
        let m = constants_of_motion(&p(5.0, 0.0, 3.0), 0.0, 1e-12).unwrap();
        assert!(m.passed, "{m:?}");
        assert!(
            (m.span_coefficients[1][0] + 2.0).abs() < 1e-12
                && m.span_coefficients[0][0].abs() < 1e-12
        );
        let m1 = constants_of_motion(&p(2.0, 1.0, -1.0), 1.0, 1e-12).unwrap();
        assert!(m1.passed);
        assert!(m1.commutator_u > 1e-3);
    }

    #[test]
    fn eigensystem_examples() {
        let es = eigensystem(&build_pf(&p(1.0, 0.0, 0.0)), 1e-12).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let v = [c(s, 0.0), c(-s, 0.0)];
        assert!(vector::max_diff(&es.phi[0], &v) < 1e-15);
        assert!(vector::max_diff(&es.psi[0], &v) < 1e-15);
        let m = metric_operators(&es, 1e-12);
        assert!(m.passed);
        assert!(ComplexMatrix::new(
            c(m.s_phi[0][0][0], 0.0),
            c(m.s_phi[0][1][0], 0.0),
            c(m.s_phi[1][0][0], 0.0),
            c(m.s_phi[1][1][0], 0.0)
        )
        .is_identity(1e-15));
        let es5 = eigensystem(&build_pf(&p(5.0, 0.0, 3.0)), 1e-12).unwrap();
        let r = es5.check(1e-12);
        assert!(r.passed, "{r:?}");
        let m5 = metric_operators(&es5, 1e-12);
        assert!(m5.passed, "{m5:?}");
        assert!(matches!(
            eigensystem(
                &PFPair {
                    a: ComplexMatrix::identity(),
                    b: ComplexMatrix::identity()
                },
                1e-12
            ),
            Err(PfError::Numeric(NumericError::FullRank))
        ));
    }

    #[test]
    fn evolution() {
        let q = p(5.0, 0.0, 3.0);
        let state = [c(0.3, 0.1), c(-0.2, 0.7)];
        assert!(vector::max_diff(&evolve(&q, &state, 0.0).unwrap(), &state) < 1e-12);
        let es = eigensystem(&build_pf(&q), 1e-12).unwrap();
        let t = 0.7;
        let e1 = evolve(&q, &es.phi[1], t).unwrap();
        assert!(
            vector::max_diff(
                &e1,
                &vector::scale(&es.phi[1], Complex64::from_polar(1.0, -2.0 * t))
            ) < 1e-12
        );
        let period = evolve(&q, &state, 2.0 * std::f64::consts::PI / q.omega_cap).unwrap();
        assert!(vector::max_diff(&period, &vector::scale(&state, c(-1.0, 0.0))) < 1e-12);
        assert!(evolution_residual(&q, &state, 0.4, 1e-5).unwrap() < 1e-6);
    }

    #[test]
    fn sweep_point_parses_and_passes() {
        let pt: SweepPoint =
            serde_json::from_str(r#"{"omega_abs": 2, "theta": 0.5, "delta": 1}"#).unwrap();
        assert_eq!(pt.alpha, 0.0);
        let r = point_report(&pt, 1e-10).unwrap();
        assert!(r.passed, "{r:#?}");
    }
}
