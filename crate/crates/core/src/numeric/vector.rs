//! Vectors in C² and the null-space routine for 2×2 complex matrices.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, Vector2};
use super::NumericError;

pub type CVec2 = Vector2<Complex64>;

/// `⟨u, v⟩ = Σ conj(u_k) v_k`, antilinear in the first slot.
pub fn inner(u: &CVec2, v: &CVec2) -> Complex64 {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

pub fn norm(v: &CVec2) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

pub fn scale(v: &CVec2, s: Complex64) -> CVec2 {
    [v[0] * s, v[1] * s]
}

pub fn add(u: &CVec2, v: &CVec2) -> CVec2 {
    [u[0] + v[0], u[1] + v[1]]
}

pub fn sub(u: &CVec2, v: &CVec2) -> CVec2 {
    [u[0] - v[0], u[1] - v[1]]
}

/// Max-norm distance between two vectors.
pub fn max_diff(u: &CVec2, v: &CVec2) -> f64 {
    (u[0] - v[0]).norm().max((u[1] - v[1]).norm())
}

/// The rank-one matrix `u v†`.
pub fn outer(u: &CVec2, v: &CVec2) -> ComplexMatrix {
    ComplexMatrix::new(
        u[0] * v[0].conj(),
        u[0] * v[1].conj(),
        u[1] * v[0].conj(),
        u[1] * v[1].conj(),
    )
}

/// Unit vector spanning the null space of `m`, if `m` is rank deficient
/// within `tol`.
///
/// The sign convention makes the first component with modulus above `tol`
/// real and positive. For a matrix whose entries all vanish within `tol`,
/// `(1, 0)` is returned.
pub fn kernel_2x2(m: &ComplexMatrix, tol: f64) -> Result<CVec2, NumericError> {
    let rows = [m.m[0], m.m[1]];
    let row_norm = |r: &[Complex64; 2]| (r[0].norm_sqr() + r[1].norm_sqr()).sqrt();
    let (big, big_norm) = if row_norm(&rows[0]) >= row_norm(&rows[1]) {
        (rows[0], row_norm(&rows[0]))
    } else {
        (rows[1], row_norm(&rows[1]))
    };
    if big_norm <= tol {
        return Ok([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
    }
    // With the dominant row r normalised, (-r₂, r₁) is orthogonal to it under
    // the bilinear pairing, and the other row's residual is det / ‖r‖.
    if m.det().norm() > tol * big_norm {
        return Err(NumericError::FullRank);
    }
    let v = [-big[1] / big_norm, big[0] / big_norm];
    Ok(fix_phase(&v, tol))
}

/// Rescales `v` to unit norm with its first significant component real
/// positive.
pub fn fix_phase(v: &CVec2, tol: f64) -> CVec2 {
    let n = norm(v);
    let v = scale(v, Complex64::new(1.0 / n, 0.0));
    let lead = if v[0].norm() > tol { v[0] } else { v[1] };
    let phase = lead.conj() / lead.norm();
    scale(&v, phase)
}
