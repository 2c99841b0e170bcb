//! 2×2 matrices over either scalar regime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::{ComplexField, GaussianRational};
use super::NumericError;

/// A 2×2 matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix2<S> {
    pub m: [[S; 2]; 2],
}

pub type ExactMatrix = Matrix2<GaussianRational>;
pub type ComplexMatrix = Matrix2<Complex64>;

/// A column vector in C².
pub type Vector2<S> = [S; 2];

impl<S: ComplexField> Matrix2<S> {
    pub fn new(a11: S, a12: S, a21: S, a22: S) -> Self {
        Self {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn from_parts(entries: [[(i64, i64); 2]; 2]) -> Self {
        let e = |r: usize, c: usize| S::from_parts(entries[r][c].0, entries[r][c].1);
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn scalar(s: S) -> Self {
        Self::new(s.clone(), S::zero(), S::zero(), s)
    }

    pub fn pauli_x() -> Self {
        Self::from_parts([[(0, 0), (1, 0)], [(1, 0), (0, 0)]])
    }

    pub fn pauli_y() -> Self {
        Self::from_parts([[(0, 0), (0, -1)], [(0, 1), (0, 0)]])
    }

    pub fn pauli_z() -> Self {
        Self::from_parts([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]])
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.m[row][col]
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.m.iter().flat_map(|r| r.iter())
    }

    pub fn mat_mul(&self, rhs: &Self) -> Self {
        let a = &self.m;
        let b = &rhs.m;
        let e = |r: usize, c: usize| {
            a[r][0].clone() * b[0][c].clone() + a[r][1].clone() * b[1][c].clone()
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn add_mat(&self, rhs: &Self) -> Self {
        self.zip(rhs, |x, y| x + y)
    }

    pub fn sub_mat(&self, rhs: &Self) -> Self {
        self.zip(rhs, |x, y| x - y)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| s.clone() * x)
    }

    pub fn map(&self, f: impl Fn(S) -> S) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(f(a), f(b), f(c), f(d))
    }

    fn zip(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        let [[p, q], [r, s]] = rhs.m.clone();
        Self::new(f(a, p), f(b, q), f(c, r), f(d, s))
    }

    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = self.m.clone();
        a * d - b * c
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(a.conj(), c.conj(), b.conj(), d.conj())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.mat_mul(self))
    }

    /// `xy − yx`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mat_mul(rhs).sub_mat(&rhs.mat_mul(self))
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.mat_mul(rhs).add_mat(&rhs.mat_mul(self))
    }

    pub fn apply(&self, v: &Vector2<S>) -> Vector2<S> {
        let row =
            |r: usize| self.m[r][0].clone() * v[0].clone() + self.m[r][1].clone() * v[1].clone();
        [row(0), row(1)]
    }

    /// Entrywise max-norm of `self − rhs`.
    pub fn max_norm_diff(&self, rhs: &Self) -> f64 {
        self.sub_mat(rhs).max_norm()
    }

    pub fn max_norm(&self) -> f64 {
        self.entries().map(|e| e.modulus()).fold(0.0, f64::max)
    }

    /// Entrywise comparison; exact when `S` is exact.
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.entries()
            .zip(rhs.entries())
            .all(|(x, y)| x.approx_eq(y, tol))
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&Self::identity(), tol)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.approx_eq(&Self::zero(), tol)
    }
}

impl ExactMatrix {
    pub fn inverse(&self) -> Result<Self, NumericError> {
        let det_inv = self.det().recip().ok_or(NumericError::SingularMatrix)?;
        let [[a, b], [c, d]] = self.m.clone();
        Ok(Self::new(d, -b, -c, a).scale(&det_inv))
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let e = |r: usize, c: usize| self.m[r][c].to_complex64();
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl ComplexMatrix {
    /// Inverse, refusing matrices with `|det| <= tol`.
    pub fn inverse(&self, tol: f64) -> Result<Self, NumericError> {
        let det = self.det();
        if det.norm() <= tol {
            return Err(NumericError::SingularMatrix);
        }
        let [[a, b], [c, d]] = self.m;
        Ok(Self::new(d, -b, -c, a).scale(&(1.0 / det)))
    }

    /// Eigenvalues from the characteristic polynomial, ordered by real part
    /// (then imaginary part).
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let half_tr = self.trace() / 2.0;
        let disc = (half_tr * half_tr - self.det()).sqrt();
        let mut ev = [half_tr - disc, half_tr + disc];
        ev.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
        ev
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        // Singular values squared are the eigenvalues of the Hermitian A†A.
        let h = self.adjoint().mat_mul(self);
        let half_tr = h.trace().re / 2.0;
        let det = h.det().re;
        let disc = (half_tr * half_tr - det).max(0.0).sqrt();
        (half_tr + disc).max(0.0).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|e| e.re.is_finite() && e.im.is_finite())
    }
}

impl<S: ComplexField> Mul for &Matrix2<S> {
    type Output = Matrix2<S>;
    fn mul(self, rhs: Self) -> Matrix2<S> {
        self.mat_mul(rhs)
    }
}

impl<S: ComplexField> Mul for Matrix2<S> {
    type Output = Matrix2<S>;
    fn mul(self, rhs: Self) -> Matrix2<S> {
        self.mat_mul(&rhs)
    }
}

impl<S: ComplexField> Add for &Matrix2<S> {
    type Output = Matrix2<S>;
    fn add(self, rhs: Self) -> Matrix2<S> {
        self.add_mat(rhs)
    }
}

impl<S: ComplexField> Sub for &Matrix2<S> {
    type Output = Matrix2<S>;
    fn sub(self, rhs: Self) -> Matrix2<S> {
        self.sub_mat(rhs)
    }
}

impl<S: ComplexField> Neg for &Matrix2<S> {
    type Output = Matrix2<S>;
    fn neg(self) -> Matrix2<S> {
        self.map(|x| -x)
    }
}

impl<S: ComplexField + fmt::Display> fmt::Display for Matrix2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Names an exact matrix of the form `c·σ`, `c ∈ {±1, ±i}`, `σ ∈ {I, X, Y, Z}`.
pub fn pauli_label(m: &ExactMatrix) -> Option<String> {
    let basis = [
        ("I", ExactMatrix::identity()),
        ("X", ExactMatrix::pauli_x()),
        ("Y", ExactMatrix::pauli_y()),
        ("Z", ExactMatrix::pauli_z()),
    ];
    let phases = [("", (1, 0)), ("-", (-1, 0)), ("i", (0, 1)), ("-i", (0, -1))];
    for (name, sigma) in &basis {
        for (prefix, (re, im)) in &phases {
            if sigma.scale(&GaussianRational::from_integers(*re, *im)) == *m {
                return Some(format!("{prefix}{name}"));
            }
        }
    }
    None
}
