//! Quaternions `a·1 + b·i + c·j + d·k` over an exact or floating real field.

use std::fmt;
use std::ops::{Mul, Neg};

use num_rational::BigRational;

use super::scalar::RealField;
use super::NumericError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quaternion<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

pub type ExactQuaternion = Quaternion<BigRational>;

impl<R: RealField> Quaternion<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            R::from_i64(a),
            R::from_i64(b),
            R::from_i64(c),
            R::from_i64(d),
        )
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_integers(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_integers(0, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0, 0, 0)
    }

    /// Hamilton product.
    pub fn quat_mul(&self, y: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&y.a, &y.b, &y.c, &y.d);
        let m = |x: &R, y: &R| x.clone() * y.clone();
        Self::new(
            m(a1, a2) - m(b1, b2) - m(c1, c2) - m(d1, d2),
            m(a1, b2) + m(b1, a2) + m(c1, d2) - m(d1, c2),
            m(a1, c2) - m(b1, d2) + m(c1, a2) + m(d1, b2),
            m(a1, d2) + m(b1, c2) - m(c1, b2) + m(d1, a2),
        )
    }

    pub fn conj(&self) -> Self {
        Self::new(
            self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Squared Euclidean norm `a² + b² + c² + d²`.
    pub fn norm_sq(&self) -> R {
        let sq = |x: &R| x.clone() * x.clone();
        sq(&self.a) + sq(&self.b) + sq(&self.c) + sq(&self.d)
    }

    pub fn scale(&self, s: &R) -> Self {
        let m = |x: &R| x.clone() * s.clone();
        Self::new(m(&self.a), m(&self.b), m(&self.c), m(&self.d))
    }

    /// `conj(x) / ‖x‖²`.
    pub fn quat_inverse(&self) -> Result<Self, NumericError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(NumericError::ZeroQuaternion);
        }
        let inv_n = R::one() / n;
        Ok(self.conj().scale(&inv_n))
    }

    pub fn sub(&self, y: &Self) -> Self {
        Self::new(
            self.a.clone() - y.a.clone(),
            self.b.clone() - y.b.clone(),
            self.c.clone() - y.c.clone(),
            self.d.clone() - y.d.clone(),
        )
    }

    pub fn approx_eq(&self, y: &Self, tol: f64) -> bool {
        self.a.approx_eq(&y.a, tol)
            && self.b.approx_eq(&y.b, tol)
            && self.c.approx_eq(&y.c, tol)
            && self.d.approx_eq(&y.d, tol)
    }

    pub fn coefficients(&self) -> [&R; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl<R: RealField> Mul for &Quaternion<R> {
    type Output = Quaternion<R>;
    fn mul(self, rhs: Self) -> Quaternion<R> {
        self.quat_mul(rhs)
    }
}

impl<R: RealField> Neg for &Quaternion<R> {
    type Output = Quaternion<R>;
    fn neg(self) -> Quaternion<R> {
        Quaternion::new(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }
}

impl<R: RealField + fmt::Display> fmt::Display for Quaternion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

/// Names the eight units `±1, ±i, ±j, ±k`.
pub fn unit_label<R: RealField>(q: &Quaternion<R>) -> Option<&'static str> {
    const NAMES: [(&str, &str); 4] = [("1", "-1"), ("i", "-i"), ("j", "-j"), ("k", "-k")];
    let coeffs = q.coefficients();
    let zero = R::zero();
    let one = R::one();
    let minus_one = -R::one();
    let mut hit = None;
    for (pos, c) in coeffs.iter().enumerate() {
        if **c == zero {
            continue;
        }
        if hit.is_some() {
            return None;
        }
        if **c == one {
            hit = Some(NAMES[pos].0);
        } else if **c == minus_one {
            hit = Some(NAMES[pos].1);
        } else {
            return None;
        }
    }
    hit
}
