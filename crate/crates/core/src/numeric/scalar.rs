//! Scalar types for the two arithmetic regimes.
//!
//! [`GaussianRational`] is exact: equality is structural and every field
//! operation is closed. [`Complex64`] is the floating regime; comparisons go
//! through an explicit tolerance. Code that must work in both regimes is
//! written against [`ComplexField`] (or [`RealField`] for quaternion
//! coefficients) and never mixes the two.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Default tolerance for approximate equality in the floating regime.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Complex-number-like scalars usable as matrix entries.
pub trait ComplexField:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit.
    fn i() -> Self;
    fn from_parts(re: i64, im: i64) -> Self;
    fn conj(&self) -> Self;
    /// Modulus as a double, used for reporting and tolerance checks.
    fn modulus(&self) -> f64;
    /// Exact equality for exact scalars; `|x - y| <= tol` otherwise.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    fn is_exact() -> bool;
}

/// Real scalars usable as quaternion coefficients.
pub trait RealField: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
    fn is_exact() -> bool;
}

impl RealField for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ratio_to_f64(self)
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn is_exact() -> bool {
        true
    }
}

impl RealField for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn is_exact() -> bool {
        false
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN),
    }
}

/// Builds the rational `num / den`. Panics on a zero denominator.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A complex number with arbitrary-precision rational parts.
///
/// `BigRational` keeps both parts in lowest terms, so derived equality and
/// hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(BigRational::from_i64(re), BigRational::from_i64(im))
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re² + im²`, exact.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self.clone() * r)
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", self.im)
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl ComplexField for GaussianRational {
    fn zero() -> Self {
        Self::from_integers(0, 0)
    }

    fn one() -> Self {
        Self::from_integers(1, 0)
    }

    fn i() -> Self {
        Self::from_integers(0, 1)
    }

    fn from_parts(re: i64, im: i64) -> Self {
        Self::from_integers(re, im)
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    fn modulus(&self) -> f64 {
        self.to_complex64().norm()
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn is_exact() -> bool {
        true
    }
}

impl ComplexField for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn i() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn from_parts(re: i64, im: i64) -> Self {
        Complex64::new(re as f64, im as f64)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }

    fn is_exact() -> bool {
        false
    }
}

/// Marker for scalar types whose equality is exact and hashable.
pub trait ExactScalar: ComplexField + Eq + Hash {}

impl ExactScalar for GaussianRational {}
