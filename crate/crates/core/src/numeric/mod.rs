//! Exact and floating scalar, matrix, and quaternion arithmetic.

pub mod matrix;
pub mod quaternion;
pub mod scalar;
pub mod vector;

pub use matrix::{pauli_label, ComplexMatrix, ExactMatrix, Matrix2, Vector2};
pub use quaternion::{unit_label, ExactQuaternion, Quaternion};
pub use scalar::{rational, ComplexField, ExactScalar, GaussianRational, RealField, DEFAULT_TOL};
pub use vector::{kernel_2x2, CVec2};

pub use num_complex::Complex64;
pub use num_rational::BigRational;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the zero quaternion has no inverse")]
    ZeroQuaternion,
    #[error("matrix has full rank; no null vector")]
    FullRank,
}
