//! Spectrality of self-affine measures `mu_{M,D}` generated by an expanding
//! integer matrix `M` and a consecutive collinear digit set
//! `D = {0, 1, ..., q-1} v`.
//!
//! The exact linear algebra in [`linalg`] is generic over the scalar type;
//! everything above it works over arbitrary-precision integers and rationals
//! through the aliases below.

pub mod classifier;
pub mod conjugation;
pub mod cyclotomic;
pub mod error;
pub mod fourier;
pub mod hadamard;
pub mod instance;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod scalar;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use classifier::{classify, pure_power_form, Certificate, Classification, Conditions, Rule, Verdict};
pub use error::{Error, Result};
pub use instance::ProblemInstance;

pub type Int = BigInt;
pub type Rational = BigRational;
pub type IntMatrix = linalg::Matrix<BigInt>;
pub type RatMatrix = linalg::Matrix<BigRational>;
pub type IntVector = Vec<BigInt>;
pub type RatVector = Vec<BigRational>;
pub type IntPolynomial = linalg::Polynomial<BigInt>;
/// A point of frequency space, exact.
pub type Frequency = RatVector;

/// `f64` and `i64` variants of the generic matrix, for callers that know
/// their entries stay small.
pub type SmallIntMatrix = linalg::Matrix<i64>;
pub type FloatMatrix = linalg::Matrix<f64>;
