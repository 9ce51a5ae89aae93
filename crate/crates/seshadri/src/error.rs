//! Crate-wide error type.
//!
//! Errors split into two families: validation errors (bad degrees, shape
//! mismatches, out-of-range parameters) and numerical-domain errors (loss of
//! positive definiteness, ill conditioning, enumeration blow-up). The CLI maps
//! the former to exit code 2 and the latter to exit code 3 via
//! [`Error::is_numerical`].

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polarization type must contain at least one degree")]
    EmptyType,

    #[error("degree d_{index} = {value} must be a positive integer")]
    NonPositiveDegree { index: usize, value: i64 },

    #[error("divisibility violated at index {index}: d_{index} = {degree} does not divide d_{} = {next_degree}", index + 1)]
    DivisibilityViolation {
        index: usize,
        degree: u64,
        next_degree: u64,
    },

    #[error(
        "matrix {name} is not symmetric: max |M - M^T| entry is {asymmetry:e}, tolerance 1e-12"
    )]
    NotSymmetric { name: String, asymmetry: f64 },

    #[error("matrix {name} contains a non-finite entry")]
    NonFiniteEntry { name: String },

    #[error("matrix {name} is not positive definite")]
    NotPositiveDefinite { name: String },

    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        actual: usize,
    },

    #[error("imaginary part is numerically singular: condition number {condition:e} exceeds 1e12")]
    SingularY { condition: f64 },

    #[error("enumeration radius too large: about {estimate:e} candidate vectors, cap is {cap}")]
    RadiusTooLarge { estimate: f64, cap: u64 },

    #[error("n = {n} must be a positive integer")]
    NonPositive { n: i64 },

    #[error("n = {n} is a perfect square, so x^2 - n y^2 = 1 has no nontrivial solution")]
    PerfectSquare { n: i64 },

    #[error("genus {genus} is too small: the construction needs genus >= 3")]
    GenusTooSmall { genus: i64 },

    #[error("gonality {gonality} is too small: a covering map has degree >= 2")]
    InvalidGonality { gonality: i64 },

    #[error("y = {y} must be a positive finite real")]
    InvalidY { y: f64 },

    #[error("squared radius {r_squared} must be a non-negative finite real")]
    InvalidRadius { r_squared: f64 },

    #[error("sample count must be at least 1")]
    InvalidSampleCount,

    #[error("trial count must be at least 1")]
    InvalidTrialCount,

    #[error("the y grid must contain at least one value")]
    EmptyYGrid,
}

impl Error {
    /// True for errors arising from the numerics of an otherwise well-formed
    /// input (as opposed to input validation failures).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite { .. }
                | Error::SingularY { .. }
                | Error::RadiusTooLarge { .. }
        )
    }
}
