use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("point {0} lies in the continuum")]
    PointInsideK(Complex64),
    #[error("point {0} lies outside the continuum")]
    PointOutsideK(Complex64),
    #[error("|w| = {} is not larger than 1", .0.norm())]
    InsideUnitDisc(Complex64),
    #[error("point {point} is not inside the level set of level {level}")]
    PointOutsideLevel { point: Complex64, level: f64 },
    #[error("point {point} is not outside the closed level set of level {level}")]
    PointInsideLevel { point: Complex64, level: f64 },
    #[error("point {point} is not on the level curve {level} (|Φ| = {modulus})")]
    NotOnLevel {
        point: Complex64,
        level: f64,
        modulus: f64,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{what} did not converge")]
    NonConvergent { what: &'static str },
    #[error("operation needs a segment continuum, got {0}")]
    WrongKind(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("no grid point between {lo} and {hi} satisfies every condition")]
    GridExhausted { lo: f64, hi: f64 },
    #[error("certification failed: sampled sup {sup} exceeds {limit}")]
    CertificationFailed { sup: f64, limit: f64 },
    #[error("precondition violated at w = {point}: {reason}")]
    PreconditionViolated { point: Complex64, reason: String },
    #[error("invalid continuum: {0}")]
    InvalidContinuum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
