use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid rational {0:?}: expected [-]digits[/digits] with a nonzero denominator")]
    ParseRational(String),
    #[error("series log needs constant term 1, got {0}")]
    LogConstant(String),
    #[error("series exp needs constant term 0, got {0}")]
    ExpConstant(String),
    #[error("series inverse needs a nonzero constant term")]
    InverseConstant,
    #[error("scale of factor {index} is zero")]
    ZeroScale { index: usize },
    #[error("factor {index} has the wrong family: {reason}")]
    WrongFamily { index: usize, reason: String },
    #[error("shift of factor {index} equals half its order, which makes its scale zero")]
    DegenerateShift { index: usize },
    #[error("a product integral needs at least one factor")]
    NoFactors,
    #[error("modulus must be {0}")]
    BadModulus(&'static str),
    #[error("parity condition violated: {0}")]
    Parity(String),
    #[error("laplace parameters out of domain: {0}")]
    LaplaceDomain(String),
    #[error("tail bound did not fall below {tol:e} within {pieces} pieces")]
    Nonconvergence { tol: f64, pieces: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}
