use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different quadratic fields (radicands {0} and {1})")]
    MixedRadicands(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value must be strictly positive")]
    NonPositive,
    #[error("radicand does not fit in 64 bits")]
    RadicandOverflow,
    #[error("no real roots: discriminant {0} is negative")]
    NoRealRoots(String),
    #[error("equation reduces to a constant identity or contradiction: {0}")]
    DegenerateIdentity(String),
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("no real root: b^{n} = {rhs} with even exponent and negative right-hand side")]
    NoRealRoot { n: u32, rhs: String },
    #[error("integer metallic mean disagrees with doublet q = {0}")]
    CrossCheckFailed(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable kebab-case identifier used in machine-readable error output.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::MixedRadicands(..) => "mixed-radicands",
            Error::DivisionByZero => "division-by-zero",
            Error::NonPositive => "non-positive",
            Error::RadicandOverflow => "radicand-overflow",
            Error::NoRealRoots(_) => "no-real-roots",
            Error::DegenerateIdentity(_) => "degenerate-identity",
            Error::NoConvergence(_) => "no-convergence",
            Error::NoRealRoot { .. } => "no-real-root",
            Error::CrossCheckFailed(_) => "cross-check-failed",
            Error::InvalidParameter(_) => "invalid-parameter",
        }
    }
}
