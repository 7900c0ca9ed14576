use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the domain of the function.
    Domain { what: &'static str, value: f64 },
    /// Evaluation at a branch point or on a branch cut.
    Degenerate(&'static str),
    /// The result is not representable as a finite `f64`.
    Overflow,
    /// The point lies outside the region where an asymptotic form is valid.
    OutsideValidity(&'static str),
    /// An iteration did not converge.
    NoConvergence { what: &'static str, iterations: u32 },
    /// Quadrature order out of the supported range.
    InvalidOrder(usize),
    /// The integrand returned a non-finite value at a node.
    NonFinite { x: f64 },
    /// Parameters do not describe a supported singular integrand.
    InvalidFamily(&'static str),
    /// The operation only applies to another integrand family.
    FamilyMismatch(&'static str),
    /// Root bracketing found no sign change.
    NoSignChange,
    /// An empty range of quadrature sizes was requested.
    EmptyRange,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Domain { what, value } => write!(f, "{what}: argument {value} outside domain"),
            Self::Degenerate(what) => write!(f, "degenerate evaluation: {what}"),
            Self::Overflow => write!(f, "result overflows f64"),
            Self::OutsideValidity(what) => write!(f, "outside validity domain: {what}"),
            Self::NoConvergence { what, iterations } => {
                write!(f, "{what} did not converge after {iterations} iterations")
            }
            Self::InvalidOrder(n) => write!(f, "unsupported quadrature order {n}"),
            Self::NonFinite { x } => write!(f, "integrand is not finite at x = {x}"),
            Self::InvalidFamily(what) => write!(f, "invalid integrand: {what}"),
            Self::FamilyMismatch(what) => write!(f, "family mismatch: {what}"),
            Self::NoSignChange => write!(f, "no sign change in bracket"),
            Self::EmptyRange => write!(f, "empty range"),
        }
    }
}

impl core::error::Error for Error {}
