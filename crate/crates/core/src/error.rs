use thiserror::Error;

/// Failures raised by the engine. Verdicts (a condition failing, a bundle not
/// being regular) are never errors; they are carried in result values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the range an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),
    /// Well-formed values that do not fit together, e.g. an atom with the
    /// wrong number of factors for its space.
    #[error("arity mismatch: expected {expected} factors, found {found}")]
    Arity { expected: usize, found: usize },
    /// A stated precondition of a criterion does not hold for the input.
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Arity { expected, found })
    }
}
