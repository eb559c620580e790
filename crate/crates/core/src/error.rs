use thiserror::Error;

/// Errors raised by the cohomology engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factor count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("index out of range: {what} = {value} (allowed {min}..={max})")]
    IndexOutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("change of basis failed: {0}")]
    ChangeOfBasis(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::GenusMismatch { .. } => "genus_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::Precondition(_) => "precondition",
            Error::ResourceLimit(_) => "resource_limit",
            Error::ChangeOfBasis(_) => "change_of_basis",
            Error::Internal(_) => "internal",
            Error::Overflow(_) => "overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::IndexOutOfRange { what, value, min, max });
    }
    Ok(())
}
