use thiserror::Error;

/// Errors raised by the kernel.
///
/// `Domain` and `Undetermined` are outcomes of well-formed requests (a metric
/// asked for outside its natural domain, a numerical tie); the remaining
/// variants reject malformed input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid transaction time {0}: times must be finite and nonnegative")]
    InvalidTime(f64),

    #[error("invalid transaction amount {0}: amounts must be finite")]
    InvalidAmount(f64),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid discount function: {0}")]
    InvalidDiscount(String),

    #[error("time {t} lies outside the sampled range [{lo}, {hi}]")]
    Extrapolation { t: f64, lo: f64, hi: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside the natural domain: {0}")]
    Domain(String),

    #[error("undetermined: {0}")]
    Undetermined(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }

    /// True for errors that describe a valid request outside a metric's
    /// domain rather than malformed input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
