use thiserror::Error;

use crate::numerics::XScalar;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input {0}")]
    NonFinite(f64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("even root of a negative value")]
    EvenRootOfNegative,

    #[error("{quantity} must be {requirement}, got {value}")]
    Domain {
        quantity: &'static str,
        requirement: &'static str,
        value: String,
    },

    #[error("invalid number {0:?}")]
    Parse(String),

    #[error("{0} does not fit in an f64")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn positive(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "finite and strictly positive",
            value: value.to_string(),
        })
    }
}

pub(crate) fn non_negative(quantity: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "finite and non-negative",
            value: value.to_string(),
        })
    }
}

pub(crate) fn positive_x(quantity: &'static str, value: XScalar) -> Result<XScalar> {
    if value.is_positive() {
        Ok(value)
    } else {
        Err(Error::Domain {
            quantity,
            requirement: "strictly positive",
            value: value.to_string(),
        })
    }
}
