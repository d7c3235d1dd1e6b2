//! The Airy-type function `A(y, lambda)` that converts weighted kernel counts
//! into limiting kernel-size probabilities, and the reciprocal Gamma function
//! it is built from.

mod evaluate;
mod gamma;
mod scaled;

pub use evaluate::{
    airy_a, airy_a_with, AiryEvalResult, AiryOptions, DEFAULT_MAX_TERMS, LAMBDA_ENVELOPE,
};
pub use gamma::reciprocal_gamma;
pub use scaled::Scaled;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AiryError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("lambda = {lambda} is outside the supported range |lambda| <= 30")]
    OutsideEnvelope { lambda: f64 },
    #[error("A({y}, {lambda}): tolerance not reached after {terms} terms (relative error {achieved:e})")]
    ToleranceNotReached {
        y: f64,
        lambda: f64,
        terms: usize,
        achieved: f64,
    },
}
