//! Error taxonomy shared by every module.
//!
//! Numerical routines distinguish "you asked outside the validated range"
//! (`Domain`) from "the requested tolerance cannot be met here"
//! (`Accuracy`) from "the iteration did not settle" (`Convergence`), so
//! callers can decide whether to clamp, fall back to another
//! representation, or abort.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside the range the routine is specified and tested for.
    #[error("domain error: {0}")]
    Domain(String),

    /// The routine cannot reach its accuracy target for this input even
    /// though the input is formally in range.
    #[error("accuracy error: {0}")]
    Accuracy(String),

    /// An iterative scheme exhausted its budget without settling.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Evaluation requested at (or numerically on top of) a pole.
    #[error("pole error: {0}")]
    Pole(String),

    /// A root solver was given an interval without a sign change.
    #[error("bracket error: {0}")]
    Bracket(String),

    /// Geometry degenerates, e.g. the triple-coalescence point R = 0
    /// where the hyperangle is undefined.
    #[error("degenerate error: {0}")]
    Degenerate(String),
}
