use thiserror::Error;

use crate::equilibrium::Mode;
use crate::model::{Assumption, Region};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("model assumption {0} violated")]
    AssumptionViolation(Assumption),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("price list ({p1}, {p2}) is not admissible: {reason}")]
    PriceOutsideAdmissible { p1: f64, p2: f64, reason: &'static str },

    #[error("operation requires a price list in {required}, got {found}")]
    Region { required: &'static str, found: Region },

    #[error("argument outside the operation's domain: {0}")]
    Domain(String),

    #[error("no unique optimal experiment in {0} mode")]
    Mode(Mode),

    #[error("experiment, signalling strategy and client strategy disagree on the message alphabet ({experiment}, {signalling}, {client})")]
    AlphabetMismatch {
        experiment: usize,
        signalling: usize,
        client: usize,
    },

    #[error("invalid message kernel: {0}")]
    InvalidKernel(String),

    #[error("no feasible grid point")]
    Infeasible,
}
