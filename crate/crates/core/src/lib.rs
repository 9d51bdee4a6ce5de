//! Pricing and information disclosure by an expert selling credence goods
//! when the expert's diagnosis is only credible with some probability.
//!
//! A client has a minor or a serious problem and chooses between no
//! treatment, a minor treatment and a serious treatment. The expert posts
//! prices, commits to an experiment, and with probability `chi` its outcome
//! reaches the client truthfully; otherwise the expert sends any message it
//! likes.

pub mod envelopes;
pub mod equilibrium;
pub mod error;
pub mod model;
pub mod oracle;
pub mod piecewise;
pub mod strategy;
pub mod welfare;

pub use error::{Error, Result};
pub use model::{Action, ModelParams, PriceList, ProblemType, Region, Scenario, EPS};
