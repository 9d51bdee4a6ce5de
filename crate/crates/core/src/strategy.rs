//! Message kernels over a finite alphabet and the Bayes updating that links
//! them to the client's posteriors.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::model::{Action, ProblemType};

const ROW_TOL: f64 = 1e-12;

/// A type-conditional distribution over messages `0..len`.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    minor: Vec<f64>,
    serious: Vec<f64>,
}

impl Kernel {
    pub fn new(minor: Vec<f64>, serious: Vec<f64>) -> Result<Self> {
        if minor.len() != serious.len() || minor.is_empty() {
            return Err(Error::InvalidKernel("rows must share a non-empty alphabet".into()));
        }
        for row in [&minor, &serious] {
            if row.iter().any(|&x| !(0.0..=1.0).contains(&x)) {
                return Err(Error::InvalidKernel("entries must be probabilities".into()));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > ROW_TOL {
                return Err(Error::InvalidKernel(format!("row sums to {sum}")));
            }
        }
        Ok(Self { minor, serious })
    }

    pub fn len(&self) -> usize {
        self.minor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minor.is_empty()
    }

    pub fn row(&self, t: ProblemType) -> &[f64] {
        match t {
            ProblemType::Minor => &self.minor,
            ProblemType::Serious => &self.serious,
        }
    }

    pub fn prob(&self, t: ProblemType, m: usize) -> f64 {
        self.row(t)[m]
    }
}

/// The publicly announced experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment(Kernel);

impl Experiment {
    pub fn new(minor: Vec<f64>, serious: Vec<f64>) -> Result<Self> {
        Kernel::new(minor, serious).map(Self)
    }

    /// `m1` for the minor problem, `m2` for the serious one.
    pub fn fully_revealing() -> Self {
        Self(Kernel { minor: vec![1.0, 0.0], serious: vec![0.0, 1.0] })
    }
}

impl Deref for Experiment {
    type Target = Kernel;
    fn deref(&self) -> &Kernel {
        &self.0
    }
}

/// What a non-credible expert sends.
#[derive(Debug, Clone, PartialEq)]
pub struct SignallingStrategy(Kernel);

impl SignallingStrategy {
    pub fn new(minor: Vec<f64>, serious: Vec<f64>) -> Result<Self> {
        Kernel::new(minor, serious).map(Self)
    }

    /// Always send message `m`, whatever the problem type.
    pub fn constant(m: usize, alphabet: usize) -> Self {
        let mut row = vec![0.0; alphabet];
        row[m] = 1.0;
        Self(Kernel { minor: row.clone(), serious: row })
    }

    /// Report the experiment's message truthfully (`sigma = xi`).
    pub fn mimic(xi: &Experiment) -> Self {
        Self(xi.0.clone())
    }
}

impl Deref for SignallingStrategy {
    type Target = Kernel;
    fn deref(&self) -> &Kernel {
        &self.0
    }
}

/// A pure client strategy: one action per message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClientStrategy(pub Vec<Action>);

impl ClientStrategy {
    pub fn action(&self, m: usize) -> Action {
        self.0[m]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Experiment, signalling strategy and client strategy, plus the posteriors
/// the construction claims to induce (`None` for messages meant to be off
/// path).
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyProfile {
    pub experiment: Experiment,
    pub signalling: SignallingStrategy,
    pub client: ClientStrategy,
    pub claimed_posteriors: Option<Vec<Option<f64>>>,
}

/// Probability that a message reaches the client given the type:
/// `chi xi(m|t) + (1 - chi) sigma(m|t)`.
pub fn delivery_prob(t: ProblemType, m: usize, chi: f64, xi: &Experiment, sigma: &SignallingStrategy) -> f64 {
    chi * xi.prob(t, m) + (1.0 - chi) * sigma.prob(t, m)
}

/// Per-message total probability and Bayes posterior of the serious problem.
/// Messages with zero probability have no posterior.
#[derive(Debug, Clone, PartialEq)]
pub struct MessageLaw {
    pub prob: Vec<f64>,
    pub posterior: Vec<Option<f64>>,
}

pub fn message_law(q0: f64, chi: f64, xi: &Experiment, sigma: &SignallingStrategy) -> MessageLaw {
    let n = xi.len();
    let mut prob = Vec::with_capacity(n);
    let mut posterior = Vec::with_capacity(n);
    for m in 0..n {
        let serious = q0 * delivery_prob(ProblemType::Serious, m, chi, xi, sigma);
        let minor = (1.0 - q0) * delivery_prob(ProblemType::Minor, m, chi, xi, sigma);
        let total = serious + minor;
        prob.push(total);
        posterior.push((total > 0.0).then(|| serious / total));
    }
    MessageLaw { prob, posterior }
}
