//! Game primitives: costs and losses, admissible price lists, payoffs and the
//! client's best-response correspondence.
//!
//! The client has either a minor (`t1`) or a serious (`t2`) problem. Treatment
//! `a1` cures only the minor problem, `a2` cures both, and `a0` buys nothing.
//! All beliefs are expressed as the probability `q` of the serious problem.

use std::fmt;

use crate::error::{Error, Result};

/// Absolute tolerance for every equality and indifference test on money
/// values and probabilities.
pub const EPS: f64 = 1e-9;

/// The four standing assumptions on the primitives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assumption {
    /// `c2 > c1`.
    SeriousCostlier,
    /// `l2 > c2`.
    SeriousEfficient,
    /// `l1 > c1`.
    MinorEfficient,
    /// `l2 - c2 > l1 - c1`.
    SeriousSurplusLarger,
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Assumption::SeriousCostlier => "c2 > c1",
            Assumption::SeriousEfficient => "l2 > c2",
            Assumption::MinorEfficient => "l1 > c1",
            Assumption::SeriousSurplusLarger => "l2 - c2 > l1 - c1",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    c1: f64,
    c2: f64,
    l1: f64,
    l2: f64,
}

impl ModelParams {
    /// Validates the primitives. Costs must be finite and non-negative and the
    /// four strict assumption inequalities must hold.
    pub fn new(c1: f64, c2: f64, l1: f64, l2: f64) -> Result<Self> {
        if ![c1, c2, l1, l2].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("primitives must be finite".into()));
        }
        if c1 < 0.0 {
            return Err(Error::InvalidInput("costs must be non-negative".into()));
        }
        if c2 <= c1 {
            return Err(Error::AssumptionViolation(Assumption::SeriousCostlier));
        }
        if l2 <= c2 {
            return Err(Error::AssumptionViolation(Assumption::SeriousEfficient));
        }
        if l1 <= c1 {
            return Err(Error::AssumptionViolation(Assumption::MinorEfficient));
        }
        if l2 - c2 <= l1 - c1 {
            return Err(Error::AssumptionViolation(Assumption::SeriousSurplusLarger));
        }
        Ok(Self { c1, c2, l1, l2 })
    }

    pub fn c1(&self) -> f64 {
        self.c1
    }

    pub fn c2(&self) -> f64 {
        self.c2
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    /// `c2 - c1`.
    pub fn cost_gap(&self) -> f64 {
        self.c2 - self.c1
    }

    /// `l2 - l1`.
    pub fn loss_gap(&self) -> f64 {
        self.l2 - self.l1
    }

    /// The prior `(c2 - c1) / (l2 - l1)` separating the low-prior regime, in
    /// which credibility may be worthless to the expert, from the high-prior one.
    pub fn prior_cutoff(&self) -> f64 {
        self.cost_gap() / self.loss_gap()
    }

    /// The equal-margin price list `(l1, l1 - c1 + c2)` that extracts the
    /// whole minor-treatment surplus.
    pub fn equal_margin_prices(&self) -> PriceList {
        PriceList {
            p1: self.l1,
            p2: self.l1 - self.c1 + self.c2,
        }
    }
}

/// Primitives together with the prior and the credibility level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub params: ModelParams,
    q0: f64,
    chi: f64,
}

impl Scenario {
    /// Requires `0 < q0 < 1` and `0 <= chi <= 1`.
    pub fn new(params: ModelParams, q0: f64, chi: f64) -> Result<Self> {
        if !(q0 > 0.0 && q0 < 1.0) {
            return Err(Error::InvalidInput(format!("prior q0 = {q0} must lie in (0, 1)")));
        }
        if !(0.0..=1.0).contains(&chi) {
            return Err(Error::InvalidInput(format!("credibility chi = {chi} must lie in [0, 1]")));
        }
        Ok(Self { params, q0, chi })
    }

    pub fn q0(&self) -> f64 {
        self.q0
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn with_chi(&self, chi: f64) -> Result<Self> {
        Self::new(self.params, self.q0, chi)
    }
}

/// A price list in the admissible set `c1 <= p1 <= l1`, `c2 <= p2 <= l2`,
/// `p2 >= p1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceList {
    p1: f64,
    p2: f64,
}

impl PriceList {
    /// Rejects price lists outside the admissible set. Values within [`EPS`]
    /// of a bound are snapped onto it.
    pub fn new(p1: f64, p2: f64, params: &ModelParams) -> Result<Self> {
        let reject = |reason| Err(Error::PriceOutsideAdmissible { p1, p2, reason });
        if !p1.is_finite() || !p2.is_finite() {
            return reject("prices must be finite");
        }
        let p1 = snap(p1, params.c1, params.l1);
        let p2 = snap(p2, params.c2, params.l2);
        if p1 < params.c1 || p1 > params.l1 {
            return reject("p1 outside [c1, l1]");
        }
        if p2 < params.c2 || p2 > params.l2 {
            return reject("p2 outside [c2, l2]");
        }
        if p2 < p1 - EPS {
            return reject("p2 below p1");
        }
        Ok(Self { p1, p2: p2.max(p1) })
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }

    pub fn p2(&self) -> f64 {
        self.p2
    }

    pub fn price(&self, a: Action) -> f64 {
        match a {
            Action::A0 => 0.0,
            Action::A1 => self.p1,
            Action::A2 => self.p2,
        }
    }

    /// Expert margin `p1 - c1` on the minor treatment.
    pub fn minor_margin(&self, params: &ModelParams) -> f64 {
        self.p1 - params.c1
    }

    /// Expert margin `p2 - c2` on the serious treatment.
    pub fn serious_margin(&self, params: &ModelParams) -> f64 {
        self.p2 - params.c2
    }
}

fn snap(v: f64, lo: f64, hi: f64) -> f64 {
    if (v - lo).abs() <= EPS {
        lo
    } else if (v - hi).abs() <= EPS {
        hi
    } else {
        v
    }
}

/// Partition of the admissible price lists by which treatment carries the
/// larger margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `p1 - c1 > p2 - c2`.
    P1,
    /// Equal margins.
    Pbar,
    /// `p2 - c2 > p1 - c1`.
    P2,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::P1 => "P1",
            Region::Pbar => "Pbar",
            Region::P2 => "P2",
        })
    }
}

pub fn classify_region(p: &PriceList, params: &ModelParams) -> Region {
    let diff = p.serious_margin(params) - p.minor_margin(params);
    if diff.abs() <= EPS {
        Region::Pbar
    } else if diff > 0.0 {
        Region::P2
    } else {
        Region::P1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    /// No treatment.
    A0,
    /// Minor treatment.
    A1,
    /// Serious treatment.
    A2,
}

impl Action {
    pub const ALL: [Action; 3] = [Action::A0, Action::A1, Action::A2];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::A0 => "a0",
            Action::A1 => "a1",
            Action::A2 => "a2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemType {
    Minor,
    Serious,
}

/// Ex post client payoff: the price paid plus the loss left untreated.
pub fn client_ex_post_utility(t: ProblemType, a: Action, p: &PriceList, params: &ModelParams) -> f64 {
    let loss = match (t, a) {
        (ProblemType::Minor, Action::A0) => params.l1,
        (ProblemType::Serious, Action::A0 | Action::A1) => params.l2,
        _ => 0.0,
    };
    -p.price(a) - loss
}

/// Client's expected payoff at posterior `q` (probability of the serious problem).
pub fn client_expected_utility(q: f64, a: Action, p: &PriceList, params: &ModelParams) -> f64 {
    match a {
        Action::A0 => -(1.0 - q) * params.l1 - q * params.l2,
        Action::A1 => -p.p1 - q * params.l2,
        Action::A2 => -p.p2,
    }
}

pub fn expert_margin(a: Action, p: &PriceList, params: &ModelParams) -> f64 {
    match a {
        Action::A0 => 0.0,
        Action::A1 => p.minor_margin(params),
        Action::A2 => p.serious_margin(params),
    }
}

/// A subset of the three actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActionSet([bool; 3]);

impl ActionSet {
    pub fn contains(&self, a: Action) -> bool {
        self.0[a.index()]
    }

    pub fn insert(&mut self, a: Action) {
        self.0[a.index()] = true;
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Action> + '_ {
        Action::ALL.into_iter().filter(|a| self.contains(*a))
    }
}

impl FromIterator<Action> for ActionSet {
    fn from_iter<I: IntoIterator<Item = Action>>(iter: I) -> Self {
        let mut set = ActionSet::default();
        for a in iter {
            set.insert(a);
        }
        set
    }
}

/// All pure actions maximizing the client's expected payoff at `q`, ties
/// detected within [`EPS`]. Mixed optima are the convex hull of this set.
pub fn best_responses(q: f64, p: &PriceList, params: &ModelParams) -> ActionSet {
    let utils = Action::ALL.map(|a| client_expected_utility(q, a, p, params));
    let best = utils.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Action::ALL
        .into_iter()
        .filter(|a| utils[a.index()] >= best - EPS)
        .collect()
}

/// The client best response preferred by the expert (highest margin). Among
/// equal margins the lower-indexed action wins.
pub fn expert_preferred_response(q: f64, p: &PriceList, params: &ModelParams) -> Action {
    let mut best = Action::A0;
    let mut best_margin = f64::NEG_INFINITY;
    for a in best_responses(q, p, params).iter() {
        let m = expert_margin(a, p, params);
        if m > best_margin + EPS {
            best = a;
            best_margin = m;
        }
    }
    best
}

/// The interval of expert payoffs the client can generate at `q` by mixing
/// over its best responses: `[min V(q;p), max V(q;p)]`.
pub fn expert_payoff_range(q: f64, p: &PriceList, params: &ModelParams) -> (f64, f64) {
    best_responses(q, p, params)
        .iter()
        .map(|a| expert_margin(a, p, params))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), m| (lo.min(m), hi.max(m)))
}
