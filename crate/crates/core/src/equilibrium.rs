//! Closed-form equilibrium values, optimal prices and optimal experiments.
//!
//! For a fixed price list the expert's value is either the cheap-talk value
//! (quasiconcave envelope of `v`) or the persuasion value (concave envelope),
//! and the switch happens at the credibility threshold [`chi_lower`]. Optimal
//! pricing sets `p1 = l1` and raises `p2` until that threshold meets the
//! actual credibility.

use std::fmt;

use crate::envelopes::{chi_lower, envelopes, pi_cav, pi_qcav, q_hat, qbar_formula, qtilde};
use crate::error::{Error, Result};
use crate::model::{
    classify_region, expert_payoff_range, expert_preferred_response, Action, ModelParams, PriceList, Region,
    Scenario, EPS,
};
use crate::strategy::{ClientStrategy, Experiment, SignallingStrategy, StrategyProfile};

/// Which envelope the expert's value is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Value equals the quasiconcave envelope, strictly below the concave one.
    CheapTalk,
    /// Value equals the concave envelope, strictly above the quasiconcave one.
    Persuasion,
    /// The two envelopes coincide at the prior.
    Flat,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::CheapTalk => "cheap-talk",
            Mode::Persuasion => "persuasion",
            Mode::Flat => "flat",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PEqValue {
    pub value: f64,
    pub mode: Mode,
}

/// Expert's highest payoff in the subgame after posting `p`.
pub fn p_eq_value(s: &Scenario, p: &PriceList) -> PEqValue {
    let params = &s.params;
    let (q0, chi) = (s.q0(), s.chi());
    let m1 = p.minor_margin(params);
    let m2 = p.serious_margin(params);
    let flat = |value| PEqValue { value, mode: Mode::Flat };
    match classify_region(p, params) {
        Region::Pbar => flat(m2),
        Region::P2 => {
            let qb = qbar_formula(p, params);
            if q0 >= qb - EPS {
                return flat(m2);
            }
            let threshold = chi_lower(q0, p, params).expect("q0 below qbar");
            if chi >= threshold - EPS {
                let value = envelopes(p, params).cav.eval(q0);
                PEqValue { value, mode: Mode::Persuasion }
            } else {
                PEqValue { value: m1, mode: Mode::CheapTalk }
            }
        }
        Region::P1 => {
            let qt = qtilde(p, params).expect("region checked");
            if q0 <= qt + EPS {
                return flat(m1);
            }
            let upper = q_hat(chi, p, params).expect("region checked");
            if q0 <= upper + EPS {
                let value = envelopes(p, params).cav.eval(q0);
                PEqValue { value, mode: Mode::Persuasion }
            } else {
                PEqValue { value: m2, mode: Mode::CheapTalk }
            }
        }
    }
}

/// `((c2 - c1) - q0 (l2 - l1)) / ((1 - q0)(c2 - c1))`: the credibility below
/// which optimal pricing cannot beat `l1 - c1`. Negative for priors above
/// [`ModelParams::prior_cutoff`].
pub fn chi_star(q0: f64, params: &ModelParams) -> f64 {
    (params.cost_gap() - q0 * params.loss_gap()) / ((1.0 - q0) * params.cost_gap())
}

/// `l1 + q0 (l2 - l1) / (1 - chi + chi q0)`: the serious-treatment price at
/// which the credibility threshold equals `chi`.
pub fn optimal_serious_price(q0: f64, chi: f64, params: &ModelParams) -> f64 {
    params.l1() + q0 * params.loss_gap() / (1.0 - chi + chi * q0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PriceOptimum {
    /// The canonical price list is the only optimum.
    Unique,
    /// Every `(l1, p2)` with `p2` in the closed interval is optimal.
    Family { p2_min: f64, p2_max: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalPrices {
    pub canonical: PriceList,
    pub optimum: PriceOptimum,
}

impl OptimalPrices {
    pub fn is_unique(&self) -> bool {
        matches!(self.optimum, PriceOptimum::Unique)
    }
}

/// Expert-optimal price lists for `0 < chi <= 1`.
pub fn optimal_prices(s: &Scenario) -> Result<OptimalPrices> {
    let params = &s.params;
    let (q0, chi) = (s.q0(), s.chi());
    if chi == 0.0 {
        return Err(Error::Domain("optimal prices are characterized for chi in (0, 1]".into()));
    }
    if chi > chi_star(q0, params).max(0.0) {
        let p2 = optimal_serious_price(q0, chi, params);
        Ok(OptimalPrices {
            canonical: PriceList::new(params.l1(), p2, params)?,
            optimum: PriceOptimum::Unique,
        })
    } else {
        let canonical = params.equal_margin_prices();
        Ok(OptimalPrices {
            canonical,
            optimum: PriceOptimum::Family { p2_min: canonical.p2(), p2_max: params.l2() },
        })
    }
}

/// Expert's equilibrium value `ev*` on the closed square `[0, 1] x [0, 1]`.
/// The endpoints `chi = 0` and `chi = 1` coincide with the benchmarks.
pub fn ev_star(q0: f64, chi: f64, params: &ModelParams) -> f64 {
    let minor_surplus = params.l1() - params.c1();
    if q0 < params.prior_cutoff() && chi <= chi_star(q0, params) {
        return minor_surplus;
    }
    (params.loss_gap() - chi * params.cost_gap()) * q0 + minor_surplus - (1.0 - chi) * params.cost_gap()
}

pub fn equilibrium_value(s: &Scenario) -> f64 {
    ev_star(s.q0(), s.chi(), &s.params)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Benchmark {
    /// `chi = 0`: pricing followed by cheap talk.
    NoCredibility,
    /// `chi = 1`: pricing followed by persuasion.
    FullCredibility,
}

pub fn benchmark_value(q0: f64, which: Benchmark, params: &ModelParams) -> f64 {
    match which {
        Benchmark::NoCredibility => pi_qcav(q0, params),
        Benchmark::FullCredibility => pi_cav(q0, params),
    }
}

/// The unique expert-optimal experiment and signalling strategy when the
/// persuasion value is strictly above the cheap-talk value.
///
/// For serious-margin prices, `m1` reveals the minor problem and is only ever
/// sent by a credible expert; `m2` pools everything else at posterior `qbar`.
/// For minor-margin prices the roles flip: `m2` reveals the serious problem
/// and `m1` pools at posterior `qtilde`.
pub fn optimal_experiment(s: &Scenario, p: &PriceList) -> Result<(Experiment, SignallingStrategy)> {
    let profile = persuasion_profile(s, p)?;
    Ok((profile.experiment, profile.signalling))
}

/// [`optimal_experiment`] together with the client's responses and the
/// posteriors the construction induces.
pub fn persuasion_profile(s: &Scenario, p: &PriceList) -> Result<StrategyProfile> {
    let params = &s.params;
    let (q0, chi) = (s.q0(), s.chi());
    let eq = p_eq_value(s, p);
    if eq.mode != Mode::Persuasion {
        return Err(Error::Mode(eq.mode));
    }
    match classify_region(p, params) {
        Region::P2 => {
            let reveal = (chi_lower(q0, p, params)? / chi).min(1.0);
            let experiment = Experiment::new(vec![reveal, 1.0 - reveal], vec![0.0, 1.0])?;
            Ok(StrategyProfile {
                experiment,
                signalling: SignallingStrategy::constant(1, 2),
                client: ClientStrategy(vec![Action::A1, Action::A2]),
                claimed_posteriors: Some(vec![Some(0.0), Some(qbar_formula(p, params))]),
            })
        }
        Region::P1 => {
            let qt = qtilde(p, params)?;
            let ratio = qt * (1.0 - q0) / ((1.0 - qt) * q0);
            let reveal = ((1.0 - ratio) / chi).clamp(0.0, 1.0);
            let experiment = Experiment::new(vec![1.0, 0.0], vec![1.0 - reveal, reveal])?;
            Ok(StrategyProfile {
                experiment,
                signalling: SignallingStrategy::constant(0, 2),
                client: ClientStrategy(vec![Action::A1, Action::A2]),
                claimed_posteriors: Some(vec![Some(qt), Some(1.0)]),
            })
        }
        Region::Pbar => unreachable!("equal margins are never in persuasion mode"),
    }
}

/// A deterministic pure-strategy equilibrium profile for any `(s, p)`:
/// the persuasion construction when it applies, full disclosure for equal
/// margins, and otherwise babbling (`xi = sigma` constant on `m1`) with the
/// client's expert-preferred response at the prior.
///
/// Babbling is an equilibrium but reaches the cheap-talk value only when the
/// client buys at the prior; reaching it in general needs client mixing at
/// the kink, which pure profiles cannot express.
pub fn canonical_profile(s: &Scenario, p: &PriceList) -> StrategyProfile {
    let params = &s.params;
    if let Ok(profile) = persuasion_profile(s, p) {
        return profile;
    }
    if classify_region(p, params) == Region::Pbar {
        let xi = Experiment::fully_revealing();
        return StrategyProfile {
            signalling: SignallingStrategy::mimic(&xi),
            experiment: xi,
            client: ClientStrategy(vec![
                expert_preferred_response(0.0, p, params),
                expert_preferred_response(1.0, p, params),
            ]),
            claimed_posteriors: Some(vec![Some(0.0), Some(1.0)]),
        };
    }
    let at_prior = expert_preferred_response(s.q0(), p, params);
    let sigma = SignallingStrategy::constant(0, 2);
    StrategyProfile {
        experiment: Experiment::new(sigma.row(crate::model::ProblemType::Minor).to_vec(), sigma.row(crate::model::ProblemType::Serious).to_vec())
            .expect("valid kernel"),
        signalling: sigma,
        client: ClientStrategy(vec![at_prior, at_prior]),
        claimed_posteriors: Some(vec![Some(s.q0()), None]),
    }
}

/// One support point of an outcome distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub posterior: f64,
    pub expert_payoff: f64,
    pub weight: f64,
}

/// Joint distribution of the client's posterior and the expert's payoff.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    pub atoms: Vec<Atom>,
}

impl OutcomeDistribution {
    pub fn expert_value(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight * a.expert_payoff).sum()
    }

    pub fn mean_posterior(&self) -> f64 {
        self.atoms.iter().map(|a| a.weight * a.posterior).sum()
    }

    /// Checks weights, Bayes plausibility and that each payoff is attainable
    /// by the client's (possibly mixed) best responses at its posterior.
    pub fn validate(&self, q0: f64, p: &PriceList, params: &ModelParams) -> Result<()> {
        let total: f64 = self.atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > EPS || self.atoms.iter().any(|a| a.weight < -EPS) {
            return Err(Error::InvalidInput(format!("weights sum to {total}")));
        }
        let mean = self.mean_posterior();
        if (mean - q0).abs() > EPS {
            return Err(Error::InvalidInput(format!("mean posterior {mean} differs from prior {q0}")));
        }
        for atom in &self.atoms {
            let (lo, hi) = expert_payoff_range(atom.posterior, p, params);
            if atom.expert_payoff < lo - EPS || atom.expert_payoff > hi + EPS {
                return Err(Error::InvalidInput(format!(
                    "payoff {} not attainable at posterior {}",
                    atom.expert_payoff, atom.posterior
                )));
            }
        }
        Ok(())
    }
}

/// The expert-optimal outcome distribution when it is unique (persuasion
/// mode), and a canonical representative otherwise: equal-value splits in
/// cheap-talk mode, full disclosure for equal margins, no information when
/// the envelopes coincide at the prior.
pub fn outcome_distribution(s: &Scenario, p: &PriceList) -> OutcomeDistribution {
    let params = &s.params;
    let q0 = s.q0();
    let m1 = p.minor_margin(params);
    let m2 = p.serious_margin(params);
    let atom = |posterior, expert_payoff, weight| Atom { posterior, expert_payoff, weight };
    let eq = p_eq_value(s, p);
    let atoms = match classify_region(p, params) {
        Region::Pbar => vec![atom(0.0, m2, 1.0 - q0), atom(1.0, m2, q0)],
        _ if eq.mode == Mode::Flat => vec![atom(q0, eq.value, 1.0)],
        Region::P2 => {
            let qb = qbar_formula(p, params);
            let high = q0 / qb;
            let top = if eq.mode == Mode::Persuasion { m2 } else { m1 };
            vec![atom(0.0, m1, 1.0 - high), atom(qb, top, high)]
        }
        Region::P1 => {
            let qt = qtilde(p, params).expect("region checked");
            let low = (1.0 - q0) / (1.0 - qt);
            let bottom = if eq.mode == Mode::Persuasion { m1 } else { m2 };
            vec![atom(qt, bottom, low), atom(1.0, m2, 1.0 - low)]
        }
    };
    OutcomeDistribution { atoms }
}

/// Expert value when the client observes whether the expert is credible:
/// `(1 - chi) qcav v + chi cav v`.
pub fn public_credibility_value(s: &Scenario, p: &PriceList) -> f64 {
    let env = envelopes(p, &s.params);
    let q0 = s.q0();
    (1.0 - s.chi()) * env.qcav.eval(q0) + s.chi() * env.cav.eval(q0)
}

/// Prior above which the monopoly price beats `p2 = l2` under public credibility.
pub fn public_credibility_cutoff(chi: f64, params: &ModelParams) -> f64 {
    params.cost_gap() / ((1.0 - chi) * params.loss_gap() + chi * params.cost_gap())
}

#[derive(Debug, Clone, PartialEq)]
pub struct PublicCredibilityOptimum {
    /// One optimal list, or two exactly at the cutoff prior.
    pub prices: Vec<PriceList>,
    pub value: f64,
}

fn public_credibility_branches(q0: f64, chi: f64, params: &ModelParams) -> (f64, f64) {
    let monopoly = q0 * params.l2() + (1.0 - q0) * params.l1();
    let full = chi * q0 * (params.l2() - params.c2()) + (1.0 - chi * q0) * (params.l1() - params.c1());
    (full, monopoly - params.c2())
}

/// Expert's optimal value under public credibility on the closed square.
pub fn public_credibility_ev(q0: f64, chi: f64, params: &ModelParams) -> f64 {
    let (full, pooled) = public_credibility_branches(q0, chi, params);
    if q0 < public_credibility_cutoff(chi, params) {
        full
    } else {
        pooled
    }
}

pub fn public_credibility_optimum(s: &Scenario) -> Result<PublicCredibilityOptimum> {
    let params = &s.params;
    let (q0, chi) = (s.q0(), s.chi());
    let cutoff = public_credibility_cutoff(chi, params);
    let monopoly = q0 * params.l2() + (1.0 - q0) * params.l1();
    let full = || PriceList::new(params.l1(), params.l2(), params);
    let pooled = || PriceList::new(params.l1(), monopoly, params);
    let (full_value, pooled_value) = public_credibility_branches(q0, chi, params);
    Ok(if (q0 - cutoff).abs() <= EPS {
        PublicCredibilityOptimum { prices: vec![full()?, pooled()?], value: full_value.max(pooled_value) }
    } else if q0 < cutoff {
        PublicCredibilityOptimum { prices: vec![full()?], value: full_value }
    } else {
        PublicCredibilityOptimum { prices: vec![pooled()?], value: pooled_value }
    })
}

/// Whether the minor-margin list `p` is strictly beaten by the equal-margin
/// list `(l1, l1 - c1 + c2)`.
pub fn lemma1_dominance_check(s: &Scenario, p: &PriceList) -> Result<bool> {
    let found = classify_region(p, &s.params);
    if found != Region::P1 {
        return Err(Error::Region { required: "P1", found });
    }
    let reference = s.params.equal_margin_prices();
    Ok(p_eq_value(s, p).value < p_eq_value(s, &reference).value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> ModelParams {
        ModelParams::new(1.0, 3.0, 4.0, 10.0).unwrap()
    }

    fn scenario(q0: f64, chi: f64) -> Scenario {
        Scenario::new(params(), q0, chi).unwrap()
    }

    fn price(p1: f64, p2: f64) -> PriceList {
        PriceList::new(p1, p2, &params()).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn p_eq_value_examples() {
        let v = p_eq_value(&scenario(0.25, 0.8), &price(4.0, 7.0));
        assert!(close(v.value, 3.5));
        assert_eq!(v.mode, Mode::Persuasion);

        let v = p_eq_value(&scenario(0.25, 0.5), &price(4.0, 7.0));
        assert_eq!((v.value, v.mode), (3.0, Mode::CheapTalk));

        let v = p_eq_value(&scenario(0.9, 0.5), &price(4.0, 6.0));
        assert_eq!((v.value, v.mode), (3.0, Mode::Flat));
    }

    #[test]
    fn threshold_boundary_goes_to_persuasion() {
        let v = p_eq_value(&scenario(0.25, 2.0 / 3.0), &price(4.0, 7.0));
        assert_eq!(v.mode, Mode::Persuasion);
        let v = p_eq_value(&scenario(0.25, 2.0 / 3.0 - 1e-7), &price(4.0, 7.0));
        assert_eq!(v.mode, Mode::CheapTalk);
    }

    #[test]
    fn chi_star_examples() {
        let pr = params();
        assert!(close(chi_star(0.25, &pr), 1.0 / 3.0));
        assert!(close(chi_star(1.0 / 3.0, &pr), 0.0));
        assert!(close(chi_star(0.5, &pr), -1.0));
    }

    #[test]
    fn optimal_price_examples() {
        let opt = optimal_prices(&scenario(0.25, 0.5)).unwrap();
        assert!(opt.is_unique());
        assert_eq!(opt.canonical.p1(), 4.0);
        assert!(close(opt.canonical.p2(), 6.4));

        let opt = optimal_prices(&scenario(0.25, 0.2)).unwrap();
        assert_eq!(opt.optimum, PriceOptimum::Family { p2_min: 6.0, p2_max: 10.0 });
        assert_eq!((opt.canonical.p1(), opt.canonical.p2()), (4.0, 6.0));

        assert!((optimal_serious_price(1e-9, 0.5, &params()) - 4.0).abs() < 1e-7);

        assert!(optimal_prices(&scenario(0.25, 0.0)).is_err());
    }

    #[test]
    fn equilibrium_value_examples() {
        assert!(close(equilibrium_value(&scenario(0.25, 0.5)), 3.25));
        assert!(close(equilibrium_value(&scenario(0.25, 0.2)), 3.0));
        for q0 in [0.1, 0.25, 0.7] {
            assert!(close(equilibrium_value(&scenario(q0, 1.0)), 3.0 + 4.0 * q0));
        }
        // equals the persuasion value at the optimal list
        let s = scenario(0.25, 0.5);
        let p = optimal_prices(&s).unwrap().canonical;
        assert!(close(p_eq_value(&s, &p).value, 3.25));
    }

    #[test]
    fn benchmark_examples() {
        let pr = params();
        assert!(close(benchmark_value(0.5, Benchmark::NoCredibility, &pr), 4.0));
        assert!(close(benchmark_value(0.5, Benchmark::FullCredibility, &pr), 5.0));
        assert!(close(benchmark_value(0.0, Benchmark::NoCredibility, &pr), 3.0));
        assert!(close(benchmark_value(0.0, Benchmark::FullCredibility, &pr), 3.0));
    }

    #[test]
    fn optimal_experiment_examples() {
        let (xi, sigma) = optimal_experiment(&scenario(0.25, 0.8), &price(4.0, 7.0)).unwrap();
        assert!(close(xi.prob(crate::model::ProblemType::Minor, 0), 5.0 / 6.0));
        assert_eq!(xi.prob(crate::model::ProblemType::Serious, 1), 1.0);
        assert_eq!(sigma.prob(crate::model::ProblemType::Minor, 1), 1.0);

        let (xi, _) = optimal_experiment(&scenario(0.25, 2.0 / 3.0), &price(4.0, 7.0)).unwrap();
        assert!(close(xi.prob(crate::model::ProblemType::Minor, 0), 1.0));

        assert_eq!(
            optimal_experiment(&scenario(0.25, 0.5), &price(4.0, 7.0)),
            Err(Error::Mode(Mode::CheapTalk))
        );
    }

    #[test]
    fn outcome_distribution_examples() {
        let pr = params();
        let s = scenario(0.25, 0.8);
        let p = price(4.0, 7.0);
        let d = outcome_distribution(&s, &p);
        assert_eq!(d.atoms.len(), 2);
        assert!(close(d.atoms[0].posterior, 0.0) && close(d.atoms[0].weight, 0.5));
        assert!(close(d.atoms[1].posterior, 0.5) && close(d.atoms[1].weight, 0.5));
        assert!(close(d.expert_value(), 3.5));
        d.validate(0.25, &p, &pr).unwrap();

        let d = outcome_distribution(&scenario(0.5, 0.3), &p);
        assert_eq!(d.atoms, vec![Atom { posterior: 0.5, expert_payoff: 4.0, weight: 1.0 }]);

        let d = outcome_distribution(&scenario(0.3, 0.3), &price(4.0, 6.0));
        assert_eq!(d.atoms.len(), 2);
        assert!(close(d.atoms[1].weight, 0.3));
        d.validate(0.3, &price(4.0, 6.0), &pr).unwrap();

        // cheap-talk and P1 representatives are also valid
        for (s, p) in [
            (scenario(0.25, 0.5), price(4.0, 7.0)),
            (scenario(0.5, 0.5), price(3.0, 4.0)),
            (scenario(0.5, 0.95), price(3.0, 4.0)),
            (scenario(0.05, 0.5), price(3.0, 4.0)),
        ] {
            let d = outcome_distribution(&s, &p);
            d.validate(s.q0(), &p, &pr).unwrap();
            assert!(close(d.expert_value(), p_eq_value(&s, &p).value));
        }
    }

    #[test]
    fn public_credibility_examples() {
        let s = scenario(0.25, 0.5);
        let opt = public_credibility_optimum(&s).unwrap();
        assert!(close(opt.value, 3.5));
        assert!(close(public_credibility_ev(0.25, 0.5, &params()), 3.5));
        assert_eq!(opt.prices, vec![price(4.0, 10.0)]);
        assert!(close(public_credibility_value(&s, &price(4.0, 10.0)), 3.5));

        let opt = public_credibility_optimum(&scenario(0.5, 0.5)).unwrap();
        assert!(close(opt.value, 4.0));
        assert_eq!(opt.prices.len(), 2);
        assert!(close(opt.prices[1].p2(), 7.0));
        assert!(close(public_credibility_value(&scenario(0.5, 0.5), &opt.prices[1]), 4.0));

        for chi in [0.1, 0.5, 0.9] {
            let s = scenario(1.0 / 3.0, chi);
            let pc = public_credibility_optimum(&s).unwrap().value;
            assert!((pc - equilibrium_value(&s)).abs() < 1e-12);
        }
    }

    #[test]
    fn minor_margin_dominance_examples() {
        assert!(lemma1_dominance_check(&scenario(0.5, 0.5), &price(3.0, 4.0)).unwrap());
        assert!(lemma1_dominance_check(&scenario(0.05, 0.5), &price(3.0, 4.0)).unwrap());
        assert!(lemma1_dominance_check(&scenario(0.99, 0.9), &price(4.0, 5.0)).unwrap());
        assert!(lemma1_dominance_check(&scenario(0.5, 0.5), &price(4.0, 7.0)).is_err());
    }

    #[test]
    fn p1_persuasion_profile_induces_claimed_posteriors() {
        let s = scenario(0.5, 0.95);
        let p = price(3.0, 4.0);
        let profile = persuasion_profile(&s, &p).unwrap();
        let law = crate::strategy::message_law(0.5, 0.95, &profile.experiment, &profile.signalling);
        assert!((law.posterior[0].unwrap() - 0.1).abs() < 1e-12);
        assert!((law.posterior[1].unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn canonical_profiles() {
        let profile = canonical_profile(&scenario(0.3, 0.3), &price(4.0, 6.0));
        assert_eq!(profile.client.0, vec![Action::A1, Action::A2]);
        let profile = canonical_profile(&scenario(0.6, 0.3), &price(4.0, 7.0));
        assert_eq!(profile.client.0[0], Action::A2);
    }
}
