use crate::error::{Error, Result};
use crate::model::{client_expected_utility, expert_margin, expert_payoff_range, Action, ModelParams, PriceList, ProblemType, Scenario};
use crate::strategy::{message_law, StrategyProfile};

/// Outcome of checking a strategy profile against the equilibrium conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumCertificate {
    pub bayes_ok: bool,
    /// Largest gap between a claimed and a Bayes posterior on path.
    pub bayes_deviation: f64,
    pub client_opt_ok: bool,
    pub client_regret: f64,
    pub expert_opt_ok: bool,
    pub expert_regret: f64,
    /// Expert's expected payoff under the profile.
    pub value: f64,
    /// Messages with zero probability. The expert is assumed to expect the
    /// worst payoff any belief could justify there.
    pub off_path: Vec<usize>,
}

impl EquilibriumCertificate {
    pub fn is_equilibrium(&self) -> bool {
        self.bayes_ok && self.client_opt_ok && self.expert_opt_ok
    }
}

/// Lowest expert payoff the client can justify with some belief.
fn skeptical_payoff(p: &PriceList, params: &ModelParams) -> f64 {
    let (l1, l2) = (params.l1(), params.l2());
    let mut cuts = vec![
        0.0,
        1.0,
        (l1 - p.p1()) / l1,
        (p.p2() - l1) / (l2 - l1),
        (p.p2() - p.p1()) / l2,
    ];
    cuts.retain(|q| (0.0..=1.0).contains(q));
    cuts.sort_by(f64::total_cmp);
    let mids: Vec<f64> = cuts.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    cuts.iter()
        .chain(&mids)
        .map(|&q| expert_payoff_range(q, p, params).0)
        .fold(f64::INFINITY, f64::min)
}

/// Checks Bayes consistency of the claimed posteriors, client optimality on
/// path and expert optimality of every message the non-credible expert sends.
pub fn verify_equilibrium(s: &Scenario, p: &PriceList, profile: &StrategyProfile, tol: f64) -> Result<EquilibriumCertificate> {
    let params = &s.params;
    let (xi, sigma, rho) = (&profile.experiment, &profile.signalling, &profile.client);
    if xi.len() != sigma.len() || xi.len() != rho.len() {
        return Err(Error::AlphabetMismatch {
            experiment: xi.len(),
            signalling: sigma.len(),
            client: rho.len(),
        });
    }
    if let Some(claimed) = &profile.claimed_posteriors {
        if claimed.len() != xi.len() {
            return Err(Error::InvalidInput("claimed posteriors do not cover the alphabet".into()));
        }
    }
    let law = message_law(s.q0(), s.chi(), xi, sigma);
    let floor = skeptical_payoff(p, params);

    let mut bayes_deviation: f64 = 0.0;
    let mut client_regret: f64 = 0.0;
    let mut off_path = Vec::new();
    let mut payoff = Vec::with_capacity(xi.len());
    let mut value = 0.0;
    for m in 0..xi.len() {
        let Some(q) = law.posterior[m] else {
            off_path.push(m);
            payoff.push(floor);
            continue;
        };
        if let Some(claimed) = &profile.claimed_posteriors {
            let dev = claimed[m].map_or(f64::INFINITY, |c| (c - q).abs());
            bayes_deviation = bayes_deviation.max(dev);
        }
        let best = Action::ALL
            .iter()
            .map(|&a| client_expected_utility(q, a, p, params))
            .fold(f64::NEG_INFINITY, f64::max);
        client_regret = client_regret.max(best - client_expected_utility(q, rho.action(m), p, params));
        let e = expert_margin(rho.action(m), p, params);
        payoff.push(e);
        value += law.prob[m] * e;
    }

    let top = payoff.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut expert_regret: f64 = 0.0;
    for t in [ProblemType::Minor, ProblemType::Serious] {
        for (m, &e) in payoff.iter().enumerate() {
            if sigma.prob(t, m) > 0.0 {
                expert_regret = expert_regret.max(top - e);
            }
        }
    }

    Ok(EquilibriumCertificate {
        bayes_ok: bayes_deviation <= tol,
        bayes_deviation,
        client_opt_ok: client_regret <= tol,
        client_regret,
        expert_opt_ok: expert_regret <= tol,
        expert_regret,
        value,
        off_path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::persuasion_profile;
    use crate::strategy::{ClientStrategy, Experiment, SignallingStrategy};

    fn params() -> ModelParams {
        ModelParams::new(1.0, 3.0, 4.0, 10.0).unwrap()
    }

    #[test]
    fn certifies_persuasion_profile() {
        let s = Scenario::new(params(), 0.25, 0.8).unwrap();
        let p = PriceList::new(4.0, 7.0, &params()).unwrap();
        let profile = persuasion_profile(&s, &p).unwrap();
        let cert = verify_equilibrium(&s, &p, &profile, 1e-9).unwrap();
        assert!(cert.is_equilibrium(), "{cert:?}");
        assert!((cert.value - 3.5).abs() < 1e-12);

        let mut bad = profile.clone();
        bad.client = ClientStrategy(vec![Action::A2, Action::A2]);
        let cert = verify_equilibrium(&s, &p, &bad, 1e-9).unwrap();
        assert!(!cert.client_opt_ok);
        assert!((cert.client_regret - 3.0).abs() < 1e-12);
    }

    #[test]
    fn certifies_full_disclosure() {
        let s = Scenario::new(params(), 0.25, 0.5).unwrap();
        let p = PriceList::new(4.0, 6.0, &params()).unwrap();
        let xi = Experiment::fully_revealing();
        let profile = StrategyProfile {
            signalling: SignallingStrategy::mimic(&xi),
            experiment: xi,
            client: ClientStrategy(vec![Action::A1, Action::A2]),
            claimed_posteriors: None,
        };
        let cert = verify_equilibrium(&s, &p, &profile, 1e-9).unwrap();
        assert!(cert.is_equilibrium());
        assert!((cert.value - 3.0).abs() < 1e-12);
        assert!(cert.off_path.is_empty());
    }

    #[test]
    fn alphabet_mismatch() {
        let s = Scenario::new(params(), 0.25, 0.5).unwrap();
        let p = PriceList::new(4.0, 6.0, &params()).unwrap();
        let profile = StrategyProfile {
            experiment: Experiment::fully_revealing(),
            signalling: SignallingStrategy::constant(0, 3),
            client: ClientStrategy(vec![Action::A1, Action::A2]),
            claimed_posteriors: None,
        };
        assert!(matches!(
            verify_equilibrium(&s, &p, &profile, 1e-9),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn off_path_messages_are_reported() {
        let s = Scenario::new(params(), 0.6, 0.4).unwrap();
        let p = PriceList::new(4.0, 7.0, &params()).unwrap();
        let profile = crate::equilibrium::canonical_profile(&s, &p);
        let cert = verify_equilibrium(&s, &p, &profile, 1e-9).unwrap();
        assert_eq!(cert.off_path, vec![1]);
        assert!(cert.is_equilibrium(), "{cert:?}");
    }

    #[test]
    fn skeptical_floor() {
        // the client can always be made to walk away
        let p = PriceList::new(4.0, 7.0, &params()).unwrap();
        assert_eq!(skeptical_payoff(&p, &params()), 0.0);
        // when the client always buys, the floor is the smaller margin
        let p = PriceList::new(2.0, 4.0, &params()).unwrap();
        assert_eq!(skeptical_payoff(&p, &params()), 1.0);
    }
}
