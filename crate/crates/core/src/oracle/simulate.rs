use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{client_ex_post_utility, expert_margin, PriceList, ProblemType, Scenario};
use crate::strategy::{message_law, Kernel, StrategyProfile};

/// Empirical frequency of one message, with the posterior it induces in
/// theory and the share of serious problems among the plays that sent it.
#[derive(Debug, Clone, PartialEq)]
pub struct SimAtom {
    pub message: usize,
    pub posterior: f64,
    pub empirical_posterior: f64,
    pub expert_payoff: f64,
    pub frequency: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub n: u64,
    pub seed: u64,
    pub atoms: Vec<SimAtom>,
    pub mean_expert_payoff: f64,
    pub mean_client_payoff: f64,
    /// Standard error of `mean_expert_payoff`.
    pub std_err: f64,
    pub client_std_err: f64,
}

fn sampler(kernel: &Kernel, t: ProblemType) -> WeightedIndex<f64> {
    WeightedIndex::new(kernel.row(t)).expect("kernel rows are distributions")
}

struct Moments {
    sum: f64,
    sum_sq: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.sum += x;
        self.sum_sq += x * x;
    }

    fn mean_and_se(&self, n: u64) -> (f64, f64) {
        let n = n as f64;
        let mean = self.sum / n;
        if n < 2.0 {
            return (mean, 0.0);
        }
        let var = ((self.sum_sq - n * mean * mean) / (n - 1.0)).max(0.0);
        (mean, (var / n).sqrt())
    }
}

/// Plays the game `n` times with a ChaCha8 stream seeded by `seed`. Each play
/// draws the problem type, the experiment's message, and whether the expert
/// is credible; a non-credible expert's message is redrawn from the
/// signalling strategy before the client responds.
pub fn simulate(s: &Scenario, p: &PriceList, profile: &StrategyProfile, n: u64, seed: u64) -> Result<SimReport> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let (xi, sigma, rho) = (&profile.experiment, &profile.signalling, &profile.client);
    if xi.len() != sigma.len() || xi.len() != rho.len() {
        return Err(Error::AlphabetMismatch {
            experiment: xi.len(),
            signalling: sigma.len(),
            client: rho.len(),
        });
    }
    let params = &s.params;
    let types = [ProblemType::Minor, ProblemType::Serious];
    let xi_draw = types.map(|t| sampler(xi, t));
    let sigma_draw = types.map(|t| sampler(sigma, t));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = xi.len();
    let mut count = vec![0u64; alphabet];
    let mut serious_count = vec![0u64; alphabet];
    let mut expert = Moments { sum: 0.0, sum_sq: 0.0 };
    let mut client = Moments { sum: 0.0, sum_sq: 0.0 };
    for _ in 0..n {
        let serious = rng.gen_bool(s.q0());
        let ti = usize::from(serious);
        let mut m = xi_draw[ti].sample(&mut rng);
        if !rng.gen_bool(s.chi()) {
            m = sigma_draw[ti].sample(&mut rng);
        }
        let a = rho.action(m);
        count[m] += 1;
        serious_count[m] += u64::from(serious);
        expert.push(expert_margin(a, p, params));
        client.push(client_ex_post_utility(types[ti], a, p, params));
    }

    let law = message_law(s.q0(), s.chi(), xi, sigma);
    let atoms = (0..alphabet)
        .filter(|&m| count[m] > 0)
        .map(|m| SimAtom {
            message: m,
            posterior: law.posterior[m].expect("sent messages have positive probability"),
            empirical_posterior: serious_count[m] as f64 / count[m] as f64,
            expert_payoff: expert_margin(rho.action(m), p, params),
            frequency: count[m] as f64 / n as f64,
        })
        .collect();
    let (mean_expert_payoff, std_err) = expert.mean_and_se(n);
    let (mean_client_payoff, client_std_err) = client.mean_and_se(n);
    Ok(SimReport {
        n,
        seed,
        atoms,
        mean_expert_payoff,
        mean_client_payoff,
        std_err,
        client_std_err,
    })
}
