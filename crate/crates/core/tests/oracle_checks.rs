mod common;

use common::*;
use credence_core::envelopes::{envelopes, qbar};
use credence_core::equilibrium::{canonical_profile, outcome_distribution, p_eq_value, persuasion_profile, Mode};
use credence_core::model::{best_responses, client_expected_utility, Action, Region, Scenario};
use credence_core::oracle::{price_search, simulate, solve_program, verify_equilibrium};
use credence_core::strategy::{ClientStrategy, Experiment, SignallingStrategy, StrategyProfile};
use credence_core::welfare::{outside_option, total_surplus};
use rand::Rng;

#[test]
fn program_agrees_with_closed_form() {
    let mut r = rng(21);
    let grid_n = 201;
    for i in 0..100 {
        let params = random_params(&mut r);
        let p = if i % 5 == 0 { random_pbar(&mut r, &params) } else { random_p2(&mut r, &params) };
        let s = Scenario::new(params, open_unit(&mut r), r.gen_range(0.0..1.0)).unwrap();
        let sol = solve_program(&s, &p, grid_n).unwrap();
        let closed = p_eq_value(&s, &p).value;
        let bound = 2.0 / grid_n as f64 * (params.l2() - params.c1());
        assert!((sol.value - closed).abs() <= bound, "{s:?} {p:?}: {} vs {closed}", sol.value);

        // the pooled posterior sits at the purchase cutoff whenever persuasion helps
        let qcav = envelopes(&p, &params).qcav.eval(s.q0());
        if sol.value > qcav + 1e-9 {
            let qb = qbar(&p, &params).unwrap();
            assert!((sol.gamma - qb).abs() <= 1.0 / (grid_n - 1) as f64);
        }
    }
}

#[test]
fn program_solution_is_feasible() {
    let s = scenario(0.25, 0.8);
    let sol = solve_program(&s, &price(4.0, 7.0), 101).unwrap();
    let (b, g, k) = (sol.beta, sol.gamma, sol.k);
    assert!(((1.0 - k) * g + k * b - 0.25).abs() < 1e-12);
    assert!(k * b <= 0.8 * 0.25 + 1e-12);
    assert!(k * (1.0 - b) <= 0.8 * 0.75 + 1e-12);
}

#[test]
fn price_search_matches_closed_form() {
    let mut r = rng(22);
    for _ in 0..20 {
        let params = random_params(&mut r);
        let s = Scenario::new(params, open_unit(&mut r), r.gen_range(0.01..1.0)).unwrap();
        let (_, v) = price_search(&s, 61).unwrap();
        let ev = credence_core::equilibrium::equilibrium_value(&s);
        assert!((v - ev).abs() < 1e-9, "{s:?}: {v} vs {ev}");
    }
}

#[test]
fn simulator_is_unbiased() {
    let s = scenario(0.25, 0.8);
    let p = price(4.0, 7.0);
    let profile = persuasion_profile(&s, &p).unwrap();
    for seed in 0..20 {
        let rep = simulate(&s, &p, &profile, 100_000, seed).unwrap();
        assert!((rep.mean_expert_payoff - 3.5).abs() <= 4.0 * rep.std_err, "seed {seed}: {rep:?}");
        let freq: f64 = rep.atoms.iter().map(|a| a.frequency).sum();
        assert!((freq - 1.0).abs() < 1e-12);
    }
}

#[test]
fn simulator_reproduces_outcome_distribution() {
    let s = scenario(0.25, 0.8);
    let p = price(4.0, 7.0);
    let profile = persuasion_profile(&s, &p).unwrap();
    let rep = simulate(&s, &p, &profile, 1_000_000, 42).unwrap();
    let dist = outcome_distribution(&s, &p);
    assert!((rep.mean_expert_payoff - 3.5).abs() <= 3.0 * rep.std_err);
    for (atom, sim) in dist.atoms.iter().zip(&rep.atoms) {
        assert!((atom.posterior - sim.posterior).abs() < 1e-12);
        assert_eq!(atom.expert_payoff, sim.expert_payoff);
        assert!((atom.weight - sim.frequency).abs() < 5e-3);
        assert!((sim.empirical_posterior - sim.posterior).abs() < 5e-3);
    }
    let client_value = rep.mean_client_payoff - outside_option(0.25, &s.params);
    assert!((client_value - 0.0).abs() <= 4.0 * rep.client_std_err + 1e-12);
}

#[test]
fn simulator_is_deterministic() {
    let s = scenario(0.25, 0.8);
    let p = price(4.0, 7.0);
    let profile = persuasion_profile(&s, &p).unwrap();
    let a = simulate(&s, &p, &profile, 50_000, 7).unwrap();
    let b = simulate(&s, &p, &profile, 50_000, 7).unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
    let c = simulate(&s, &p, &profile, 50_000, 8).unwrap();
    assert_ne!(a.mean_expert_payoff, c.mean_expert_payoff);
}

#[test]
fn full_disclosure_is_efficient() {
    let params = reference();
    let p = params.equal_margin_prices();
    let s = Scenario::new(params, 0.3, 1.0).unwrap();
    let xi = Experiment::fully_revealing();
    let profile = StrategyProfile {
        signalling: SignallingStrategy::mimic(&xi),
        experiment: xi,
        client: ClientStrategy(vec![Action::A1, Action::A2]),
        claimed_posteriors: None,
    };
    let target = total_surplus(0.3, &params) - (params.l1() - params.c1());
    let mut last_err = f64::INFINITY;
    for n in [1_000, 100_000, 1_000_000] {
        let rep = simulate(&s, &p, &profile, n, 3).unwrap();
        let value = rep.mean_client_payoff - outside_option(0.3, &params);
        assert!((value - target).abs() <= 4.0 * rep.client_std_err + 1e-12);
        last_err = (value - target).abs();
    }
    assert!(last_err < 0.02);
}

#[test]
fn verifier_detects_worse_client_actions() {
    let mut r = rng(23);
    let mut checked = 0;
    for _ in 0..100 {
        let params = random_params(&mut r);
        let p = random_p2(&mut r, &params);
        let qb = qbar(&p, &params).unwrap();
        let q0 = qb * r.gen_range(0.05..0.95);
        let s = Scenario::new(params, q0, r.gen_range(0.0..1.0)).unwrap();
        let profile = canonical_profile(&s, &p);
        let cert = verify_equilibrium(&s, &p, &profile, 1e-9).unwrap();
        assert!(cert.client_opt_ok && cert.bayes_ok, "{cert:?}");
        if p_eq_value(&s, &p).mode == Mode::Persuasion {
            assert!(cert.is_equilibrium());
        }
        let law = credence_core::strategy::message_law(q0, s.chi(), &profile.experiment, &profile.signalling);
        for m in 0..profile.client.len() {
            let Some(q) = law.posterior[m] else { continue };
            let current = client_expected_utility(q, profile.client.action(m), &p, &params);
            for a in Action::ALL {
                if client_expected_utility(q, a, &p, &params) < current - 1e-6 && !best_responses(q, &p, &params).contains(a) {
                    let mut bad = profile.clone();
                    bad.client.0[m] = a;
                    assert!(!verify_equilibrium(&s, &p, &bad, 1e-9).unwrap().client_opt_ok);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn equal_margin_disclosure_certifies() {
    let s = scenario(0.25, 0.5);
    let p = price(4.0, 6.0);
    let profile = canonical_profile(&s, &p);
    assert_eq!(credence_core::model::classify_region(&p, &s.params), Region::Pbar);
    let cert = verify_equilibrium(&s, &p, &profile, 1e-9).unwrap();
    assert!(cert.is_equilibrium());
    assert!((cert.value - 3.0).abs() < 1e-12);
}
