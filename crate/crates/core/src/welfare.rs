//! Client welfare. All client values are measured against the outside option
//! of never buying a treatment.

use crate::envelopes::{qbar_formula, qtilde};
use crate::equilibrium::{chi_star, equilibrium_value, OutcomeDistribution};
use crate::error::{Error, Result};
use crate::model::{classify_region, client_expected_utility, Action, ModelParams, PriceList, Region, Scenario};

/// `q0 (l2 - c2) + (1 - q0)(l1 - c1)`.
pub fn total_surplus(q0: f64, params: &ModelParams) -> f64 {
    q0 * (params.l2() - params.c2()) + (1.0 - q0) * (params.l1() - params.c1())
}

/// Client's ex ante payoff from never buying: `-(1 - q0) l1 - q0 l2`.
pub fn outside_option(q0: f64, params: &ModelParams) -> f64 {
    -(1.0 - q0) * params.l1() - q0 * params.l2()
}

/// Closed interval of client equilibrium values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClientValueSet {
    pub lo: f64,
    pub hi: f64,
}

impl ClientValueSet {
    pub fn is_singleton(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: f64) -> bool {
        (self.lo..=self.hi).contains(&v)
    }
}

fn client_can_gain(q0: f64, chi: f64, params: &ModelParams) -> bool {
    q0 <= params.prior_cutoff() && chi <= chi_star(q0, params)
}

/// Client values across expert-optimal equilibria. Outside the low-prior,
/// low-credibility corner the expert extracts the whole surplus.
pub fn client_value_set(s: &Scenario) -> ClientValueSet {
    let hi = if client_can_gain(s.q0(), s.chi(), &s.params) {
        total_surplus(s.q0(), &s.params) - equilibrium_value(s)
    } else {
        0.0
    };
    ClientValueSet { lo: 0.0, hi }
}

/// Client's highest value across expert-optimal equilibria.
pub fn eu_star(s: &Scenario) -> f64 {
    let params = &s.params;
    if client_can_gain(s.q0(), s.chi(), params) {
        s.q0() * ((params.l2() - params.c2()) - (params.l1() - params.c1()))
    } else {
        0.0
    }
}

/// Client's highest value among the expert-optimal equilibria at fixed
/// prices. The credibility level never enters.
pub fn client_u_star(q0: f64, p: &PriceList, params: &ModelParams) -> f64 {
    let (l1, l2) = (params.l1(), params.l2());
    let (p1, p2) = (p.p1(), p.p2());
    match classify_region(p, params) {
        Region::Pbar => q0 * (l2 - p2) + (1.0 - q0) * (l1 - p1),
        Region::P2 => {
            let qb = qbar_formula(p, params);
            if q0 >= qb {
                q0 * l2 + (1.0 - q0) * l1 - p2
            } else {
                let w = q0 / qb;
                (1.0 - w) * (l1 - p1) + w * (qb * l2 + (1.0 - qb) * l1 - p2)
            }
        }
        Region::P1 => {
            let qt = qtilde(p, params).expect("region checked");
            if q0 <= qt {
                (1.0 - q0) * l1 - p1
            } else {
                split_below(q0, qt, p, params)
            }
        }
    }
}

/// Client value of splitting `q0` into `qt` and `1`.
fn split_below(q0: f64, qt: f64, p: &PriceList, params: &ModelParams) -> f64 {
    let w = (1.0 - q0) / (1.0 - qt);
    w * ((1.0 - qt) * params.l1() - p.p1()) + (q0 - qt) / (1.0 - qt) * (params.l2() - p.p2())
}

/// Client value implied by an outcome distribution: at each posterior the
/// client collects its best expected utility.
pub fn client_value_of(dist: &OutcomeDistribution, p: &PriceList, params: &ModelParams) -> f64 {
    let q0 = dist.mean_posterior();
    let gross: f64 = dist
        .atoms
        .iter()
        .map(|a| {
            let best = Action::ALL
                .iter()
                .map(|&act| client_expected_utility(a.posterior, act, p, params))
                .fold(f64::NEG_INFINITY, f64::max);
            a.weight * best
        })
        .sum();
    gross - outside_option(q0, params)
}

/// Jump in client value when prices leave an equal-margin list into one side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SideGap {
    /// Gap against the limit where the prior sits at or below the cutoff.
    pub near: f64,
    /// Gap against the limit where the prior sits beyond the cutoff.
    pub far: f64,
    /// The candidate that applies at this prior.
    pub gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscontinuityGaps {
    pub minor_side: SideGap,
    pub serious_side: SideGap,
}

/// Gaps between `u*` at the equal-margin list `pbar` and its limits from the
/// minor-margin and serious-margin sides.
///
/// Minor side: `q0 (l2 + p1 - p2)` when `q0 < qtilde(pbar)`, and
/// `g(0) - g(qtilde(pbar))` when `q0 > qtilde(pbar)`. Serious side:
/// `(1 - q0)(p2 - p1)` when `q0 >= qbar(pbar)`, and `h(1) - h(qbar(pbar))`
/// otherwise. At `q0 = qtilde(pbar)` both minor limits are reachable and the
/// smaller gap is reported.
pub fn discontinuity_gaps(q0: f64, pbar: &PriceList, params: &ModelParams) -> Result<DiscontinuityGaps> {
    let found = classify_region(pbar, params);
    if found != Region::Pbar {
        return Err(Error::Region { required: "Pbar", found });
    }
    let (l1, l2) = (params.l1(), params.l2());
    let (p1, p2) = (pbar.p1(), pbar.p2());
    let at_pbar = client_u_star(q0, pbar, params);

    let qt = crate::envelopes::qtilde_formula(pbar, params);
    let g = |x: f64| split_below(q0, x, pbar, params);
    let near = q0 * (l2 + p1 - p2);
    let far = g(0.0) - g(qt);
    let gap = if q0 < qt - crate::model::EPS {
        near
    } else if q0 > qt + crate::model::EPS {
        far
    } else {
        near.min(far)
    };
    let minor_side = SideGap { near, far, gap };

    let qb = qbar_formula(pbar, params);
    let h = |x: f64| (1.0 - q0 / x) * (l1 - p1) + q0 / x * (x * l2 + (1.0 - x) * l1 - p2);
    let near = (1.0 - q0) * (p2 - p1);
    let far = h(1.0) - h(qb);
    let gap = if q0 >= qb { near } else { far };
    let serious_side = SideGap { near, far, gap };

    debug_assert!((g(0.0) - at_pbar).abs() < 1e-9 && (h(1.0) - at_pbar).abs() < 1e-9);
    Ok(DiscontinuityGaps { minor_side, serious_side })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::outcome_distribution;

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
    fn surplus() {
        let pr = params();
        assert!(close(total_surplus(0.25, &pr), 4.0));
        assert!(close(total_surplus(0.0, &pr), 3.0));
        assert!(close(total_surplus(1.0, &pr), 7.0));
    }

    #[test]
    fn value_sets() {
        let set = client_value_set(&scenario(0.25, 0.2));
        assert!(close(set.lo, 0.0) && close(set.hi, 1.0));
        assert!(client_value_set(&scenario(0.25, 0.5)).is_singleton());
        assert!(client_value_set(&scenario(0.5, 0.01)).is_singleton());
    }

    #[test]
    fn eu_star_examples() {
        assert!(close(eu_star(&scenario(0.25, 0.2)), 1.0));
        assert_eq!(eu_star(&scenario(0.25, 0.5)), 0.0);
        assert_eq!(eu_star(&scenario(0.5, 0.3)), 0.0);
    }

    #[test]
    fn u_star_examples() {
        let pr = params();
        assert!(close(client_u_star(0.25, &price(3.0, 7.0), &pr), 0.5));
        assert!(close(client_u_star(0.5, &price(3.0, 4.0), &pr), 3.0));
        assert!(close(client_u_star(0.25, &price(4.0, 6.0), &pr), 1.0));
    }

    #[test]
    fn u_star_matches_outcome_distributions() {
        let pr = params();
        for (q0, chi, p) in [
            (0.25, 0.8, price(3.0, 7.0)),
            (0.25, 0.3, price(3.0, 7.0)),
            (0.7, 0.3, price(3.0, 7.0)),
            (0.5, 0.3, price(3.0, 4.0)),
            (0.5, 0.99, price(3.0, 4.0)),
            (0.05, 0.5, price(3.0, 4.0)),
            (0.4, 0.5, price(4.0, 6.0)),
        ] {
            let d = outcome_distribution(&scenario(q0, chi), &p);
            assert!((client_value_of(&d, &p, &pr) - client_u_star(q0, &p, &pr)).abs() < 1e-12);
        }
    }

    #[test]
    fn gap_examples() {
        let pr = params();
        let gaps = discontinuity_gaps(0.25, &price(4.0, 6.0), &pr).unwrap();
        assert!(close(gaps.serious_side.near, 1.5));
        assert!(close(gaps.minor_side.near, 2.0));
        assert!(close(gaps.serious_side.gap, 1.0));
        assert!(discontinuity_gaps(0.25, &price(4.0, 7.0), &pr).is_err());

        // numeric limit along (4 - eps, 6)
        let eps = 1e-4;
        let drop = client_u_star(0.25, &price(4.0, 6.0), &pr) - client_u_star(0.25, &price(4.0 - eps, 6.0), &pr);
        assert!((drop - gaps.serious_side.far).abs() < 1e-3);
    }

    #[test]
    fn interior_equal_margin_gaps_positive() {
        let pr = params();
        let pbar = price(3.0, 5.0);
        for q0 in [0.05, 0.1, 0.25, 0.5, 0.9] {
            let gaps = discontinuity_gaps(q0, &pbar, &pr).unwrap();
            assert!(gaps.minor_side.gap > 1e-9 && gaps.serious_side.gap > 1e-9, "{q0}: {gaps:?}");
        }
    }
}
