use crate::envelopes::{q_lower, qbar_formula};
use crate::error::{Error, Result};
use crate::model::{classify_region, PriceList, Region, Scenario};

const FEAS_TOL: f64 = 1e-12;

/// Maximizer of the split program. The credible expert's message pool sits
/// at posterior `beta` with weight `k`, everything else at `gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProgramSolution {
    pub value: f64,
    pub beta: f64,
    pub gamma: f64,
    pub k: f64,
}

/// The envelopes are rebuilt here from the two margins and the cutoff with
/// exact comparisons, so the oracle does not share tolerances with the
/// closed forms.
struct Program<'a> {
    s: &'a Scenario,
    qbar: f64,
    m1: f64,
    m2: f64,
    best: Option<ProgramSolution>,
}

impl Program<'_> {
    fn feasible(&self, beta: f64, gamma: f64, k: f64) -> bool {
        let (q0, chi) = (self.s.q0(), self.s.chi());
        let unit = |x: f64| (-FEAS_TOL..=1.0 + FEAS_TOL).contains(&x);
        unit(beta)
            && unit(gamma)
            && unit(k)
            && ((1.0 - k) * gamma + k * beta - q0).abs() <= FEAS_TOL
            && (1.0 - k) * gamma >= q0 * (1.0 - chi) - FEAS_TOL
            && (1.0 - k) * (1.0 - gamma) >= (1.0 - q0) * (1.0 - chi) - FEAS_TOL
    }

    fn qcav(&self, q: f64) -> f64 {
        if q >= self.qbar {
            self.m2
        } else {
            self.m1
        }
    }

    fn cav(&self, q: f64) -> f64 {
        if q >= self.qbar {
            self.m2
        } else {
            self.m1 + (self.m2 - self.m1) * q / self.qbar
        }
    }

    fn objective(&self, beta: f64, gamma: f64, k: f64) -> f64 {
        let capped = if gamma >= self.qbar { self.cav(beta) } else { self.m1 };
        (1.0 - k) * self.qcav(gamma) + k * capped
    }

    fn consider(&mut self, beta: f64, gamma: f64, k: f64) {
        if !self.feasible(beta, gamma, k) {
            return;
        }
        let (beta, gamma, k) = (beta.clamp(0.0, 1.0), gamma.clamp(0.0, 1.0), k.clamp(0.0, 1.0));
        let value = self.objective(beta, gamma, k);
        if self.best.map_or(true, |b| value > b.value + 1e-15) {
            self.best = Some(ProgramSolution { value, beta, gamma, k });
        }
    }
}

/// Brute-force maximization of the split program on a uniform grid of
/// `grid_n` points per axis, with the analytic kink points added to every
/// axis. Each pair of coordinates determines the third through the
/// Bayes-plausibility constraint.
pub fn solve_program(s: &Scenario, p: &PriceList, grid_n: usize) -> Result<ProgramSolution> {
    let params = &s.params;
    let found = classify_region(p, params);
    if found == Region::P1 {
        return Err(Error::Region { required: "Pbar or P2", found });
    }
    if grid_n < 101 {
        return Err(Error::InvalidInput(format!("grid_n = {grid_n} is below 101")));
    }
    let qbar = qbar_formula(p, params);
    let q0 = s.q0();

    let mut axis: Vec<f64> = vec![0.0, qbar, q0, 1.0];
    if let Ok(q) = q_lower(s.chi(), p, params) {
        axis.push(q);
    }
    let n = grid_n - 1;
    axis.extend((0..=n).map(|i| i as f64 / n as f64));

    let mut prog = Program {
        s,
        qbar,
        m1: p.minor_margin(params),
        m2: p.serious_margin(params),
        best: None,
    };

    for &beta in &axis {
        for &gamma in &axis {
            if (gamma - beta).abs() > 0.0 {
                prog.consider(beta, gamma, (gamma - q0) / (gamma - beta));
            }
        }
    }
    for &k in &axis {
        for &x in &axis {
            if k > 0.0 {
                prog.consider((q0 - (1.0 - k) * x) / k, x, k);
            }
            if k < 1.0 {
                prog.consider(x, (q0 - k * x) / (1.0 - k), k);
            }
        }
        prog.consider(q0, q0, k);
    }
    prog.best.ok_or(Error::Infeasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;

    fn setup(q0: f64, chi: f64, p1: f64, p2: f64) -> (Scenario, PriceList) {
        let params = ModelParams::new(1.0, 3.0, 4.0, 10.0).unwrap();
        let p = PriceList::new(p1, p2, &params).unwrap();
        (Scenario::new(params, q0, chi).unwrap(), p)
    }

    #[test]
    fn persuasion_example() {
        let (s, p) = setup(0.25, 0.8, 4.0, 7.0);
        let sol = solve_program(&s, &p, 201).unwrap();
        assert!((sol.value - 3.5).abs() < 1e-12);
        assert!(sol.beta.abs() < 1e-12);
        assert!((sol.gamma - 0.5).abs() < 1e-12);
        assert!((sol.k - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cheap_talk_example() {
        let (s, p) = setup(0.25, 0.5, 4.0, 7.0);
        assert!((solve_program(&s, &p, 201).unwrap().value - 3.0).abs() < 1e-12);
    }

    #[test]
    fn equal_margin_is_constant() {
        let (s, p) = setup(0.4, 0.3, 3.0, 5.0);
        assert!((solve_program(&s, &p, 101).unwrap().value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_minor_margin_and_coarse_grids() {
        let (s, p) = setup(0.4, 0.3, 3.0, 4.0);
        assert!(solve_program(&s, &p, 201).is_err());
        let (s, p) = setup(0.4, 0.3, 4.0, 7.0);
        assert_eq!(
            solve_program(&s, &p, 50),
            Err(Error::InvalidInput("grid_n = 50 is below 101".into()))
        );
    }
}
