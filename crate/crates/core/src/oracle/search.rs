use crate::equilibrium::{optimal_serious_price, p_eq_value};
use crate::error::{Error, Result};
use crate::model::{PriceList, Scenario, EPS};

/// Best price list found on a `grid_n x grid_n` grid over the admissible set,
/// seeded with the two analytic candidates `(l1, p2*)` and the equal-margin
/// list at `p1 = l1`. A grid point replaces the incumbent only when it is
/// better by more than [`EPS`].
pub fn price_search(s: &Scenario, grid_n: usize) -> Result<(PriceList, f64)> {
    if grid_n < 51 {
        return Err(Error::InvalidInput(format!("grid_n = {grid_n} is below 51")));
    }
    let params = &s.params;
    let candidates = [
        (params.l1(), optimal_serious_price(s.q0(), s.chi(), params)),
        (params.l1(), params.l1() - params.c1() + params.c2()),
    ];
    let mut best: Option<(PriceList, f64)> = None;
    let mut offer = |p: PriceList, margin: f64| {
        let v = p_eq_value(s, &p).value;
        if best.map_or(true, |(_, b)| v > b + margin) {
            best = Some((p, v));
        }
    };
    for (p1, p2) in candidates {
        if let Ok(p) = PriceList::new(p1, p2, params) {
            offer(p, 0.0);
        }
    }
    let n = (grid_n - 1) as f64;
    let lerp = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / n;
    for i in 0..grid_n {
        let p1 = lerp(params.c1(), params.l1(), i);
        for j in 0..grid_n {
            let p2 = lerp(params.c2(), params.l2(), j);
            if p2 < p1 {
                continue;
            }
            if let Ok(p) = PriceList::new(p1, p2, params) {
                offer(p, EPS);
            }
        }
    }
    best.ok_or(Error::Infeasible)
}
