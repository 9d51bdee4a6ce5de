#![allow(dead_code)]

use credence_core::model::{ModelParams, PriceList, Scenario};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn reference() -> ModelParams {
    ModelParams::new(1.0, 3.0, 4.0, 10.0).unwrap()
}

pub fn price(p1: f64, p2: f64) -> PriceList {
    PriceList::new(p1, p2, &reference()).unwrap()
}

pub fn scenario(q0: f64, chi: f64) -> Scenario {
    Scenario::new(reference(), q0, chi).unwrap()
}

pub fn random_params(rng: &mut ChaCha8Rng) -> ModelParams {
    let c1 = rng.gen_range(0.0..3.0);
    let d = rng.gen_range(0.2..3.0);
    let l1 = c1 + rng.gen_range(0.5..5.0);
    let l2 = l1 + d + rng.gen_range(0.2..6.0);
    ModelParams::new(c1, c1 + d, l1, l2).unwrap()
}

pub fn open_unit(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.01..0.99)
}

/// A list with the larger margin on the serious treatment.
pub fn random_p2(rng: &mut ChaCha8Rng, params: &ModelParams) -> PriceList {
    let d = params.cost_gap();
    let p1 = rng.gen_range(params.c1()..params.l1());
    let lo = p1 + d;
    let p2 = lo + (params.l2() - lo) * rng.gen_range(0.02..1.0);
    PriceList::new(p1, p2, params).unwrap()
}

/// A list with the larger margin on the minor treatment.
pub fn random_p1(rng: &mut ChaCha8Rng, params: &ModelParams) -> PriceList {
    let d = params.cost_gap();
    let p1 = params.c1() + (params.l1() - params.c1()) * rng.gen_range(0.02..1.0);
    let lo = params.c2().max(p1);
    let p2 = lo + (p1 + d - lo) * rng.gen_range(0.0..0.98);
    PriceList::new(p1, p2, params).unwrap()
}

/// An equal-margin list strictly inside the admissible box.
pub fn random_pbar(rng: &mut ChaCha8Rng, params: &ModelParams) -> PriceList {
    let span = params.l1() - params.c1();
    let p1 = params.c1() + span * rng.gen_range(0.01..0.99);
    PriceList::new(p1, p1 + params.cost_gap(), params).unwrap()
}
