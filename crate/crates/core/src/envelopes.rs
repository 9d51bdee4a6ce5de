//! The expert's belief-based indirect utility `v(q; p)`, its quasiconcave and
//! concave envelopes, and the cutoffs and credibility thresholds derived from
//! them.
//!
//! For a price list with the larger margin on the serious treatment the client
//! buys `a2` from the posterior `qbar(p)` upward. The envelopes then have one
//! kink at `qbar`: the quasiconcave envelope is a step from `p1 - c1` to
//! `p2 - c2`, the concave envelope is the chord from `(0, p1 - c1)` to
//! `(qbar, p2 - c2)` followed by a flat piece. Price lists with the larger
//! margin on the minor treatment mirror this around `qtilde(p)`.

use crate::error::{Error, Result};
use crate::model::{classify_region, expert_margin, expert_preferred_response, ModelParams, PriceList, Region, EPS};
use crate::piecewise::{Owner, Piece, PiecewiseAffine};

/// `v(q; p)`: the best expert margin among the client's optimal actions.
pub fn indirect_utility(q: f64, p: &PriceList, params: &ModelParams) -> f64 {
    expert_margin(expert_preferred_response(q, p, params), p, params)
}

/// Which client indifference pins down the purchase cutoffs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KinkCase {
    /// `p2 >= l2 - (l2 - l1) p1 / l1`: the client drops out (`a0`) between
    /// the two treatments.
    OutsideOptionBinds,
    /// Otherwise: the client switches directly from `a1` to `a2`.
    DirectSwitch,
}

pub fn kink_case(p: &PriceList, params: &ModelParams) -> KinkCase {
    if p.p2() >= params.l2() - params.loss_gap() / params.l1() * p.p1() {
        KinkCase::OutsideOptionBinds
    } else {
        KinkCase::DirectSwitch
    }
}

/// The `qbar` formula without a region check.
pub fn qbar_formula(p: &PriceList, params: &ModelParams) -> f64 {
    match kink_case(p, params) {
        KinkCase::OutsideOptionBinds => (p.p2() - params.l1()) / params.loss_gap(),
        KinkCase::DirectSwitch => (p.p2() - p.p1()) / params.l2(),
    }
}

/// Smallest posterior at which the client buys the serious treatment.
/// Defined for equal-margin and serious-margin price lists.
pub fn qbar(p: &PriceList, params: &ModelParams) -> Result<f64> {
    require_not_p1(p, params)?;
    Ok(qbar_formula(p, params))
}

/// The `qtilde` formula without a region check.
pub fn qtilde_formula(p: &PriceList, params: &ModelParams) -> f64 {
    match kink_case(p, params) {
        KinkCase::OutsideOptionBinds => (params.l1() - p.p1()) / params.l1(),
        KinkCase::DirectSwitch => (p.p2() - p.p1()) / params.l2(),
    }
}

/// Largest posterior at which the client still buys the minor treatment.
/// Defined for minor-margin price lists only.
pub fn qtilde(p: &PriceList, params: &ModelParams) -> Result<f64> {
    require_region(p, params, Region::P1, "P1")?;
    Ok(qtilde_formula(p, params))
}

/// Slope of the concave envelope below `qbar`. Zero for equal margins.
pub fn lambda(p: &PriceList, params: &ModelParams) -> Result<f64> {
    match require_not_p1(p, params)? {
        Region::Pbar => Ok(0.0),
        _ => {
            let gap = p.serious_margin(params) - p.minor_margin(params);
            Ok(gap / qbar_formula(p, params))
        }
    }
}

/// Rate at which the concave envelope falls above `qtilde` (minor-margin lists).
pub fn lambda_tilde(p: &PriceList, params: &ModelParams) -> Result<f64> {
    let qt = qtilde(p, params)?;
    Ok((p.minor_margin(params) - p.serious_margin(params)) / (1.0 - qt))
}

/// Region-appropriate cutoffs and slopes of a price list.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub region: Region,
    pub qbar: Option<f64>,
    pub qtilde: Option<f64>,
    pub lambda: Option<f64>,
    pub lambda_tilde: Option<f64>,
}

pub fn thresholds(p: &PriceList, params: &ModelParams) -> Thresholds {
    let region = classify_region(p, params);
    Thresholds {
        region,
        qbar: qbar(p, params).ok(),
        qtilde: qtilde(p, params).ok(),
        lambda: lambda(p, params).ok(),
        lambda_tilde: lambda_tilde(p, params).ok(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopePair {
    pub qcav: PiecewiseAffine,
    pub cav: PiecewiseAffine,
}

/// Envelopes of `v(.; p)` for equal-margin and serious-margin price lists.
pub fn envelopes_p2(p: &PriceList, params: &ModelParams) -> Result<EnvelopePair> {
    let m1 = p.minor_margin(params);
    let m2 = p.serious_margin(params);
    if require_not_p1(p, params)? == Region::Pbar {
        return Ok(EnvelopePair {
            qcav: PiecewiseAffine::constant(m2),
            cav: PiecewiseAffine::constant(m2),
        });
    }
    let qb = qbar_formula(p, params);
    let slope = (m2 - m1) / qb;
    let qcav = PiecewiseAffine::new(
        vec![Piece::constant(0.0, qb, m1), Piece::constant(qb, 1.0, m2)],
        Owner::Right,
    );
    let cav = PiecewiseAffine::new(
        vec![
            Piece { lo: 0.0, hi: qb, slope, intercept: m1 },
            Piece::constant(qb, 1.0, m2),
        ],
        Owner::Right,
    );
    Ok(EnvelopePair { qcav, cav })
}

/// Envelopes of `v(.; p)` for minor-margin price lists.
pub fn envelopes_p1(p: &PriceList, params: &ModelParams) -> Result<EnvelopePair> {
    let qt = qtilde(p, params)?;
    let m1 = p.minor_margin(params);
    let m2 = p.serious_margin(params);
    let lt = (m1 - m2) / (1.0 - qt);
    let qcav = PiecewiseAffine::new(
        vec![Piece::constant(0.0, qt, m1), Piece::constant(qt, 1.0, m2)],
        Owner::Left,
    );
    let cav = PiecewiseAffine::new(
        vec![
            Piece::constant(0.0, qt, m1),
            Piece { lo: qt, hi: 1.0, slope: -lt, intercept: lt + m2 },
        ],
        Owner::Left,
    );
    Ok(EnvelopePair { qcav, cav })
}

pub fn envelopes(p: &PriceList, params: &ModelParams) -> EnvelopePair {
    match classify_region(p, params) {
        Region::P1 => envelopes_p1(p, params),
        _ => envelopes_p2(p, params),
    }
    .expect("region checked")
}

/// Credibility above which persuasion beats cheap talk at prior `q0`:
/// `(qbar - q0) / (qbar (1 - q0))`. Requires a serious-margin price list and
/// `0 <= q0 < qbar`.
pub fn chi_lower(q0: f64, p: &PriceList, params: &ModelParams) -> Result<f64> {
    require_region(p, params, Region::P2, "P2")?;
    let qb = qbar_formula(p, params);
    if !(0.0..qb - EPS).contains(&q0) {
        return Err(Error::Domain(format!("prior {q0} must lie in [0, qbar = {qb})")));
    }
    Ok((qb - q0) / (qb * (1.0 - q0)))
}

/// Inverse of [`chi_lower`] in the prior: the lowest prior at which credibility
/// `chi` suffices for persuasion.
pub fn q_lower(chi: f64, p: &PriceList, params: &ModelParams) -> Result<f64> {
    require_not_p1(p, params)?;
    check_unit(chi, "chi")?;
    let qb = qbar_formula(p, params);
    if chi == 1.0 {
        return Ok(0.0);
    }
    Ok(qb * (1.0 - chi) / (1.0 - chi * qb))
}

/// Highest prior at which a minor-margin price list still yields the
/// persuasion value: `qtilde / (1 - (1 - qtilde) chi)`.
pub fn q_hat(chi: f64, p: &PriceList, params: &ModelParams) -> Result<f64> {
    let qt = qtilde(p, params)?;
    check_unit(chi, "chi")?;
    Ok(qt / (1.0 - (1.0 - qt) * chi))
}

/// Expert profit under discriminatory pricing, `max_p v(q0; p)`: either sell
/// the minor treatment at the client's reservation price `(1 - q0) l1`, or
/// the serious one at `q0 l2 + (1 - q0) l1`.
pub fn pi(q0: f64, params: &ModelParams) -> f64 {
    let minor = (1.0 - q0) * params.l1() - params.c1();
    let serious = q0 * params.l2() + (1.0 - q0) * params.l1() - params.c2();
    minor.max(serious)
}

/// Quasiconcave envelope of [`pi`].
pub fn pi_qcav(q0: f64, params: &ModelParams) -> f64 {
    pi_envelopes(params).qcav.eval(q0)
}

/// Concave envelope of [`pi`]: the full surplus.
pub fn pi_cav(q0: f64, params: &ModelParams) -> f64 {
    pi_envelopes(params).cav.eval(q0)
}

pub fn pi_envelopes(params: &ModelParams) -> EnvelopePair {
    let minor_surplus = params.l1() - params.c1();
    let serious_surplus = params.l2() - params.c2();
    let cutoff = params.prior_cutoff();
    let qcav = PiecewiseAffine::new(
        vec![
            Piece::constant(0.0, cutoff, minor_surplus),
            Piece {
                lo: cutoff,
                hi: 1.0,
                slope: params.loss_gap(),
                intercept: params.l1() - params.c2(),
            },
        ],
        Owner::Left,
    );
    let cav = PiecewiseAffine::new(
        vec![Piece {
            lo: 0.0,
            hi: 1.0,
            slope: serious_surplus - minor_surplus,
            intercept: minor_surplus,
        }],
        Owner::Right,
    );
    EnvelopePair { qcav, cav }
}

fn require_region(p: &PriceList, params: &ModelParams, want: Region, name: &'static str) -> Result<()> {
    let found = classify_region(p, params);
    if found == want {
        Ok(())
    } else {
        Err(Error::Region { required: name, found })
    }
}

fn require_not_p1(p: &PriceList, params: &ModelParams) -> Result<Region> {
    match classify_region(p, params) {
        Region::P1 => Err(Error::Region { required: "Pbar or P2", found: Region::P1 }),
        r => Ok(r),
    }
}

fn check_unit(x: f64, name: &str) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {x} outside [0, 1]")))
    }
}
