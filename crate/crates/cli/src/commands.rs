use credence_core::envelopes::{envelopes, pi, pi_cav, pi_qcav};
use credence_core::equilibrium::{
    benchmark_value, canonical_profile, chi_star, equilibrium_value, ev_star, optimal_prices, p_eq_value,
    public_credibility_ev, public_credibility_value, Benchmark, OptimalPrices, PriceOptimum,
};
use credence_core::oracle::{price_search, simulate, solve_program, verify_equilibrium};
use credence_core::welfare::{client_u_star, client_value_set, eu_star, total_surplus};
use credence_core::{PriceList, Region, Scenario};
use rayon::prelude::*;

use crate::args::{Command, Figure, SweepArgs};
use crate::config::{Axis, Settings};
use crate::error::CliError;
use crate::table::{Cell, Table};

/// Where the command's main product goes when no output file is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primary {
    /// The CSV goes to stdout and the summary to stderr.
    Data,
    /// The summary goes to stdout; the CSV is only written to a file.
    Summary,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub table: Table,
    pub summary: Vec<String>,
    pub primary: Primary,
}

/// Short human-readable number: twelve significant digits, trailing zeros
/// dropped.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if rounded == 0.0 {
        "0".into()
    } else if (1e-4..1e15).contains(&rounded.abs()) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

fn pair(p: &PriceList) -> String {
    format!("({}, {})", num(p.p1()), num(p.p2()))
}

fn pool(settings: &Settings) -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = settings.threads {
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Config(format!("cannot start worker threads: {e}")))
}

/// Evaluates `row` at every point in parallel, keeping the input order.
fn grid<T, F>(settings: &Settings, points: &[T], row: F) -> Result<Vec<Vec<Cell>>, CliError>
where
    T: Sync,
    F: Fn(&T) -> Result<Vec<Cell>, CliError> + Sync + Send,
{
    pool(settings)?.install(|| points.par_iter().map(&row).collect())
}

fn optimum_or_given(settings: &Settings, s: &Scenario) -> Result<PriceList, CliError> {
    match settings.price_list()? {
        Some(p) => Ok(p),
        None => Ok(optimal_prices(s)?.canonical),
    }
}

pub fn run(command: &Command, settings: &Settings) -> Result<Report, CliError> {
    match command {
        Command::Value => value(settings),
        Command::Price { grid } => price(settings, *grid),
        Command::Welfare => welfare(settings),
        Command::Sweep(args) => sweep(settings, args),
        Command::Figure { kind } => figure(settings, kind),
        Command::Simulate { n, seed } => run_simulation(settings, *n, *seed),
        Command::Verify { tol } => verify(settings, *tol),
        Command::Oracle { grid } => oracle(settings, *grid),
    }
}

fn price_cells(opt: &Result<OptimalPrices, credence_core::Error>) -> [Cell; 5] {
    match opt {
        Ok(o) => {
            let (lo, hi) = match o.optimum {
                PriceOptimum::Unique => (o.canonical.p2(), o.canonical.p2()),
                PriceOptimum::Family { p2_min, p2_max } => (p2_min, p2_max),
            };
            [o.canonical.p1().into(), o.canonical.p2().into(), (o.is_unique() as u64).into(), lo.into(), hi.into()]
        }
        Err(_) => [f64::NAN.into(), f64::NAN.into(), 0u64.into(), f64::NAN.into(), f64::NAN.into()],
    }
}

fn value(settings: &Settings) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let ev = equilibrium_value(&s);
    let opt = optimal_prices(&s);
    let mut summary = Vec::new();
    let mut mode = String::from("none");
    match &opt {
        Ok(o) => {
            mode = p_eq_value(&s, &o.canonical).mode.to_string();
            summary.push(format!("ev = {}, p = {}", num(ev), pair(&o.canonical)));
            if let PriceOptimum::Family { p2_min, p2_max } = o.optimum {
                summary.push(format!("optimal lists: p1 = {}, p2 in [{}, {}]", num(o.canonical.p1()), num(p2_min), num(p2_max)));
            }
            summary.push(format!("mode = {mode}, chi* = {}", num(chi_star(s.q0(), &s.params))));
        }
        Err(e) => summary.push(format!("ev = {}, p undefined ({e})", num(ev))),
    }
    let mut table = Table::new(&["q0", "chi", "ev", "p1", "p2", "unique", "p2_min", "p2_max", "mode"]);
    let mut row: Vec<Cell> = vec![s.q0().into(), s.chi().into(), ev.into()];
    row.extend(price_cells(&opt));
    row.push(mode.into());
    table.push(row);
    Ok(Report { table, summary, primary: Primary::Summary })
}

fn price(settings: &Settings, grid_n: Option<usize>) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let grid_n = settings.steps_or(grid_n, "grid", 201)?;
    let opt = optimal_prices(&s)?;
    let ev = equilibrium_value(&s);
    let (found, found_value) = price_search(&s, grid_n)?;
    let summary = vec![
        format!("closed form: p = {}, ev = {}", pair(&opt.canonical), num(ev)),
        format!("grid search ({grid_n} x {grid_n}): p = {}, value = {}, gap = {}", pair(&found), num(found_value), num(ev - found_value)),
    ];
    let mut table = Table::new(&["q0", "chi", "p1", "p2", "ev", "search_p1", "search_p2", "search_value"]);
    table.push(vec![
        s.q0().into(),
        s.chi().into(),
        opt.canonical.p1().into(),
        opt.canonical.p2().into(),
        ev.into(),
        found.p1().into(),
        found.p2().into(),
        found_value.into(),
    ]);
    Ok(Report { table, summary, primary: Primary::Summary })
}

fn welfare(settings: &Settings) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let ts = total_surplus(s.q0(), &s.params);
    let ev = equilibrium_value(&s);
    let set = client_value_set(&s);
    let eu = eu_star(&s);
    let mut summary = vec![
        format!("total surplus = {}, ev = {}", num(ts), num(ev)),
        format!("client values in [{}, {}], eu* = {}", num(set.lo), num(set.hi), num(eu)),
    ];
    let mut header = vec!["q0", "chi", "total_surplus", "ev", "client_lo", "client_hi", "eu"];
    let mut row: Vec<Cell> = vec![s.q0().into(), s.chi().into(), ts.into(), ev.into(), set.lo.into(), set.hi.into(), eu.into()];
    if let Some(p) = settings.price_list()? {
        let u = client_u_star(s.q0(), &p, &s.params);
        let v = p_eq_value(&s, &p);
        summary.push(format!("at p = {}: u* = {}, expert value = {} ({})", pair(&p), num(u), num(v.value), v.mode));
        header.extend(["p1", "p2", "u_star", "value"]);
        row.extend([p.p1().into(), p.p2().into(), u.into(), v.value.into()]);
    }
    let mut table = Table::new(&header);
    table.push(row);
    Ok(Report { table, summary, primary: Primary::Summary })
}

fn sweep(settings: &Settings, args: &SweepArgs) -> Result<Report, CliError> {
    let q0 = Axis::new(
        "q0",
        settings.f64_or(args.q0_min, "q0_min", 0.01)?,
        settings.f64_or(args.q0_max, "q0_max", 0.99)?,
        settings.steps_or(args.q0_steps, "q0_steps", 99)?,
    )?;
    let chi = Axis::new(
        "chi",
        settings.f64_or(args.chi_min, "chi_min", 0.0)?,
        settings.f64_or(args.chi_max, "chi_max", 1.0)?,
        settings.steps_or(args.chi_steps, "chi_steps", 101)?,
    )?;
    let cells: Vec<(f64, f64)> = q0.points().into_iter().flat_map(|q| chi.points().into_iter().map(move |c| (q, c))).collect();
    let params = settings.params;
    let fixed = settings.price_list()?;
    let (table, summary) = match fixed {
        None => {
            let rows = grid(settings, &cells, |&(q, c)| {
                let s = Scenario::new(params, q, c)?;
                let opt = optimal_prices(&s);
                let [p1, p2, unique, _, _] = price_cells(&opt);
                Ok(vec![q.into(), c.into(), equilibrium_value(&s).into(), p1, p2, unique, eu_star(&s).into(), chi_star(q, &params).into()])
            })?;
            let mut t = Table::new(&["q0", "chi", "ev", "p1", "p2", "unique", "eu", "chi_star"]);
            t.rows = rows;
            (t, format!("sweep: {} x {} cells at optimal prices", q0.steps, chi.steps))
        }
        Some(p) => {
            let rows = grid(settings, &cells, |&(q, c)| {
                let s = Scenario::new(params, q, c)?;
                let v = p_eq_value(&s, &p);
                Ok(vec![
                    q.into(),
                    c.into(),
                    v.value.into(),
                    v.mode.to_string().into(),
                    client_u_star(q, &p, &params).into(),
                    public_credibility_value(&s, &p).into(),
                ])
            })?;
            let mut t = Table::new(&["q0", "chi", "value", "mode", "u_star", "value_public"]);
            t.rows = rows;
            (t, format!("sweep: {} x {} cells at p = {}", q0.steps, chi.steps, pair(&p)))
        }
    };
    Ok(Report { table, summary: vec![summary], primary: Primary::Data })
}

fn figure(settings: &Settings, kind: &Figure) -> Result<Report, CliError> {
    let params = settings.params;
    let (header, rows, label): (&[&str], _, String) = match kind {
        Figure::EvSurface(st) => {
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 101)?)?;
            let cells: Vec<(f64, f64)> =
                axis.points().into_iter().flat_map(|q| axis.points().into_iter().map(move |c| (q, c))).collect();
            let rows = grid(settings, &cells, |&(q, c)| Ok(vec![q.into(), c.into(), ev_star(q, c, &params).into()]))?;
            (&["q0", "chi", "ev"], rows, format!("ev-surface: {0} x {0}", axis.steps))
        }
        Figure::EvSlice(st) => {
            let chi = settings.chi;
            unit_chi(chi)?;
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 201)?)?;
            let rows = grid(settings, &axis.points(), |&q| {
                Ok(vec![
                    q.into(),
                    ev_star(q, chi, &params).into(),
                    benchmark_value(q, Benchmark::NoCredibility, &params).into(),
                    benchmark_value(q, Benchmark::FullCredibility, &params).into(),
                ])
            })?;
            (&["q0", "ev", "ev_no_credibility", "ev_full_credibility"], rows, format!("ev-slice at chi = {}", num(chi)))
        }
        Figure::PEqValue(st) => {
            let p = settings.require_prices()?;
            let s = settings.scenario()?;
            let env = envelopes(&p, &params);
            let (qcav, cav) = (env.qcav.eval(s.q0()), env.cav.eval(s.q0()));
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 201)?)?;
            let rows = grid(settings, &axis.points(), |&c| {
                let v = p_eq_value(&s.with_chi(c)?, &p);
                Ok(vec![c.into(), v.value.into(), v.mode.to_string().into(), qcav.into(), cav.into()])
            })?;
            (&["chi", "value", "mode", "qcav", "cav"], rows, format!("p-eq-value at q0 = {}, p = {}", num(s.q0()), pair(&p)))
        }
        Figure::UStar(st) => {
            let p = settings.require_prices()?;
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 201)?)?;
            let rows = grid(settings, &axis.points(), |&q| Ok(vec![q.into(), client_u_star(q, &p, &params).into()]))?;
            (&["q0", "u_star"], rows, format!("u-star at p = {}", pair(&p)))
        }
        Figure::PublicCredibility(st) => {
            let chi = settings.chi;
            unit_chi(chi)?;
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 201)?)?;
            let rows = grid(settings, &axis.points(), |&q| {
                Ok(vec![q.into(), ev_star(q, chi, &params).into(), public_credibility_ev(q, chi, &params).into()])
            })?;
            (&["q0", "ev", "ev_public"], rows, format!("public-credibility at chi = {}", num(chi)))
        }
        Figure::Benchmarks(st) => {
            let axis = Axis::unit(settings.steps_or(st.steps, "steps", 201)?)?;
            let rows = grid(settings, &axis.points(), |&q| {
                Ok(vec![q.into(), pi(q, &params).into(), pi_qcav(q, &params).into(), pi_cav(q, &params).into()])
            })?;
            (&["q0", "pi", "qcav_pi", "cav_pi"], rows, "benchmarks".to_string())
        }
    };
    let mut table = Table::new(header);
    let n = rows.len();
    table.rows = rows;
    Ok(Report { table, summary: vec![format!("{label}: {n} rows")], primary: Primary::Data })
}

fn unit_chi(chi: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&chi) {
        Ok(())
    } else {
        Err(CliError::Config(format!("chi = {chi} must lie in [0, 1]")))
    }
}

fn run_simulation(settings: &Settings, n: Option<u64>, seed: Option<u64>) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let p = optimum_or_given(settings, &s)?;
    let n = settings.u64_or(n, "n", 100_000)?;
    let seed = settings.u64_or(seed, "seed", 42)?;
    if n == 0 {
        return Err(CliError::Config("n must be positive".into()));
    }
    let profile = canonical_profile(&s, &p);
    let report = simulate(&s, &p, &profile, n, seed)?;
    let theory = p_eq_value(&s, &p);
    let mut table = Table::new(&["message", "posterior", "empirical_posterior", "expert_payoff", "frequency"]);
    for a in &report.atoms {
        table.push(vec![
            (a.message as u64).into(),
            a.posterior.into(),
            a.empirical_posterior.into(),
            a.expert_payoff.into(),
            a.frequency.into(),
        ]);
    }
    let summary = vec![format!(
        "n = {n}, seed = {seed}, p = {}: expert payoff {} +/- {} (theory {}, {}), client payoff {} +/- {}",
        pair(&p),
        num(report.mean_expert_payoff),
        num(report.std_err),
        num(theory.value),
        theory.mode,
        num(report.mean_client_payoff),
        num(report.client_std_err),
    )];
    Ok(Report { table, summary, primary: Primary::Data })
}

fn verify(settings: &Settings, tol: Option<f64>) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let p = optimum_or_given(settings, &s)?;
    let tol = settings.f64_or(tol, "tol", 1e-9)?;
    let profile = canonical_profile(&s, &p);
    let cert = verify_equilibrium(&s, &p, &profile, tol)?;
    let yes = |b: bool| if b { "ok" } else { "FAILED" };
    let summary = vec![
        format!("p = {}: equilibrium = {}, value = {}", pair(&p), cert.is_equilibrium(), num(cert.value)),
        format!("bayes {} (deviation {})", yes(cert.bayes_ok), num(cert.bayes_deviation)),
        format!("client {} (regret {})", yes(cert.client_opt_ok), num(cert.client_regret)),
        format!("expert {} (regret {})", yes(cert.expert_opt_ok), num(cert.expert_regret)),
        format!("off-path messages: {:?}", cert.off_path),
    ];
    let mut table = Table::new(&[
        "p1", "p2", "equilibrium", "value", "bayes_deviation", "client_regret", "expert_regret",
    ]);
    table.push(vec![
        p.p1().into(),
        p.p2().into(),
        (cert.is_equilibrium() as u64).into(),
        cert.value.into(),
        cert.bayes_deviation.into(),
        cert.client_regret.into(),
        cert.expert_regret.into(),
    ]);
    Ok(Report { table, summary, primary: Primary::Summary })
}

fn oracle(settings: &Settings, grid_n: Option<usize>) -> Result<Report, CliError> {
    let s = settings.scenario()?;
    let p = optimum_or_given(settings, &s)?;
    let grid_n = settings.steps_or(grid_n, "grid", 401)?;
    let mut table = Table::new(&["check", "closed_form", "oracle", "abs_diff"]);
    let mut summary = Vec::new();
    let closed = p_eq_value(&s, &p);
    if credence_core::model::classify_region(&p, &s.params) == Region::P1 {
        summary.push(format!("program: skipped, p = {} has the larger minor margin", pair(&p)));
    } else {
        let sol = solve_program(&s, &p, grid_n)?;
        let diff = (sol.value - closed.value).abs();
        summary.push(format!(
            "program at p = {}: {} (beta {}, gamma {}, k {}) vs {} ({}), diff {}",
            pair(&p),
            num(sol.value),
            num(sol.beta),
            num(sol.gamma),
            num(sol.k),
            num(closed.value),
            closed.mode,
            num(diff)
        ));
        table.push(vec!["program".into(), closed.value.into(), sol.value.into(), diff.into()]);
    }
    if s.chi() > 0.0 {
        let search_n = grid_n.clamp(51, 201);
        let (found, value) = price_search(&s, search_n)?;
        let ev = equilibrium_value(&s);
        let diff = (ev - value).abs();
        summary.push(format!("price search ({search_n} x {search_n}): {} at {} vs ev* {}, diff {}", num(value), pair(&found), num(ev), num(diff)));
        table.push(vec!["price_search".into(), ev.into(), value.into(), diff.into()]);
    }
    Ok(Report { table, summary, primary: Primary::Summary })
}
