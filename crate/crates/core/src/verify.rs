//! Acceptance checks, shared by the test suite and `dyadgen verify`.
//!
//! Every tolerance is a named constant below. `Level::Fast` cuts
//! replication counts and sizes but keeps the tolerances.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::analytics::{
    expected_in_degree, extracted_gamma, fit_tail_top_decile, in_degree_recursion, linear_fit,
    log_spaced, predicted_avg_degree, predicted_gamma, regime_classify, AvgDegreeCurve,
    AvgDegreeLaw, DegreeStats, Regime,
};
use crate::arrows::{
    build_hasse, class_label, enumerate_closed_classes, enumerate_deletion_invariant,
    transitive_closure, ArrowSet, ArrowType, CompositionTable,
};
use crate::dorpa::{
    dorpa_edge_prob, sample_dorpa_events, sample_dorpa_observed, sample_dorpa_sequential, PopOrder,
};
use crate::error::{Error, Result};
use crate::network::{sample_parallel, sample_sequential, write_network_string, ModelParams};
use crate::rng::{RandomSource, StreamTag};

pub const DELETION_INVARIANT_COUNT: usize = 96;
pub const CLOSED_CLASS_COUNT: usize = 21;
pub const ENUMERATION_TIME_LIMIT: Duration = Duration::from_secs(1);

pub const CONSTANT_AVG_REL_TOL: f64 = 0.05;
pub const LOG_SLOPE_REL_TOL: f64 = 0.10;
pub const POLY_SLOPE_ABS_TOL: f64 = 0.05;
pub const TAIL_TOL_CONSTANT: f64 = 0.3;
pub const TAIL_TOL_POLYNOMIAL: f64 = 0.4;
pub const CLOSED_FORM_REL_TOL: f64 = 1e-10;
pub const MONTE_CARLO_Z: f64 = 3.0;
pub const CHI_SQUARE_MIN_P: f64 = 1e-3;
/// Groups enter the chi-square only with `N p >= 5` and `N (1 - p) >= 5`.
pub const CHI_SQUARE_MIN_EXPECTED: f64 = 5.0;
pub const EXPONENT_REL_TOL: f64 = 0.01;

/// Window `1 << j << n` for exponent extraction.
pub const EXTRACTION_J: f64 = 1e250;
pub const EXTRACTION_N: f64 = 1e300;

/// `beta` used by the simulation criteria.
pub const SIM_BETA: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidParams(format!(
                "unknown level `{other}` (expected fast or full)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {} ({:.1}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyReport {
    pub outcomes: Vec<CriterionOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.outcomes.iter().map(|o| format!("{o}\n")).collect();
        let failed = self.outcomes.iter().filter(|o| !o.passed).count();
        out.push_str(&format!(
            "{} of {} criteria passed\n",
            self.outcomes.len() - failed,
            self.outcomes.len()
        ));
        out
    }
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "enumeration counts"),
    (2, "composition anchors"),
    (3, "closure spot-checks"),
    (4, "constant-regime average degree"),
    (5, "logarithmic-regime slope"),
    (6, "polynomial-regime growth exponent"),
    (7, "power-law tails"),
    (8, "closed-form in-degree"),
    (9, "parallel determinism"),
    (10, "exponential-link equivalence"),
    (11, "exponent self-consistency"),
];

/// The acceptance suite bound to a composition table, so a tampered table
/// can be checked.
#[derive(Debug, Clone)]
pub struct Suite {
    pub level: Level,
    pub table: CompositionTable,
}

impl Suite {
    pub fn new(level: Level) -> Result<Self> {
        Ok(Suite {
            level,
            table: CompositionTable::derive(6)?,
        })
    }

    pub fn with_table(level: Level, table: CompositionTable) -> Self {
        Suite { level, table }
    }

    fn full(&self) -> bool {
        self.level == Level::Full
    }

    /// Runs the listed criteria (all when `ids` is empty), calling
    /// `on_done` after each.
    pub fn run<F: FnMut(&CriterionOutcome)>(&self, ids: &[u8], mut on_done: F) -> VerifyReport {
        let mut report = VerifyReport::default();
        for (id, name) in CRITERIA {
            if !ids.is_empty() && !ids.contains(&id) {
                continue;
            }
            let outcome = self.run_one(id, name);
            on_done(&outcome);
            report.outcomes.push(outcome);
        }
        report
    }

    pub fn run_one(&self, id: u8, name: &'static str) -> CriterionOutcome {
        let start = Instant::now();
        let result = match id {
            1 => self.enumeration_counts(),
            2 => self.composition_anchors(),
            3 => self.closure_spot_checks(),
            4 => self.constant_regime(),
            5 => self.logarithmic_regime(),
            6 => self.polynomial_regime(),
            7 => self.power_law_tails(),
            8 => self.closed_form_in_degree(),
            9 => self.parallel_determinism(),
            10 => self.dorpa_equivalence(),
            11 => self.exponent_self_consistency(),
            _ => Err(Error::Precondition(format!("no criterion {id}"))),
        };
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(v) => v,
            Err(e) => (false, format!("error: {e}")),
        };
        if id == 1 && elapsed > ENUMERATION_TIME_LIMIT {
            passed = false;
            detail.push_str(&format!("; took {:.3}s", elapsed.as_secs_f64()));
        }
        CriterionOutcome {
            id,
            name,
            passed,
            detail,
            elapsed,
        }
    }

    fn enumeration_counts(&self) -> Result<(bool, String)> {
        let invariant = enumerate_deletion_invariant();
        let closed = enumerate_closed_classes(&self.table);
        let closed_sets: HashSet<ArrowSet> = closed.iter().map(|c| c.arrows).collect();
        let stray = invariant
            .iter()
            .filter(|c| {
                let s = transitive_closure(c.arrows, &self.table).without(ArrowType::SelfArrow);
                !closed_sets.contains(&s)
            })
            .count();
        let ok = invariant.len() == DELETION_INVARIANT_COUNT
            && closed.len() == CLOSED_CLASS_COUNT
            && stray == 0;
        Ok((
            ok,
            format!(
                "{} deletion-invariant (want {DELETION_INVARIANT_COUNT}), {} closed (want {CLOSED_CLASS_COUNT}), {stray} closures outside the closed list",
                invariant.len(),
                closed.len()
            ),
        ))
    }

    fn composition_anchors(&self) -> Result<(bool, String)> {
        use ArrowType::*;
        let t = &self.table;
        let checks = [
            ("Path then Path", t.get(Path, Path), ArrowSet::from([Far])),
            (
                "Hub then Old",
                t.get(Hub, Old),
                ArrowSet::from([Mid, Path, Far]),
            ),
            ("Old then Hub", t.get(Old, Hub), ArrowSet::from([Mid])),
            (
                "closure {Hub,Path}",
                transitive_closure(ArrowSet::from([Hub, Path]), t).without(SelfArrow),
                ArrowSet::from([Hub, Path, Far]),
            ),
        ];
        Ok(set_checks(&checks))
    }

    fn closure_spot_checks(&self) -> Result<(bool, String)> {
        use ArrowType::*;
        let t = &self.table;
        let close = |s: ArrowSet| transitive_closure(s, t).without(SelfArrow);
        let checks = [
            (
                "closure {Mid}",
                close([Mid].into()),
                ArrowSet::from([Mid, Path, Far]),
            ),
            (
                "closure {Hub,New}",
                close([Hub, New].into()),
                ArrowSet::from([Hub, New, Near]),
            ),
            (
                "closure {Old,Mid}",
                close([Old, Mid].into()),
                ArrowSet::from([Old, Mid, Path, Far]),
            ),
        ];
        let (mut ok, mut detail) = set_checks(&checks);
        let classes = enumerate_closed_classes(t);
        let poset = build_hasse(&classes)?;
        let mut tops: Vec<String> = (0..classes.len())
            .filter(|&k| poset.parents_of(k).next().is_none())
            .map(|k| class_label(classes[k].arrows, t))
            .collect();
        tops.sort();
        let want = ["Mid/New (Path/Far/Hub/Near)", "Old/Near (Mid/Path/Far/Hub)"];
        if tops != want {
            ok = false;
        }
        detail.push_str(&format!("; top classes {tops:?}"));
        Ok((ok, detail))
    }

    fn constant_regime(&self) -> Result<(bool, String)> {
        let p = ModelParams::new(1.0, SIM_BETA, 0.25, 0.25)?;
        let (n, seeds) = if self.full() {
            (100_000, 20)
        } else {
            (100_000, 4)
        };
        let AvgDegreeLaw::Constant { value } = predicted_avg_degree(&p) else {
            return Err(Error::Precondition("expected constant regime".into()));
        };
        let mut sum = 0.0;
        for seed in 0..seeds {
            let net = sample_sequential(&p, n, &RandomSource::new(seed))?;
            sum += DegreeStats::from_network(&net).avg_degree;
        }
        let mean = sum / seeds as f64;
        let rel = (mean - value).abs() / value;
        Ok((
            rel <= CONSTANT_AVG_REL_TOL,
            format!("mean <d> = {mean:.4} over {seeds} seeds at n = {n}, predicted {value} (rel err {rel:.4}, tol {CONSTANT_AVG_REL_TOL})"),
        ))
    }

    /// Mean over seeds of the prefix curves of one run per seed.
    fn mean_curve(
        &self,
        p: &ModelParams,
        checkpoints: &[u32],
        seeds: u64,
    ) -> Result<(Vec<f64>, Vec<f64>)> {
        let n = *checkpoints.last().unwrap();
        let mut avg = vec![0.0; checkpoints.len()];
        let mut edges = vec![0.0; checkpoints.len()];
        for seed in 0..seeds {
            let net = sample_sequential(p, n, &RandomSource::new(seed))?;
            let curve = AvgDegreeCurve::from_network(&net, checkpoints)?;
            for (k, &(_, d)) in curve.points.iter().enumerate() {
                avg[k] += d / seeds as f64;
                edges[k] += curve.edges[k] as f64 / seeds as f64;
            }
        }
        Ok((avg, edges))
    }

    fn logarithmic_regime(&self) -> Result<(bool, String)> {
        let p = ModelParams::new(1.0, SIM_BETA, 0.5, 0.5)?;
        let seeds = if self.full() { 10 } else { 2 };
        let checkpoints = log_spaced(1_000, 100_000, 11);
        let (avg, _) = self.mean_curve(&p, &checkpoints, seeds)?;
        let xs: Vec<f64> = checkpoints.iter().map(|&c| (c as f64).ln()).collect();
        let fit = linear_fit(&xs, &avg)?;
        let AvgDegreeLaw::Logarithmic { slope } = predicted_avg_degree(&p) else {
            return Err(Error::Precondition("expected logarithmic regime".into()));
        };
        let rel = (fit.slope - slope).abs() / slope;
        Ok((
            rel <= LOG_SLOPE_REL_TOL,
            format!(
                "slope of <d> vs ln n = {:.4} +- {:.4} over {seeds} seeds, predicted {slope} (rel err {rel:.4}, tol {LOG_SLOPE_REL_TOL})",
                fit.slope, fit.slope_stderr
            ),
        ))
    }

    fn polynomial_regime(&self) -> Result<(bool, String)> {
        let p = ModelParams::new(1.0, SIM_BETA, 0.6, 0.6)?;
        let seeds = if self.full() { 3 } else { 1 };
        let checkpoints = log_spaced(10_000, 100_000, 11);
        let (_, edges) = self.mean_curve(&p, &checkpoints, seeds)?;
        let xs: Vec<f64> = checkpoints.iter().map(|&c| (c as f64).ln()).collect();
        let ys: Vec<f64> = edges.iter().map(|e| e.ln()).collect();
        let fit = linear_fit(&xs, &ys)?;
        let AvgDegreeLaw::Polynomial { rho } = predicted_avg_degree(&p) else {
            return Err(Error::Precondition("expected polynomial regime".into()));
        };
        let err = (fit.slope - (1.0 + rho)).abs();
        Ok((
            err <= POLY_SLOPE_ABS_TOL,
            format!(
                "slope of ln E vs ln n = {:.4} over {seeds} seeds, predicted {:.4} (abs err {err:.4}, tol {POLY_SLOPE_ABS_TOL})",
                fit.slope,
                1.0 + rho
            ),
        ))
    }

    fn power_law_tails(&self) -> Result<(bool, String)> {
        let n = if self.full() { 200_000 } else { 100_000 };
        let cases = [
            (0.5, 0.25, TAIL_TOL_CONSTANT),
            (0.6, 0.6, TAIL_TOL_POLYNOMIAL),
        ];
        let mut ok = true;
        let mut parts = Vec::new();
        for (ti, to, tol) in cases {
            let p = ModelParams::new(1.0, SIM_BETA, ti, to)?;
            let want = predicted_gamma(&p)?;
            let net = sample_sequential(&p, n, &RandomSource::new(1))?;
            let fit = fit_tail_top_decile(&DegreeStats::from_network(&net).degrees)?;
            let good = (fit.gamma - want).abs() <= tol;
            ok &= good;
            parts.push(format!(
                "theta=({ti},{to}) gamma_hat = {:.3} +- {:.3} (dmin {}, m {}), predicted {want:.3}, tol {tol}",
                fit.gamma, fit.stderr, fit.dmin, fit.m
            ));
        }
        Ok((ok, format!("n = {n}: {}", parts.join("; "))))
    }

    fn closed_form_in_degree(&self) -> Result<(bool, String)> {
        let worst = closed_form_grid_error()?;
        let reps = if self.full() { 10_000 } else { 2_000 };
        let z = in_degree_monte_carlo_z(2_000, 100, reps)?;
        Ok((
            worst < CLOSED_FORM_REL_TOL && z.abs() < MONTE_CARLO_Z,
            format!(
                "max rel err vs recursion {worst:.2e} on 1000 points (tol {CLOSED_FORM_REL_TOL:e}); Monte-Carlo z = {z:.3} over {reps} runs (tol {MONTE_CARLO_Z})"
            ),
        ))
    }

    fn parallel_determinism(&self) -> Result<(bool, String)> {
        let n = 10_000;
        let p = ModelParams::new(1.0, 1.0, 0.5, 0.25)?;
        let rng = RandomSource::new(7);
        let reference = write_network_string(&sample_sequential(&p, n, &rng)?);
        let mut ok = true;
        let mut parts = Vec::new();
        for workers in [1usize, 2, 4, 8] {
            let block = n / workers as u32;
            let (net, schedule) = sample_parallel(&p, n, &rng, workers, block)?;
            let same = write_network_string(&net) == reference;
            let bounded = schedule.rounds <= 2 * workers;
            ok &= same && bounded;
            parts.push(format!(
                "w={workers}: {} rounds{}",
                schedule.rounds,
                if same { "" } else { ", output differs" }
            ));
        }
        Ok((ok, parts.join("; ")))
    }

    fn dorpa_equivalence(&self) -> Result<(bool, String)> {
        let p = ModelParams::new(1.0, 1.0, 0.5, 0.25)?;
        let seeds = if self.full() { 50 } else { 10 };
        let mut mismatches = 0;
        for seed in 0..seeds {
            let rng = RandomSource::new(seed);
            let seq = write_network_string(&sample_dorpa_sequential(&p, 1_000, &rng)?.0);
            for order in [PopOrder::Fifo, PopOrder::Random(seed ^ 0x5eed)] {
                let ev = sample_dorpa_events(&p, 1_000, &rng, order)?.0;
                if write_network_string(&ev) != seq {
                    mismatches += 1;
                }
            }
        }
        let reps = if self.full() { 100_000 } else { 20_000 };
        let chi = dorpa_chi_square(&p, 30, reps)?;
        Ok((
            mismatches == 0 && chi.p_value > CHI_SQUARE_MIN_P,
            format!(
                "{mismatches} event/sequential mismatches over {seeds} seeds; chi2 = {:.1} on {} groups, p = {:.4} over {reps} runs (min {CHI_SQUARE_MIN_P})",
                chi.statistic, chi.groups, chi.p_value
            ),
        ))
    }

    fn exponent_self_consistency(&self) -> Result<(bool, String)> {
        let mut worst = (0.0f64, String::new());
        let mut counts = BTreeMap::new();
        for (ti, to) in EXPONENT_POINTS {
            let p = ModelParams::new(1.0, 1.0, ti, to)?;
            let want = predicted_gamma(&p)?;
            let got = extracted_gamma(EXTRACTION_J, EXTRACTION_N, 1.0, &p)?;
            let rel = (got - want).abs() / want;
            *counts.entry(regime_classify(&p).name()).or_insert(0) += 1;
            if rel >= worst.0 {
                worst = (
                    rel,
                    format!("theta=({ti},{to}) extracted {got:.4} vs {want:.4}"),
                );
            }
        }
        let per_regime = [Regime::Constant, Regime::Logarithmic, Regime::Polynomial]
            .iter()
            .all(|r| counts.get(r.name()) == Some(&5));
        Ok((
            worst.0 < EXPONENT_REL_TOL && per_regime,
            format!(
                "worst rel err {:.2e} at {} (tol {EXPONENT_REL_TOL}); points per regime {counts:?}",
                worst.0, worst.1
            ),
        ))
    }
}

fn set_checks(checks: &[(&str, ArrowSet, ArrowSet)]) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (what, got, want) in checks {
        if got != want {
            ok = false;
            parts.push(format!("{what} = {got}, want {want}"));
        } else {
            parts.push(format!("{what} = {got}"));
        }
    }
    (ok, parts.join("; "))
}

/// Five `(theta_in, theta_out)` points in each regime.
pub const EXPONENT_POINTS: [(f64, f64); 15] = [
    (0.1, 0.2),
    (0.25, 0.25),
    (0.5, 0.25),
    (0.7, 0.1),
    (0.05, 0.5),
    (0.3, 0.7),
    (0.4, 0.6),
    (0.5, 0.5),
    (0.6, 0.4),
    (0.7, 0.3),
    (0.6, 0.6),
    (0.9, 0.5),
    (0.5, 0.9),
    (0.8, 0.3),
    (1.0, 0.75),
];

/// Largest relative difference between the closed form and the difference
/// equation over a fixed 10 x 10 x 10 grid of parameters, `(j, n)` and
/// out-degrees.
pub fn closed_form_grid_error() -> Result<f64> {
    let params = [
        (1.0, 1.0, 0.5, 0.25),
        (0.1, 0.0, 0.05, 0.0),
        (2.0, 0.5, 1.0, 1.0),
        (0.5, 3.0, 0.3, 0.7),
        (5.0, 10.0, 0.9, 0.1),
        (1.0, 0.0, 0.6, 0.6),
        (0.01, 0.2, 0.2, 0.9),
        (3.0, 1.0, 0.75, 0.5),
        (1.5, 2.5, 0.15, 0.35),
        (0.7, 0.7, 0.45, 0.95),
    ];
    let spans = [
        (2u64, 2u64),
        (2, 3),
        (2, 50),
        (3, 1000),
        (10, 11),
        (17, 400),
        (100, 2000),
        (250, 5000),
        (999, 1000),
        (1000, 4000),
    ];
    let douts = [0u64, 1, 2, 3, 5, 8, 13, 21, 34, 55];
    let mut worst = 0.0f64;
    for &(a, b, ti, to) in &params {
        let p = ModelParams::new(a, b, ti, to)?;
        for &(j, n) in &spans {
            for &d in &douts {
                let closed = expected_in_degree(j, n, d, &p)?;
                let rec = in_degree_recursion(j as f64, n as f64, d as f64, &p)?;
                let err = if rec == 0.0 {
                    closed.abs()
                } else {
                    ((closed - rec) / rec).abs()
                };
                worst = worst.max(err);
            }
        }
    }
    Ok(worst)
}

/// z-score of the mean residual `din_j(n) - E[din_j(n) | dout_j]` over
/// independent runs with `alpha = beta = 1`, `theta = (0.5, 0.25)`.
///
/// Each run samples columns `2..=j` with the sequential sampler, then
/// continues row `j` alone: its probabilities only read node `j`'s own
/// degrees, and it uses the same per-dyad uniforms as the full sampler.
pub fn in_degree_monte_carlo_z(n: u32, j: u32, reps: u64) -> Result<f64> {
    let p = ModelParams::new(1.0, 1.0, 0.5, 0.25)?;
    let mut residuals = Vec::with_capacity(reps as usize);
    for seed in 0..reps {
        let rng = RandomSource::new(seed);
        let head = sample_sequential(&p, j, &rng)?;
        let dout = head.deg_out(j);
        let din = continue_row(&p, &rng, j, dout, n)?;
        residuals.push(din as f64 - expected_in_degree(j as u64, n as u64, dout as u64, &p)?);
    }
    let k = residuals.len() as f64;
    let mean = residuals.iter().sum::<f64>() / k;
    let var = residuals
        .iter()
        .map(|r| (r - mean) * (r - mean))
        .sum::<f64>()
        / (k - 1.0);
    Ok(mean / (var / k).sqrt())
}

/// In-degree of node `j` after columns `j+1..=n`, given its out-degree.
pub fn continue_row(p: &ModelParams, rng: &RandomSource, j: u32, dout: u32, n: u32) -> Result<u32> {
    let mut din = 0u32;
    for c in j + 1..=n {
        let num = p.alpha + p.theta_in * din as f64 + p.theta_out * dout as f64;
        let prob = num / (c as f64 - 2.0 + p.alpha + p.beta);
        if prob > 1.0 {
            return Err(Error::ProbabilityOutOfRange {
                i: j,
                j: c,
                value: prob,
            });
        }
        if rng.uniform(StreamTag::Edge, j, c) < prob {
            din += 1;
        }
    }
    Ok(din)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub groups: usize,
    pub p_value: f64,
}

/// Pearson chi-square of observed edge frequencies against the edge
/// probability, grouping dyads by `(j, din_i, dout_i)`.
pub fn dorpa_chi_square(p: &ModelParams, n: u32, reps: u64) -> Result<ChiSquareResult> {
    // (j, din, dout) -> (trials, edges)
    let mut groups: BTreeMap<(u32, u32, u32), (u64, u64)> = BTreeMap::new();
    for seed in 0..reps {
        let rng = RandomSource::new(seed);
        sample_dorpa_observed(
            p,
            n,
            &rng,
            Some(|o: crate::dorpa::DyadObservation| {
                let g = groups.entry((o.j, o.din, o.dout)).or_insert((0, 0));
                g.0 += 1;
                g.1 += o.edge as u64;
            }),
        )?;
    }
    let mut statistic = 0.0;
    let mut used = 0usize;
    for (&(j, din, dout), &(trials, edges)) in &groups {
        let q = dorpa_edge_prob(1, j, din, dout, p)?;
        let expected = trials as f64 * q;
        let expected_miss = trials as f64 * (1.0 - q);
        if expected < CHI_SQUARE_MIN_EXPECTED || expected_miss < CHI_SQUARE_MIN_EXPECTED {
            continue;
        }
        let diff = edges as f64 - expected;
        statistic += diff * diff / (expected * (1.0 - q));
        used += 1;
    }
    if used == 0 {
        return Err(Error::Precondition(
            "no chi-square group met the size rule".into(),
        ));
    }
    let dist = ChiSquared::new(used as f64).map_err(|e| Error::NonFinite(e.to_string()))?;
    Ok(ChiSquareResult {
        statistic,
        groups: used,
        p_value: dist.sf(statistic),
    })
}
