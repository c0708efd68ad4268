use std::fmt::Write as _;

use super::curve::{log_spaced, AvgDegreeCurve};
use super::fit::{fit_tail_top_decile, linear_fit, LinearFit, TailFit};
use super::stats::DegreeStats;
use super::theory::{predicted_avg_degree, predicted_gamma, regime_classify, AvgDegreeLaw, Regime};
use crate::network::{GrowingNetwork, ModelParams};

const Z95: f64 = 1.959_963_984_540_054;

/// Predicted versus fitted growth and tail quantities for one network.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeReport {
    pub params: ModelParams,
    pub n: u32,
    pub regime: Regime,
    pub predicted_law: AvgDegreeLaw,
    /// `None` when no power law is predicted.
    pub predicted_gamma: Option<f64>,
    pub avg_degree: f64,
    /// Growth fit over prefixes `n/10..=n`: `<d>` vs `ln n` for the
    /// logarithmic regime, `ln E` vs `ln n` (minus 1) for the polynomial.
    pub growth_fit: Option<LinearFit>,
    pub tail_fit: Option<TailFit>,
}

impl RegimeReport {
    pub fn from_network(net: &GrowingNetwork) -> Self {
        let params = net.meta().params;
        let stats = DegreeStats::from_network(net);
        let regime = regime_classify(&params);
        let growth_fit = growth_fit(net, regime);
        RegimeReport {
            params,
            n: net.n(),
            regime,
            predicted_law: predicted_avg_degree(&params),
            predicted_gamma: predicted_gamma(&params).ok(),
            avg_degree: stats.avg_degree,
            growth_fit,
            tail_fit: fit_tail_top_decile(&stats.degrees).ok(),
        }
    }

    /// Columns `quantity,predicted,fitted,stderr,ci_low,ci_high`; empty cells
    /// where a value is unavailable.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("quantity,predicted,fitted,stderr,ci_low,ci_high\n");
        let _ = writeln!(out, "regime,{},,,,", self.regime);
        let _ = writeln!(out, "n,{},,,,", self.n);
        match self.predicted_law {
            AvgDegreeLaw::Constant { value } => {
                row(
                    &mut out,
                    "avg_degree",
                    Some(value),
                    Some(self.avg_degree),
                    None,
                );
            }
            AvgDegreeLaw::Logarithmic { slope } => {
                row(&mut out, "avg_degree", None, Some(self.avg_degree), None);
                let fit = self.growth_fit;
                row(
                    &mut out,
                    "log_slope",
                    Some(slope),
                    fit.map(|f| f.slope),
                    fit.map(|f| f.slope_stderr),
                );
            }
            AvgDegreeLaw::Polynomial { rho } => {
                row(&mut out, "avg_degree", None, Some(self.avg_degree), None);
                let fit = self.growth_fit;
                row(
                    &mut out,
                    "rho",
                    Some(rho),
                    fit.map(|f| f.slope - 1.0),
                    fit.map(|f| f.slope_stderr),
                );
            }
        }
        let tail = self.tail_fit;
        row(
            &mut out,
            "gamma",
            self.predicted_gamma,
            tail.map(|t| t.gamma),
            tail.map(|t| t.stderr),
        );
        if let Some(t) = tail {
            let _ = writeln!(out, "tail_dmin,,{},,,", t.dmin);
            let _ = writeln!(out, "tail_points,,{},,,", t.m);
        }
        out
    }
}

fn cell(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn row(
    out: &mut String,
    name: &str,
    predicted: Option<f64>,
    fitted: Option<f64>,
    stderr: Option<f64>,
) {
    let (lo, hi) = match (fitted, stderr) {
        (Some(f), Some(s)) => (Some(f - Z95 * s), Some(f + Z95 * s)),
        _ => (None, None),
    };
    let _ = writeln!(
        out,
        "{name},{},{},{},{},{}",
        cell(predicted),
        cell(fitted),
        cell(stderr),
        cell(lo),
        cell(hi)
    );
}

fn growth_fit(net: &GrowingNetwork, regime: Regime) -> Option<LinearFit> {
    if regime == Regime::Constant || net.n() < 20 {
        return None;
    }
    let checkpoints = log_spaced(net.n() / 10, net.n(), 10);
    let curve = AvgDegreeCurve::from_network(net, &checkpoints).ok()?;
    let xs: Vec<f64> = checkpoints.iter().map(|&c| (c as f64).ln()).collect();
    let ys: Vec<f64> = match regime {
        Regime::Logarithmic => curve.points.iter().map(|&(_, d)| d).collect(),
        _ => {
            if curve.edges.contains(&0) {
                return None;
            }
            curve.edges.iter().map(|&e| (e as f64).ln()).collect()
        }
    };
    linear_fit(&xs, &ys).ok()
}
