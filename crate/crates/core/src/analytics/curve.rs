use std::fmt::Write as _;

use super::stats::edge_snapshots;
use crate::dorpa::sample_dorpa_sequential;
use crate::error::{Error, Result};
use crate::network::{sample_sequential, GrowingNetwork, Model, ModelParams};
use crate::rng::RandomSource;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub model: Model,
    pub params: ModelParams,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(model: Model, params: ModelParams, seed: u64) -> Self {
        SamplerConfig {
            model,
            params,
            seed,
        }
    }

    pub fn sample(&self, n: u32) -> Result<GrowingNetwork> {
        let rng = RandomSource::new(self.seed);
        match self.model {
            Model::Dapa => sample_sequential(&self.params, n, &rng),
            Model::Dorpa => Ok(sample_dorpa_sequential(&self.params, n, &rng)?.0),
        }
    }
}

/// `(n, <d(n)>)` rows of one growth run.
#[derive(Debug, Clone, PartialEq)]
pub struct AvgDegreeCurve {
    pub points: Vec<(u32, f64)>,
    /// Edge counts behind each point.
    pub edges: Vec<u64>,
}

impl AvgDegreeCurve {
    pub fn from_network(net: &GrowingNetwork, checkpoints: &[u32]) -> Result<Self> {
        check_increasing(checkpoints)?;
        if let Some(&last) = checkpoints.last() {
            if last > net.n() {
                return Err(Error::Precondition(format!(
                    "checkpoint {last} exceeds network size {}",
                    net.n()
                )));
            }
        }
        let snaps = edge_snapshots(net, checkpoints);
        Ok(AvgDegreeCurve {
            points: snaps
                .iter()
                .map(|&(c, e)| (c, 2.0 * e as f64 / c as f64))
                .collect(),
            edges: snaps.iter().map(|&(_, e)| e).collect(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,avg\n");
        for &(n, avg) in &self.points {
            let _ = writeln!(out, "{n},{avg}");
        }
        out
    }
}

fn check_increasing(checkpoints: &[u32]) -> Result<()> {
    if checkpoints.first() == Some(&0) {
        return Err(Error::Precondition("checkpoints must be >= 1".into()));
    }
    if let Some(w) = checkpoints.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(format!(
            "checkpoints must be increasing, got {} then {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// Runs one network to the last checkpoint and reads the average degree of
/// each prefix.
pub fn avg_degree_curve(config: &SamplerConfig, checkpoints: &[u32]) -> Result<AvgDegreeCurve> {
    check_increasing(checkpoints)?;
    let Some(&n) = checkpoints.last() else {
        return Ok(AvgDegreeCurve {
            points: Vec::new(),
            edges: Vec::new(),
        });
    };
    let net = config.sample(n.max(2))?;
    AvgDegreeCurve::from_network(&net, checkpoints)
}

/// `count` checkpoints spaced evenly in `ln n` from `lo` to `hi`, rounded and
/// deduplicated.
pub fn log_spaced(lo: u32, hi: u32, count: usize) -> Vec<u32> {
    if count <= 1 || lo >= hi {
        return vec![hi];
    }
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut out: Vec<u32> = (0..count)
        .map(|k| (a + (b - a) * k as f64 / (count - 1) as f64).exp().round() as u32)
        .collect();
    out.dedup();
    out
}
