//! Growing networks and the affine preferential-attachment sampler.
//!
//! Nodes arrive in index order `1, 2, ..., n`. When node `j` arrives, each
//! older node `i < j` links to it with probability
//!
//! ```text
//! p_ij = (alpha + theta_in * din_i + theta_out * dout_i) / (j - 2 + alpha + beta)
//! ```
//!
//! where `din_i` counts edges from `i` to nodes that arrived after it and
//! `dout_i` counts edges from `i` to nodes that arrived before it. The
//! dyad `(i, j)` therefore reads only row `i` to the left of column `j`
//! (Hub parents) and column `i` (Path parents); that dependency structure is
//! what lets [`sample_parallel`] split the dyad grid into blocks.

mod io;
mod parallel;

pub use io::{read_network, read_network_str, write_network, write_network_string, RunManifest};
pub use parallel::{sample_parallel, BlockSchedule};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rng::{RandomSource, StreamTag};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub alpha: f64,
    pub beta: f64,
    pub theta_in: f64,
    pub theta_out: f64,
}

impl ModelParams {
    /// Validated constructor. Inside this box every affine edge probability
    /// is automatically in `[0, 1]`, so nothing is ever clamped.
    pub fn new(alpha: f64, beta: f64, theta_in: f64, theta_out: f64) -> Result<Self> {
        let p = ModelParams {
            alpha,
            beta,
            theta_in,
            theta_out,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if !(self.alpha.is_finite() && self.alpha > 0.0) {
            return bad(format!("alpha must be > 0 (got {})", self.alpha));
        }
        if !(self.beta.is_finite() && self.beta >= 0.0) {
            return bad(format!("beta must be >= 0 (got {})", self.beta));
        }
        if !(0.0..=1.0).contains(&self.theta_in) {
            return bad(format!(
                "theta_in must lie in [0, 1] (got {})",
                self.theta_in
            ));
        }
        if !(0.0..=1.0).contains(&self.theta_out) {
            return bad(format!(
                "theta_out must lie in [0, 1] (got {})",
                self.theta_out
            ));
        }
        Ok(())
    }

    pub fn theta_sum(&self) -> f64 {
        self.theta_in + self.theta_out
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} beta={} theta_in={} theta_out={}",
            self.alpha, self.beta, self.theta_in, self.theta_out
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Dapa,
    Dorpa,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Dapa => "dapa",
            Model::Dorpa => "dorpa",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dapa" => Ok(Model::Dapa),
            "dorpa" => Ok(Model::Dorpa),
            other => Err(Error::Precondition(format!("unknown model `{other}`"))),
        }
    }
}

/// How a network was produced; carried into the edge-list header.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkMeta {
    pub model: Model,
    pub params: ModelParams,
    pub seed: u64,
}

/// Edge set over nodes `1..=n` with maintained degree counters.
///
/// `cols[j]` holds the sorted older endpoints `i < j` of node `j`'s edges.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowingNetwork {
    n: u32,
    meta: NetworkMeta,
    cols: Vec<Vec<u32>>,
    deg_in: Vec<u32>,
    deg_out: Vec<u32>,
    edges: u64,
}

impl GrowingNetwork {
    pub fn empty(n: u32, meta: NetworkMeta) -> Self {
        let len = n as usize + 1;
        GrowingNetwork {
            n,
            meta,
            cols: vec![Vec::new(); len],
            deg_in: vec![0; len],
            deg_out: vec![0; len],
            edges: 0,
        }
    }

    /// Builds a network from an arbitrary edge list, normalizing order.
    pub fn from_edges(n: u32, meta: NetworkMeta, edges: &[(u32, u32)]) -> Result<Self> {
        let mut net = GrowingNetwork::empty(n, meta);
        let mut sorted = edges.to_vec();
        sorted.sort_unstable_by_key(|&(i, j)| (j, i));
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Precondition(format!(
                    "duplicate edge ({}, {})",
                    w[0].0, w[0].1
                )));
            }
        }
        for (i, j) in sorted {
            if i == 0 || i >= j || j > n {
                return Err(Error::Precondition(format!(
                    "edge ({i}, {j}) is not a dyad of a {n}-node network"
                )));
            }
            net.push_edge(i, j);
        }
        Ok(net)
    }

    /// Appends edge `(i, j)`. Callers add edges in `(j, i)` order.
    pub(crate) fn push_edge(&mut self, i: u32, j: u32) {
        debug_assert!(i < j && j <= self.n);
        debug_assert!(self.cols[j as usize].last().is_none_or(|&last| last < i));
        self.cols[j as usize].push(i);
        self.deg_in[i as usize] += 1;
        self.deg_out[j as usize] += 1;
        self.edges += 1;
    }

    pub(crate) fn from_parts(
        n: u32,
        meta: NetworkMeta,
        cols: Vec<Vec<u32>>,
        deg_in: Vec<u32>,
        deg_out: Vec<u32>,
    ) -> Self {
        let edges = cols.iter().map(|c| c.len() as u64).sum();
        GrowingNetwork {
            n,
            meta,
            cols,
            deg_in,
            deg_out,
            edges,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn meta(&self) -> &NetworkMeta {
        &self.meta
    }

    pub fn edge_count(&self) -> u64 {
        self.edges
    }

    /// Older endpoints of node `j`'s edges, ascending.
    pub fn column(&self, j: u32) -> &[u32] {
        &self.cols[j as usize]
    }

    pub fn has_edge(&self, i: u32, j: u32) -> bool {
        j as usize <= self.n as usize && self.cols[j as usize].binary_search(&i).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, sorted by `(j, i)`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&i| (i, j as u32)))
    }

    /// Edges from node `i` to later nodes.
    pub fn deg_in(&self, i: u32) -> u32 {
        self.deg_in[i as usize]
    }

    /// Edges from node `i` to earlier nodes.
    pub fn deg_out(&self, i: u32) -> u32 {
        self.deg_out[i as usize]
    }

    /// Total degree of every node, indexed `0..n` for nodes `1..=n`.
    pub fn degrees(&self) -> Vec<u32> {
        (1..=self.n as usize)
            .map(|i| self.deg_in[i] + self.deg_out[i])
            .collect()
    }

    /// Recomputes both counters from the edge set and compares.
    pub fn degrees_consistent(&self) -> bool {
        let len = self.n as usize + 1;
        let mut din = vec![0u32; len];
        let mut dout = vec![0u32; len];
        for (i, j) in self.edges() {
            din[i as usize] += 1;
            dout[j as usize] += 1;
        }
        din == self.deg_in && dout == self.deg_out
    }

    /// Same edges, ignoring provenance.
    pub fn same_edges(&self, other: &GrowingNetwork) -> bool {
        self.n == other.n && self.cols == other.cols
    }
}

/// Affine edge probability for dyad `(i, j)` given older node `i`'s degrees.
pub fn edge_prob(i: u32, j: u32, din: u32, dout: u32, params: &ModelParams) -> Result<f64> {
    if i == 0 || i >= j {
        return Err(Error::Precondition(format!(
            "edge_prob needs 1 <= i < j, got ({i}, {j})"
        )));
    }
    if din > j - 1 - i || dout > i - 1 {
        return Err(Error::Precondition(format!(
            "degrees din={din}, dout={dout} impossible for dyad ({i}, {j})"
        )));
    }
    let p = affine_prob(params, j, din, dout);
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ProbabilityOutOfRange { i, j, value: p });
    }
    Ok(p)
}

#[inline(always)]
fn affine_denominator(params: &ModelParams, j: u32) -> f64 {
    (j - 2) as f64 + params.alpha + params.beta
}

#[inline(always)]
fn affine_weight(params: &ModelParams, din: u32, dout: u32) -> f64 {
    params.alpha + params.theta_in * din as f64 + params.theta_out * dout as f64
}

#[inline(always)]
fn affine_prob(params: &ModelParams, j: u32, din: u32, dout: u32) -> f64 {
    affine_weight(params, din, dout) / affine_denominator(params, j)
}

/// Decides the dyads `(i, j)` for `i` in `rows` (ascending, all `< j`).
///
/// `din` and `dout` are indexed by `i - row_base`. Returns the rows that
/// linked. Shared by the sequential and block-parallel samplers so that both
/// make bit-identical decisions.
#[inline(always)]
#[allow(clippy::too_many_arguments)]
pub(crate) fn decide_column(
    params: &ModelParams,
    rng: &RandomSource,
    j: u32,
    rows: std::ops::Range<u32>,
    row_base: u32,
    din: &mut [u32],
    dout: &[u32],
    linked: &mut Vec<u32>,
) {
    const CHUNK: usize = 64;
    let denom = affine_denominator(params, j);
    let mut hit = [false; CHUNK];
    let mut probs = [0.0f64; CHUNK];
    let mut start = rows.start;
    while start < rows.end {
        let len = ((rows.end - start) as usize).min(CHUNK);
        let base = (start - row_base) as usize;
        let din_c = &din[base..base + len];
        let dout_c = &dout[base..base + len];
        // branch-free pass so the hash and the division vectorize
        for t in 0..len {
            let p = affine_weight(params, din_c[t], dout_c[t]) / denom;
            probs[t] = p;
            hit[t] = rng.uniform(StreamTag::Edge, start.wrapping_add(t as u32), j) < p;
        }
        if cfg!(debug_assertions) {
            let (lo, hi) = probs[..len]
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &p| {
                    (lo.min(p), hi.max(p))
                });
            assert!(
                lo >= 0.0 && hi <= 1.0,
                "edge probability outside [0, 1] in column {j}"
            );
        }
        for t in 0..len {
            if hit[t] {
                din[base + t] += 1;
                linked.push(start + t as u32);
            }
        }
        start += len as u32;
    }
}

/// Reference sampler: columns `j = 2..=n` in order, rows in increasing `i`.
pub fn sample_sequential(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
) -> Result<GrowingNetwork> {
    sample_sequential_with(params, n, rng, |_, _| {})
}

/// Sequential sampler that calls `on_column(j, &net)` after each column is
/// complete (the network then holds nodes `1..=j`).
pub fn sample_sequential_with<F>(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
    mut on_column: F,
) -> Result<GrowingNetwork>
where
    F: FnMut(u32, &GrowingNetwork),
{
    params.validate()?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "network needs n >= 2, got {n}"
        )));
    }
    let meta = NetworkMeta {
        model: Model::Dapa,
        params: *params,
        seed: rng.seed(),
    };
    let mut net = GrowingNetwork::empty(n, meta);
    on_column(1, &net);
    let mut linked = Vec::new();
    for j in 2..=n {
        linked.clear();
        // rows 1..j, arrays offset so that index i maps to node i
        decide_column(
            params,
            rng,
            j,
            1..j,
            0,
            &mut net.deg_in,
            &net.deg_out,
            &mut linked,
        );
        let count = linked.len() as u32;
        net.cols[j as usize].extend_from_slice(&linked);
        net.deg_out[j as usize] += count;
        net.edges += count as u64;
        on_column(j, &net);
    }
    Ok(net)
}
