//! Exponential-link growing network and its event-driven sampler.
//!
//! The edge probability of dyad `(i, j)` is
//!
//! ```text
//! p_ij = 1 - exp(-(alpha + theta_in * din_i + theta_out * dout_i) / (j + beta))
//! ```
//!
//! Since `exp(-(a + b + c)) = exp(-a) exp(-b) exp(-c)`, the edge is the OR of
//! independent triggers: a baseline trigger with rate `alpha / (j + beta)`,
//! one trigger per present Hub parent `(i, k)`, `k < j`, with rate
//! `theta_in / (j + beta)`, and one per present Path parent `(k, i)` with
//! rate `theta_out / (j + beta)`. Every rate uses the child's own column `j`.
//!
//! Trigger randomness is attached to the *parent*: an edge `(a, b)` owns two
//! exponential streams (Hub and Path) whose arrivals, measured on the
//! cumulative hazard `theta * sum_{c > b} 1 / (c + beta)`, name the child
//! columns `c` it fires into (children `(a, c)` for Hub, `(b, c)` for Path).
//! Baseline triggers are drawn per column by geometric skipping. Each child
//! therefore sees independent Bernoulli triggers with exactly the rates
//! above, while the work is proportional to edges and fired triggers rather
//! than to the number of dyads.
//!
//! The sequential sampler resolves columns in order; the event sampler
//! pops active dyads in an arbitrary order. Both read the same streams, so
//! they produce identical networks.

use std::collections::{HashSet, VecDeque};

use statrs::function::gamma::digamma;

use crate::error::{Error, Result};
use crate::network::{GrowingNetwork, Model, ModelParams, NetworkMeta};
use crate::rng::{RandomSource, StreamTag};

/// Closed-form edge probability of the exponential-link model.
pub fn dorpa_edge_prob(i: u32, j: u32, din: u32, dout: u32, params: &ModelParams) -> Result<f64> {
    if i == 0 || i >= j {
        return Err(Error::Precondition(format!(
            "dorpa_edge_prob needs 1 <= i < j, got ({i}, {j})"
        )));
    }
    Ok(exp_link(params, j, din, dout))
}

fn exp_link(params: &ModelParams, j: u32, din: u32, dout: u32) -> f64 {
    let rate = params.alpha + params.theta_in * din as f64 + params.theta_out * dout as f64;
    -(-rate / (j as f64 + params.beta)).exp_m1()
}

/// Number of exponential draws made while sampling.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TriggerStats {
    pub base_draws: u64,
    pub hub_draws: u64,
    pub path_draws: u64,
    /// Triggers that fired, counting repeats on the same dyad.
    pub fired: u64,
}

impl TriggerStats {
    pub fn total_draws(&self) -> u64 {
        self.base_draws + self.hub_draws + self.path_draws
    }
}

/// Rows `i < j` whose baseline trigger fires in column `j`, ascending.
fn base_fired(
    rng: &RandomSource,
    params: &ModelParams,
    j: u32,
    stats: &mut TriggerStats,
) -> Vec<u32> {
    let mut rows = Vec::new();
    // each row fires with q = 1 - exp(-alpha / (j + beta)); the number of
    // silent rows before the next firing is floor(E (j + beta) / alpha)
    let scale = (j as f64 + params.beta) / params.alpha;
    let mut pos = 0.0f64;
    let mut k = 0u64;
    loop {
        let e = rng.exponential_at(StreamTag::Base, 0, j, k);
        k += 1;
        stats.base_draws += 1;
        let next = pos + (e * scale).floor() + 1.0;
        if next >= j as f64 {
            break;
        }
        rows.push(next as u32);
        stats.fired += 1;
        pos = next;
    }
    rows
}

/// `sum_{m = from + 1}^{to} 1 / (m + beta)` via the digamma recurrence.
fn harmonic(from: u32, to: u32, beta: f64) -> f64 {
    digamma(to as f64 + 1.0 + beta) - digamma(from as f64 + 1.0 + beta)
}

/// Smallest column `c > from` with `harmonic(from, c) >= target`.
fn first_crossing(from: u32, target: f64, beta: f64) -> f64 {
    // digamma(x) ~ ln(x - 1/2): invert, then walk to the exact crossing
    let goal = digamma(from as f64 + 1.0 + beta) + target;
    let guess = (goal.exp() + 0.5 - 1.0 - beta).ceil();
    if !guess.is_finite() || guess > u32::MAX as f64 / 2.0 {
        return f64::INFINITY;
    }
    let mut c = (guess as u32).max(from + 1);
    while harmonic(from, c, beta) < target {
        c += 1;
    }
    while c > from + 1 && harmonic(from, c - 1, beta) >= target {
        c -= 1;
    }
    c as f64
}

/// Child columns `c` in `(parent.hi, n]` fired by one trigger stream of the
/// parent edge `(a, b)`.
#[allow(clippy::too_many_arguments)]
fn trigger_children(
    rng: &RandomSource,
    tag: StreamTag,
    theta: f64,
    beta: f64,
    a: u32,
    b: u32,
    n: u32,
    stats: &mut TriggerStats,
) -> Vec<u32> {
    let mut out = Vec::new();
    if theta <= 0.0 || b >= n {
        return out;
    }
    let mut cur = b;
    let mut k = 0u64;
    loop {
        let e = rng.exponential_at(tag, a, b, k);
        k += 1;
        match tag {
            StreamTag::Hub => stats.hub_draws += 1,
            _ => stats.path_draws += 1,
        }
        let c = first_crossing(cur, e / theta, beta);
        if c > n as f64 {
            break;
        }
        let c = c as u32;
        out.push(c);
        stats.fired += 1;
        cur = c;
    }
    out
}

/// The children that the edge `(a, b)` fires into: `(child lo, child hi)`.
fn fire_children(
    rng: &RandomSource,
    params: &ModelParams,
    a: u32,
    b: u32,
    n: u32,
    stats: &mut TriggerStats,
    out: &mut Vec<(u32, u32)>,
) {
    for c in trigger_children(
        rng,
        StreamTag::Hub,
        params.theta_in,
        params.beta,
        a,
        b,
        n,
        stats,
    ) {
        out.push((a, c));
    }
    for c in trigger_children(
        rng,
        StreamTag::Path,
        params.theta_out,
        params.beta,
        a,
        b,
        n,
        stats,
    ) {
        out.push((b, c));
    }
}

fn check(params: &ModelParams, n: u32) -> Result<()> {
    params.validate()?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "network needs n >= 2, got {n}"
        )));
    }
    Ok(())
}

fn meta(params: &ModelParams, rng: &RandomSource) -> NetworkMeta {
    NetworkMeta {
        model: Model::Dorpa,
        params: *params,
        seed: rng.seed(),
    }
}

/// One dyad decision as seen by the sequential sampler: the older node's
/// degrees just before column `j` and the outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DyadObservation {
    pub i: u32,
    pub j: u32,
    pub din: u32,
    pub dout: u32,
    pub edge: bool,
}

pub fn sample_dorpa_sequential(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
) -> Result<(GrowingNetwork, TriggerStats)> {
    sample_dorpa_observed(params, n, rng, None::<fn(DyadObservation)>)
}

/// Column-order sampler. With an observer, every dyad (not only the fired
/// ones) is reported together with the degree state its probability reads.
pub fn sample_dorpa_observed<F>(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
    mut observer: Option<F>,
) -> Result<(GrowingNetwork, TriggerStats)>
where
    F: FnMut(DyadObservation),
{
    check(params, n)?;
    let mut net = GrowingNetwork::empty(n, meta(params, rng));
    let mut stats = TriggerStats::default();
    // rows already fired into each column by earlier parent edges
    let mut pending: Vec<Vec<u32>> = vec![Vec::new(); n as usize + 1];
    let mut children = Vec::new();
    for j in 2..=n {
        let mut rows = base_fired(rng, params, j, &mut stats);
        rows.append(&mut pending[j as usize]);
        rows.sort_unstable();
        rows.dedup();
        if let Some(obs) = observer.as_mut() {
            let mut fired = rows.iter().peekable();
            for i in 1..j {
                let edge = fired.next_if_eq(&&i).is_some();
                obs(DyadObservation {
                    i,
                    j,
                    din: net.deg_in(i),
                    dout: net.deg_out(i),
                    edge,
                });
            }
        }
        for &i in &rows {
            net.push_edge(i, j);
            children.clear();
            fire_children(rng, params, i, j, n, &mut stats, &mut children);
            for &(lo, hi) in &children {
                pending[hi as usize].push(lo);
            }
        }
    }
    Ok((net, stats))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PopOrder {
    Fifo,
    Lifo,
    /// Uniformly random choice among active dyads, driven by this seed.
    Random(u64),
}

/// Event-driven sampler: fire baseline triggers, then repeatedly complete an
/// active dyad and activate the empty children its triggers reach.
pub fn sample_dorpa_events(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
    order: PopOrder,
) -> Result<(GrowingNetwork, TriggerStats)> {
    check(params, n)?;
    let mut stats = TriggerStats::default();
    // a dyad is Empty until it enters `edges`; it is Active while queued and
    // Completed once popped
    let mut edges: HashSet<(u32, u32)> = HashSet::new();
    let mut active: VecDeque<(u32, u32)> = VecDeque::new();
    for j in 2..=n {
        for i in base_fired(rng, params, j, &mut stats) {
            edges.insert((i, j));
            active.push_back((i, j));
        }
    }
    let picker = RandomSource::new(match order {
        PopOrder::Random(s) => s,
        _ => 0,
    });
    let mut pops = 0u64;
    let mut children = Vec::new();
    while !active.is_empty() {
        let (a, b) = match order {
            PopOrder::Fifo => active.pop_front(),
            PopOrder::Lifo => active.pop_back(),
            PopOrder::Random(_) => {
                let u = picker.uniform_at(StreamTag::Edge, 0, 0, pops);
                let k = ((u * active.len() as f64) as usize).min(active.len() - 1);
                active.swap_remove_back(k)
            }
        }
        .expect("non-empty queue");
        pops += 1;
        children.clear();
        fire_children(rng, params, a, b, n, &mut stats, &mut children);
        for &child in &children {
            if edges.insert(child) {
                active.push_back(child);
            }
        }
    }
    let mut list: Vec<(u32, u32)> = edges.into_iter().collect();
    list.sort_unstable_by_key(|&(i, j)| (j, i));
    let net = GrowingNetwork::from_edges(n, meta(params, rng), &list)?;
    Ok((net, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64, ti: f64, to: f64) -> ModelParams {
        ModelParams::new(a, b, ti, to).unwrap()
    }

    #[test]
    fn closed_form_values() {
        let p = params(1.0, 0.0, 0.3, 0.2);
        let v = dorpa_edge_prob(1, 10, 0, 0, &p).unwrap();
        assert!((v - 0.095_162_581_964_040_43).abs() < 1e-15);
        assert!(dorpa_edge_prob(3, 3, 0, 0, &p).is_err());
        // saturation in din
        assert!(dorpa_edge_prob(1, 10, 100_000, 0, &p).unwrap() > 1.0 - 1e-12);
    }

    #[test]
    fn first_order_matches_affine_rate() {
        // small rates: 1 - exp(-x) = x (1 + O(x))
        let p = params(1.0, 1.0, 0.0, 0.0);
        for j in [1_000u32, 10_000, 100_000] {
            let x = 1.0 / (j as f64 + 1.0);
            let v = dorpa_edge_prob(1, j, 0, 0, &p).unwrap();
            assert!(((v - x) / x).abs() < x);
        }
    }

    #[test]
    fn crossing_is_exact() {
        for &(from, beta) in &[(1u32, 0.0), (5, 1.0), (100, 0.5), (40_000, 2.0)] {
            for &t in &[1e-6, 0.01, 0.3, 1.0, 2.5, 7.0] {
                let c = first_crossing(from, t, beta) as u32;
                assert!(c > from);
                assert!(harmonic(from, c, beta) >= t);
                if c > from + 1 {
                    assert!(harmonic(from, c - 1, beta) < t);
                }
            }
        }
    }

    #[test]
    fn tiny_alpha_gives_empty_network() {
        let p = params(1e-9, 1.0, 0.5, 0.5);
        let rng = RandomSource::new(3);
        let (net, _) = sample_dorpa_events(&p, 200, &rng, PopOrder::Fifo).unwrap();
        assert_eq!(net.edge_count(), 0);
        let (seq, _) = sample_dorpa_sequential(&p, 200, &rng).unwrap();
        assert_eq!(seq.edge_count(), 0);
    }

    #[test]
    fn no_theta_means_no_propagation_draws() {
        let p = params(1.0, 1.0, 0.0, 0.0);
        let (_, stats) = sample_dorpa_sequential(&p, 300, &RandomSource::new(2)).unwrap();
        assert_eq!(stats.hub_draws + stats.path_draws, 0);
        assert!(stats.base_draws >= 299);
    }

    #[test]
    fn events_equal_sequential_for_every_pop_order() {
        let p = params(1.0, 1.0, 0.5, 0.3);
        for seed in 0..5 {
            let rng = RandomSource::new(seed);
            let (seq, seq_stats) = sample_dorpa_sequential(&p, 400, &rng).unwrap();
            assert!(seq.degrees_consistent());
            for order in [PopOrder::Fifo, PopOrder::Lifo, PopOrder::Random(seed + 100)] {
                let (ev, ev_stats) = sample_dorpa_events(&p, 400, &rng, order).unwrap();
                assert_eq!(ev, seq, "seed {seed} order {order:?}");
                assert_eq!(ev_stats, seq_stats);
            }
        }
    }

    #[test]
    fn observer_sees_every_dyad() {
        let p = params(1.0, 1.0, 0.5, 0.3);
        let rng = RandomSource::new(9);
        let mut seen = 0usize;
        let mut edges = 0usize;
        let (net, _) = sample_dorpa_observed(
            &p,
            40,
            &rng,
            Some(|o: DyadObservation| {
                seen += 1;
                edges += o.edge as usize;
            }),
        )
        .unwrap();
        assert_eq!(seen, 40 * 39 / 2);
        assert_eq!(edges as u64, net.edge_count());
        let (plain, _) = sample_dorpa_sequential(&p, 40, &rng).unwrap();
        assert_eq!(plain, net);
    }
}
