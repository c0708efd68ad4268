use std::fmt::Write as _;

use crate::network::GrowingNetwork;

/// Degree distribution summary of one network.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeStats {
    pub n: u32,
    /// Total degree per node, nodes `1..=n` at indices `0..n`.
    pub degrees: Vec<u32>,
    /// `histogram[d]` = number of nodes of degree `d`.
    pub histogram: Vec<u64>,
    /// `ccdf[d]` = fraction of nodes with degree `>= d`.
    pub ccdf: Vec<f64>,
    pub avg_degree: f64,
}

impl DegreeStats {
    pub fn from_network(net: &GrowingNetwork) -> Self {
        DegreeStats::from_degrees(net.degrees())
    }

    pub fn from_degrees(degrees: Vec<u32>) -> Self {
        let n = degrees.len();
        let max = degrees.iter().copied().max().unwrap_or(0) as usize;
        let mut histogram = vec![0u64; max + 1];
        for &d in &degrees {
            histogram[d as usize] += 1;
        }
        let mut ccdf = vec![0.0; max + 1];
        let mut tail = 0u64;
        for d in (0..=max).rev() {
            tail += histogram[d];
            ccdf[d] = tail as f64 / n.max(1) as f64;
        }
        let total: u64 = degrees.iter().map(|&d| d as u64).sum();
        let avg_degree = if n == 0 { 0.0 } else { total as f64 / n as f64 };
        DegreeStats {
            n: n as u32,
            degrees,
            histogram,
            ccdf,
            avg_degree,
        }
    }

    /// `degree,count` rows for every degree with a non-zero count.
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (d, &c) in self.histogram.iter().enumerate() {
            if c > 0 {
                let _ = writeln!(out, "{d},{c}");
            }
        }
        out
    }

    /// `degree,ccdf` rows for every degree from 0 to the maximum.
    pub fn ccdf_csv(&self) -> String {
        let mut out = String::from("degree,ccdf\n");
        for (d, &p) in self.ccdf.iter().enumerate() {
            let _ = writeln!(out, "{d},{p}");
        }
        out
    }
}

/// Edge counts `E(c)` of the sub-network on nodes `1..=c` for each
/// checkpoint. Because the network grows by appending nodes, this is the
/// state the sampler had when node `c` arrived.
pub fn edge_snapshots(net: &GrowingNetwork, checkpoints: &[u32]) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut edges = 0u64;
    let mut next = 1u32;
    for &c in checkpoints {
        let c = c.min(net.n());
        while next <= c {
            edges += net.column(next).len() as u64;
            next += 1;
        }
        out.push((c, edges));
    }
    out
}
