//! Deterministic block-parallel sampler.
//!
//! Nodes are cut into contiguous blocks `B_0, B_1, ...` and the dyad grid
//! into blocks `(R, C)` with `R <= C` (rows from `B_R`, columns from `B_C`).
//! Dyad `(i, j)` reads `din_i` (row `i`, columns left of `j`) and `dout_i`
//! (column `i`). Hence block `(R, C)` may start once
//!
//! * `(R, C - 1)` is done, for `C > R` (row prefix of `din`), and
//! * every `(R', R)` with `R' < R` is done, for the diagonal block `(R, R)`
//!   (the whole of column block `R`, which fixes `dout` for rows in `B_R`).
//!
//! Off-diagonal blocks inherit the second condition through `(R, R)`.
//! Blocks are executed in level-synchronous rounds; block `(R, C)` lands in
//! round `R + C + 1`, so `m` blocks per side take `2m - 1` rounds.
//!
//! Blocks running in the same round touch disjoint rows and columns, so each
//! job gets owned copies of its row counters and returns its edits; the
//! scheduler merges them at the round barrier. Per-dyad uniforms are keyed by
//! `(i, j)`, so the result is bit-identical to the sequential sampler.

use super::{decide_column, GrowingNetwork, Model, ModelParams, NetworkMeta};
use crate::error::{Error, Result};
use crate::rng::RandomSource;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSchedule {
    pub workers: usize,
    pub block_size: u32,
    /// Number of node blocks per side of the grid.
    pub blocks_per_side: usize,
    /// Communication rounds (barriers) used.
    pub rounds: usize,
    /// Blocks evaluated by each worker.
    pub blocks_per_worker: Vec<usize>,
    /// Round in which each block `(R, C)` ran, row-major over `R <= C`.
    pub block_rounds: Vec<((usize, usize), usize)>,
}

struct Job {
    row: usize,
    col: usize,
    din: Vec<u32>,
    dout: Vec<u32>,
}

struct JobResult {
    row: usize,
    col: usize,
    din: Vec<u32>,
    /// Row-block `dout` after the job (only meaningful on the diagonal).
    dout: Vec<u32>,
    /// Degree increments for the column block (off-diagonal jobs).
    col_inc: Vec<u32>,
    /// Linked rows per column of the block, in column order.
    linked: Vec<Vec<u32>>,
}

fn block_range(b: usize, size: u32, n: u32) -> (u32, u32) {
    let lo = b as u32 * size + 1;
    let hi = ((b as u32 + 1) * size).min(n);
    (lo, hi)
}

fn run_job(params: &ModelParams, rng: &RandomSource, size: u32, n: u32, mut job: Job) -> JobResult {
    let (row_lo, row_hi) = block_range(job.row, size, n);
    let (col_lo, col_hi) = block_range(job.col, size, n);
    let diagonal = job.row == job.col;
    let mut col_inc = vec![0u32; (col_hi - col_lo + 1) as usize];
    let mut linked_cols = Vec::with_capacity(col_inc.len());
    let mut linked = Vec::new();
    for j in col_lo..=col_hi {
        linked.clear();
        let rows_end = (row_hi + 1).min(j);
        if row_lo < rows_end {
            decide_column(
                params,
                rng,
                j,
                row_lo..rows_end,
                row_lo,
                &mut job.din,
                &job.dout,
                &mut linked,
            );
        }
        let count = linked.len() as u32;
        if diagonal {
            // column j is itself a row of this block; later columns read it
            job.dout[(j - row_lo) as usize] += count;
        } else {
            col_inc[(j - col_lo) as usize] += count;
        }
        linked_cols.push(linked.clone());
    }
    JobResult {
        row: job.row,
        col: job.col,
        din: job.din,
        dout: job.dout,
        col_inc,
        linked: linked_cols,
    }
}

/// Block-parallel sampler; output equals [`super::sample_sequential`] with
/// the same seed, for any `workers` and `block_size`.
pub fn sample_parallel(
    params: &ModelParams,
    n: u32,
    rng: &RandomSource,
    workers: usize,
    block_size: u32,
) -> Result<(GrowingNetwork, BlockSchedule)> {
    params.validate()?;
    if n < 2 {
        return Err(Error::Precondition(format!(
            "network needs n >= 2, got {n}"
        )));
    }
    if workers == 0 || block_size == 0 {
        return Err(Error::Precondition(
            "workers and block_size must be >= 1".to_string(),
        ));
    }
    let size = block_size.min(n);
    let m = n.div_ceil(size) as usize;
    let len = n as usize + 1;
    let mut deg_in = vec![0u32; len];
    let mut deg_out = vec![0u32; len];
    // linked rows per (R, C) block, per column
    let mut block_edges: Vec<Vec<Option<Vec<Vec<u32>>>>> = vec![vec![None; m]; m];
    let mut done = vec![vec![false; m]; m];
    let mut schedule = BlockSchedule {
        workers,
        block_size: size,
        blocks_per_side: m,
        rounds: 0,
        blocks_per_worker: vec![0; workers],
        block_rounds: Vec::new(),
    };

    let total = m * (m + 1) / 2;
    let mut completed = 0;
    while completed < total {
        let ready: Vec<(usize, usize)> = (0..m)
            .flat_map(|r| (r..m).map(move |c| (r, c)))
            .filter(|&(r, c)| {
                !done[r][c]
                    && if c > r {
                        done[r][c - 1]
                    } else {
                        (0..r).all(|rr| done[rr][r])
                    }
            })
            .collect();
        debug_assert!(!ready.is_empty(), "dependency deadlock");
        schedule.rounds += 1;

        let mut per_worker: Vec<Vec<Job>> = (0..workers).map(|_| Vec::new()).collect();
        for (k, &(row, col)) in ready.iter().enumerate() {
            let (lo, hi) = block_range(row, size, n);
            let range = lo as usize..hi as usize + 1;
            per_worker[k % workers].push(Job {
                row,
                col,
                din: deg_in[range.clone()].to_vec(),
                dout: deg_out[range].to_vec(),
            });
            schedule.blocks_per_worker[k % workers] += 1;
            schedule.block_rounds.push(((row, col), schedule.rounds));
        }

        let results: Vec<JobResult> = std::thread::scope(|scope| {
            let handles: Vec<_> = per_worker
                .into_iter()
                .filter(|jobs| !jobs.is_empty())
                .map(|jobs| {
                    scope.spawn(move || {
                        jobs.into_iter()
                            .map(|job| run_job(params, rng, size, n, job))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("block worker panicked"))
                .collect()
        });

        for res in results {
            let (lo, _) = block_range(res.row, size, n);
            let lo = lo as usize;
            deg_in[lo..lo + res.din.len()].copy_from_slice(&res.din);
            if res.row == res.col {
                deg_out[lo..lo + res.dout.len()].copy_from_slice(&res.dout);
            } else {
                let (clo, _) = block_range(res.col, size, n);
                for (k, inc) in res.col_inc.iter().enumerate() {
                    deg_out[clo as usize + k] += inc;
                }
            }
            done[res.row][res.col] = true;
            block_edges[res.row][res.col] = Some(res.linked);
            completed += 1;
        }
    }

    let mut cols = vec![Vec::new(); len];
    for c in 0..m {
        let (clo, chi) = block_range(c, size, n);
        for j in clo..=chi {
            let k = (j - clo) as usize;
            let col = &mut cols[j as usize];
            for row_blocks in block_edges.iter().take(c + 1) {
                let edges = row_blocks[c].as_ref().expect("block not evaluated");
                col.extend_from_slice(&edges[k]);
            }
        }
    }
    let meta = NetworkMeta {
        model: Model::Dapa,
        params: *params,
        seed: rng.seed(),
    };
    let net = GrowingNetwork::from_parts(n, meta, cols, deg_in, deg_out);
    Ok((net, schedule))
}
