//! Exact burning numbers.
//!
//! A schedule of length `k` is complete exactly when the balls `B(x_i, k - i)`
//! (plus `B(u, k - 1)` for every pre-burned `u`) cover the vertex set. The
//! search deepens `k = 1, 2, ...` and, at each depth, places sources in
//! ascending id order, so the first complete schedule found is the
//! lexicographically smallest one of minimal length. A branch is cut only
//! when the largest possible gain of every unplaced ball, summed, cannot
//! reach the number of uncovered vertices; that bound never removes a
//! completable branch, so pruning does not change the witness.

use fixedbitset::FixedBitSet;

use super::{simulate_modified, BurnError, BurningSchedule, ModifiedSchedule};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_EXACT_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest graph order the solver accepts.
    pub max_order: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_EXACT_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSolution<S> {
    pub k: usize,
    pub witness: S,
    /// Search nodes expanded over all depths.
    pub nodes: u64,
}

pub fn burning_number_exact(g: &Graph) -> Result<ExactSolution<BurningSchedule>, BurnError> {
    burning_number_exact_with(g, &ExactConfig::default())
}

pub fn burning_number_exact_with(
    g: &Graph,
    cfg: &ExactConfig,
) -> Result<ExactSolution<BurningSchedule>, BurnError> {
    let sol = modified_burning_number_exact_with(g, &[], cfg)?;
    Ok(ExactSolution {
        k: sol.k,
        witness: BurningSchedule::new(sol.witness.sources().to_vec())?,
        nodes: sol.nodes,
    })
}

pub fn modified_burning_number_exact(
    g: &Graph,
    preburn: &[Vertex],
) -> Result<ExactSolution<ModifiedSchedule>, BurnError> {
    modified_burning_number_exact_with(g, preburn, &ExactConfig::default())
}

/// Minimal `k` over schedules `(U ∪ {x_1}, x_2, ..., x_k)` for the fixed set
/// `U = preburn`. `k` is at least 1 even when `U` alone burns everything.
pub fn modified_burning_number_exact_with(
    g: &Graph,
    preburn: &[Vertex],
    cfg: &ExactConfig,
) -> Result<ExactSolution<ModifiedSchedule>, BurnError> {
    let n = g.order();
    if n > cfg.max_order {
        return Err(BurnError::TooLarge {
            order: n,
            limit: cfg.max_order,
        });
    }
    if let Some(&bad) = preburn.iter().find(|&&v| v >= n) {
        return Err(BurnError::InvalidSource(bad, n));
    }
    if !g.is_connected() {
        return Err(BurnError::Disconnected);
    }

    let mut balls = Balls::new(g);
    let mut nodes = 0;
    // Some vertex has eccentricity < n, so k = n always succeeds.
    for k in 1..=n {
        balls.ensure_radius(k - 1);
        let mut search = Search {
            balls: &balls,
            k,
            n,
            levels: vec![FixedBitSet::with_capacity(n); k + 1],
            chosen: Vec::with_capacity(k),
            nodes: 0,
        };
        for &u in preburn {
            search.levels[0].union_with(balls.ball(u, k - 1));
        }
        let found = search.dfs(0);
        nodes += search.nodes;
        if found {
            let witness = ModifiedSchedule::new(preburn.to_vec(), search.chosen)?;
            let bm = simulate_modified(g, &witness)?;
            if bm.completion() != Some(k) {
                return Err(BurnError::WitnessRejected(format!(
                    "depth {k} witness {:?} simulated to completion {:?}",
                    witness.sources(),
                    bm.completion()
                )));
            }
            return Ok(ExactSolution { k, witness, nodes });
        }
    }
    unreachable!("a connected graph burns within n rounds")
}

/// `B(v, r)` as bitsets, indexed `[r][v]`.
struct Balls {
    dist: Vec<Vec<usize>>,
    by_radius: Vec<Vec<FixedBitSet>>,
}

impl Balls {
    fn new(g: &Graph) -> Self {
        let dist = g
            .all_pairs_distances()
            .into_iter()
            .map(|row| row.into_iter().map(|d| d.unwrap_or(usize::MAX)).collect())
            .collect();
        Self {
            dist,
            by_radius: Vec::new(),
        }
    }

    fn ensure_radius(&mut self, r: usize) {
        let n = self.dist.len();
        while self.by_radius.len() <= r {
            let radius = self.by_radius.len();
            let layer = (0..n)
                .map(|v| {
                    let mut b = FixedBitSet::with_capacity(n);
                    b.extend((0..n).filter(|&w| self.dist[v][w] <= radius));
                    b
                })
                .collect();
            self.by_radius.push(layer);
        }
    }

    fn ball(&self, v: Vertex, r: usize) -> &FixedBitSet {
        &self.by_radius[r][v]
    }
}

struct Search<'a> {
    balls: &'a Balls,
    k: usize,
    n: usize,
    /// `levels[p]` is the covered set before placing source `p`.
    levels: Vec<FixedBitSet>,
    chosen: Vec<Vertex>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, p: usize) -> bool {
        self.nodes += 1;
        let covered = self.levels[p].count_ones(..);
        if p == self.k {
            return covered == self.n;
        }
        let uncovered = self.n - covered;
        if uncovered == 0 {
            // The smallest completion pads with vertex 0.
            self.chosen.resize(self.k, 0);
            return true;
        }
        if !self.can_still_cover(p, uncovered) {
            return false;
        }
        let radius = self.k - 1 - p;
        for v in 0..self.n {
            let (head, tail) = self.levels.split_at_mut(p + 1);
            let next = &mut tail[0];
            next.clone_from(&head[p]);
            next.union_with(self.balls.ball(v, radius));
            self.chosen.push(v);
            if self.dfs(p + 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    /// Upper bound on what the unplaced sources `p..k` can still cover.
    fn can_still_cover(&self, p: usize, uncovered: usize) -> bool {
        let covered = &self.levels[p];
        let mut capacity = 0;
        for q in p..self.k {
            let radius = self.k - 1 - q;
            let best = (0..self.n)
                .map(|v| self.balls.ball(v, radius).difference_count(covered))
                .max()
                .unwrap_or(0);
            capacity += best;
            if capacity >= uncovered {
                return true;
            }
        }
        false
    }
}
