//! From trees to general graphs: spanning-tree enumeration and counting, the
//! spanning-tree characterisation of the burning number, and an exhaustive
//! search for spanning trees without degree-2 vertices (HISTs).

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::burning::{burning_number_exact_with, simulate, BurnError, BurningSchedule, ExactConfig};
use crate::ceil_sqrt;
use crate::graph::{Graph, GraphError, Vertex};
use crate::hit::{hit_schedule, CertifiedPlan, HitError};
use crate::tree::Tree;

pub const DEFAULT_TREE_LIMIT: u64 = 1_000_000;
pub const DEFAULT_HIST_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanningError {
    #[error("graph has {count} spanning trees, limit is {limit}")]
    TooMany { count: BigUint, limit: u64 },
    #[error("graph of order {order} exceeds the search limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("HIST plan failed verification on the host graph: {0}")]
    HostVerificationFailed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Burn(#[from] BurnError),
    #[error(transparent)]
    Hit(#[from] HitError),
}

/// Number of spanning trees via the matrix-tree theorem: any cofactor of the
/// Laplacian, evaluated with fraction-free (Bareiss) elimination.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let n = g.order();
    if n == 1 {
        return BigUint::from(1u8);
    }
    let size = n - 1;
    let mut a: Vec<Vec<BigInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        BigInt::from(g.degree(i))
                    } else if g.has_edge(i, j) {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..size {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return BigUint::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det: BigInt = prev * sign;
    det.to_biguint().expect("Laplacian cofactor is non-negative")
}

/// Every spanning tree of a connected graph, exactly once.
///
/// Edges are decided in ascending `(u, v)` order, inclusion before exclusion.
/// An edge is only included when it joins two components and only excluded
/// when the remaining edges still connect the graph, so every branch ends in
/// a spanning tree.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    stack: Vec<Frame>,
}

struct Frame {
    next: usize,
    chosen: Vec<usize>,
}

impl Iterator for SpanningTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        while let Some(Frame { next, chosen }) = self.stack.pop() {
            if chosen.len() + 1 == self.n {
                let edges: Vec<_> = chosen.iter().map(|&e| self.edges[e]).collect();
                return Some(Tree::from_edges(self.n, &edges).expect("chosen edges form a tree"));
            }
            let (u, v) = self.edges[next];
            let chosen_set = chosen.iter().map(|&e| self.edges[e]);
            let rest = self.edges[next + 1..].iter().copied();
            if connects(self.n, chosen_set.clone().chain(rest)) {
                self.stack.push(Frame {
                    next: next + 1,
                    chosen: chosen.clone(),
                });
            }
            let mut dsu = Dsu::new(self.n);
            for (a, b) in chosen_set {
                dsu.union(a, b);
            }
            if dsu.find(u) != dsu.find(v) {
                let mut with = chosen;
                with.push(next);
                self.stack.push(Frame {
                    next: next + 1,
                    chosen: with,
                });
            }
        }
        None
    }
}

/// Streams the spanning trees of `g` after checking the matrix-tree count
/// against `limit`.
pub fn enumerate_spanning_trees(g: &Graph, limit: u64) -> Result<SpanningTrees, SpanningError> {
    if !g.is_connected() {
        return Err(SpanningError::Disconnected);
    }
    let count = spanning_tree_count(g);
    if count.to_u64().is_none_or(|c| c > limit) {
        return Err(SpanningError::TooMany { count, limit });
    }
    Ok(SpanningTrees {
        n: g.order(),
        edges: g.edges().collect(),
        stack: vec![Frame {
            next: 0,
            chosen: Vec::new(),
        }],
    })
}

fn connects(n: usize, edges: impl Iterator<Item = (Vertex, Vertex)>) -> bool {
    let mut dsu = Dsu::new(n);
    let mut components = n;
    for (a, b) in edges {
        if dsu.union(a, b) {
            components -= 1;
        }
    }
    components == 1
}

#[derive(Clone)]
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningConfig {
    pub tree_limit: u64,
    pub exact: ExactConfig,
}

impl Default for SpanningConfig {
    fn default() -> Self {
        Self {
            tree_limit: DEFAULT_TREE_LIMIT,
            exact: ExactConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningMin {
    pub k: usize,
    /// First spanning tree (in enumeration order) attaining `k`.
    pub tree: Tree,
    pub tree_index: usize,
    pub schedule: BurningSchedule,
    pub trees_examined: usize,
}

/// Minimum exact burning number over all spanning trees of `g`.
pub fn burning_number_via_spanning_trees(
    g: &Graph,
    cfg: &SpanningConfig,
) -> Result<SpanningMin, SpanningError> {
    if g.order() > cfg.exact.max_order {
        return Err(BurnError::TooLarge {
            order: g.order(),
            limit: cfg.exact.max_order,
        }
        .into());
    }
    let mut best: Option<SpanningMin> = None;
    let mut examined = 0;
    for (index, tree) in enumerate_spanning_trees(g, cfg.tree_limit)?.enumerate() {
        examined += 1;
        let sol = burning_number_exact_with(tree.graph(), &cfg.exact)?;
        if best.as_ref().is_none_or(|b| sol.k < b.k) {
            best = Some(SpanningMin {
                k: sol.k,
                tree,
                tree_index: index,
                schedule: sol.witness,
                trees_examined: 0,
            });
        }
    }
    let mut best = best.expect("a connected graph has a spanning tree");
    best.trees_examined = examined;
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistResult {
    /// The first HIST found, if any exists.
    pub tree: Option<Tree>,
    /// Search nodes expanded.
    pub nodes: u64,
}

impl HistResult {
    pub fn found(&self) -> bool {
        self.tree.is_some()
    }
}

/// Exhaustive search for a spanning tree with no degree-2 vertex.
///
/// Branches over edges in ascending order, including before excluding. A
/// branch dies when it would disconnect the graph, or when some vertex has
/// exactly two chosen edges and no undecided ones left.
pub fn find_hist(g: &Graph, max_order: usize) -> Result<HistResult, SpanningError> {
    let n = g.order();
    if n > max_order {
        return Err(SpanningError::TooLarge {
            order: n,
            limit: max_order,
        });
    }
    if !g.is_connected() {
        return Err(SpanningError::Disconnected);
    }
    let edges: Vec<_> = g.edges().collect();
    let mut search = HistSearch {
        n,
        undecided: g.vertices().map(|v| g.degree(v)).collect(),
        degree: vec![0; n],
        chosen: Vec::with_capacity(n.saturating_sub(1)),
        edges,
        nodes: 0,
    };
    let found = search.dfs(0, Dsu::new(n));
    let tree = if found {
        let chosen: Vec<_> = search.chosen.iter().map(|&e| search.edges[e]).collect();
        let t = Tree::from_edges(n, &chosen)?;
        debug_assert!(t.is_hit());
        Some(t)
    } else {
        None
    };
    Ok(HistResult {
        tree,
        nodes: search.nodes,
    })
}

struct HistSearch {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    degree: Vec<usize>,
    undecided: Vec<usize>,
    chosen: Vec<usize>,
    nodes: u64,
}

impl HistSearch {
    fn dfs(&mut self, next: usize, dsu: Dsu) -> bool {
        self.nodes += 1;
        if self.chosen.len() + 1 == self.n || self.n == 1 {
            return self.degree.iter().all(|&d| d != 2);
        }
        let (u, v) = self.edges[next];
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;

        let mut joined = dsu.clone();
        if joined.union(u, v) {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push(next);
            if !self.frozen_at_two(u) && !self.frozen_at_two(v) && self.dfs(next + 1, joined) {
                return true;
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }

        let rest = self.chosen.iter().map(|&e| self.edges[e]).chain(self.edges[next + 1..].iter().copied());
        if !self.frozen_at_two(u)
            && !self.frozen_at_two(v)
            && connects(self.n, rest)
            && self.dfs(next + 1, dsu)
        {
            return true;
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        false
    }

    fn frozen_at_two(&self, v: Vertex) -> bool {
        self.degree[v] == 2 && self.undecided[v] == 0
    }
}

/// A `⌈√n⌉`-round plan for `g` built from a HIST, verified on `g` itself.
/// `None` when `g` has no HIST.
pub fn hist_bound(g: &Graph, max_order: usize) -> Result<Option<CertifiedPlan>, SpanningError> {
    let Some(tree) = find_hist(g, max_order)?.tree else {
        return Ok(None);
    };
    let plan = hit_schedule(&tree)?;
    let verification = simulate(g, &plan.schedule)?;
    let bound = ceil_sqrt(g.order());
    if !verification.is_complete() || plan.len() > bound {
        return Err(SpanningError::HostVerificationFailed(format!(
            "{:?} does not burn the graph within {bound} rounds",
            plan.schedule.sources()
        )));
    }
    Ok(Some(CertifiedPlan {
        bound,
        schedule: plan.schedule,
        verification,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(spanning_tree_count(&cycle(4)), BigUint::from(4u8));
        assert_eq!(spanning_tree_count(&star(4)), BigUint::from(1u8));
        let k5 = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(spanning_tree_count(&k5), BigUint::from(125u8));
    }

    #[test]
    fn enumeration_of_c4() {
        let trees: Vec<_> = enumerate_spanning_trees(&cycle(4), 100).unwrap().collect();
        assert_eq!(trees.len(), 4);
        assert!(trees.iter().all(|t| t.order() == 4 && !t.is_hit()));
        let tree = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let only: Vec<_> = enumerate_spanning_trees(tree.graph(), 1).unwrap().collect();
        assert_eq!(only, vec![tree]);
    }

    #[test]
    fn enumeration_limits() {
        assert!(matches!(
            enumerate_spanning_trees(&cycle(5), 4),
            Err(SpanningError::TooMany { limit: 4, .. })
        ));
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(enumerate_spanning_trees(&g, 10), Err(SpanningError::Disconnected)));
    }

    #[test]
    fn hist_on_star_and_cycle() {
        let r = find_hist(&star(4), DEFAULT_HIST_LIMIT).unwrap();
        assert_eq!(r.tree.unwrap().graph(), &star(4));
        assert!(!find_hist(&cycle(4), DEFAULT_HIST_LIMIT).unwrap().found());
        assert!(hist_bound(&cycle(4), DEFAULT_HIST_LIMIT).unwrap().is_none());
        let plan = hist_bound(&star(4), DEFAULT_HIST_LIMIT).unwrap().unwrap();
        assert_eq!((plan.len(), plan.bound), (2, 3));
    }

    #[test]
    fn spanning_min_on_c4() {
        let r = burning_number_via_spanning_trees(&cycle(4), &SpanningConfig::default()).unwrap();
        assert_eq!(r.k, 2);
        assert_eq!(r.trees_examined, 4);
    }
}
