//! Reference oracles shared by the integration suites. Nothing here calls the
//! code path it is used to check.
#![allow(dead_code)]

use std::collections::HashSet;

use burnkit::{simulate_modified, Graph, ModifiedSchedule, Tree, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

/// The eight-vertex HIT used throughout, relabeled to 0-based ids:
/// 0-1, 1-2, 1-3, 3-4, 3-5, 5-6, 5-7.
pub fn eight_vertex_hit() -> Tree {
    Tree::from_edges(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 7)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).unwrap()
}

/// Floyd–Warshall all-pairs distances.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for &w in g.neighbors(v) {
            d[v][w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Burn rounds from the closed form `min_i (i + d(v, x_i))`, plus
/// `1 + d(v, u)` for pre-burned `u`, capped at the schedule length.
pub fn closed_form_rounds(g: &Graph, preburn: &[Vertex], sources: &[Vertex]) -> Vec<Option<usize>> {
    let d = floyd_warshall(g);
    let k = sources.len();
    (0..g.order())
        .map(|v| {
            let from_sources = sources
                .iter()
                .enumerate()
                .filter_map(|(i, &x)| d[v][x].map(|dist| i + 1 + dist));
            let from_preburn = preburn.iter().filter_map(|&u| d[v][u].map(|dist| 1 + dist));
            from_sources.chain(from_preburn).min().filter(|&r| r <= k)
        })
        .collect()
}

/// Minimal `k` and lexicographically first complete schedule, by trying every
/// source sequence of each length in order and simulating it.
pub fn naive_burning_number(g: &Graph, preburn: &[Vertex]) -> (usize, Vec<Vertex>) {
    let n = g.order();
    for k in 1..=n {
        for index in 0..n.pow(k as u32) {
            // Base-n digits, most significant first: ascending lexicographic order.
            let seq: Vec<Vertex> = (0..k).rev().map(|p| index / n.pow(p as u32) % n).collect();
            let m = ModifiedSchedule::new(preburn.to_vec(), seq.clone()).unwrap();
            if simulate_modified(g, &m).unwrap().is_complete() {
                return (k, seq);
            }
        }
    }
    unreachable!("k = n always burns a connected graph")
}

/// Every labeled connected graph on `n` vertices.
pub fn labeled_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len()).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        g.is_connected().then_some(g)
    })
}

/// Canonical form by brute force over all `n!` relabelings.
pub fn brute_canonical(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<_> = g
            .edges()
            .map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// AHU encoding of a free tree: the smaller encoding over its centers.
pub fn tree_canonical(t: &Tree) -> String {
    fn encode(t: &Tree, v: Vertex, parent: Option<Vertex>) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| encode(t, w, Some(v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let n = t.order();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer.iter().map(|&c| encode(t, c, None)).min().unwrap()
}

/// Decodes a Prüfer word with the quadratic textbook procedure.
pub fn prufer_tree(word: &[usize]) -> Tree {
    let n = word.len() + 2;
    let mut degree = vec![1; n];
    for &v in word {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in word {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let ends: Vec<_> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((ends[0], ends[1]));
    Tree::from_edges(n, &edges).unwrap()
}

/// Iso classes of labeled HITs on `n` vertices, via every Prüfer word.
pub fn brute_hit_classes(n: usize) -> HashSet<String> {
    let mut out = HashSet::new();
    if n <= 2 {
        out.insert(tree_canonical(&Tree::from_edges(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()));
        return out;
    }
    let len = n - 2;
    let mut word = vec![0; len];
    loop {
        let t = prufer_tree(&word);
        if t.is_hit() {
            out.insert(tree_canonical(&t));
        }
        let mut i = 0;
        while i < len {
            word[i] += 1;
            if word[i] < n {
                break;
            }
            word[i] = 0;
            i += 1;
        }
        if i == len {
            return out;
        }
    }
}

/// Size of the side containing `v` once edge `uv` is cut, by flood fill.
pub fn side_size(t: &Tree, v: Vertex, u: Vertex) -> usize {
    let mut seen = vec![false; t.order()];
    seen[u] = true;
    seen[v] = true;
    let mut stack = vec![v];
    let mut count = 1;
    while let Some(a) = stack.pop() {
        for &b in t.neighbors(a) {
            if !seen[b] {
                seen[b] = true;
                count += 1;
                stack.push(b);
            }
        }
    }
    count
}

/// Random tree by attaching each new vertex to a uniformly chosen earlier one,
/// then shuffling labels.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    let mut labels: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        labels.swap(i, rng.random_range(0..=i));
    }
    let edges: Vec<_> = (1..n)
        .map(|i| (labels[rng.random_range(0..i)], labels[i]))
        .collect();
    Tree::from_edges(n, &edges).unwrap()
}

/// Random connected graph: random tree plus random extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let t = random_tree(rng, n);
    let mut edges: Vec<_> = t.graph().edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !t.graph().has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random HIT on roughly `n` vertices: every vertex of a random tree that
/// ends with degree 2 gets one extra leaf.
pub fn random_hit_tree(rng: &mut impl Rng, n: usize) -> Tree {
    let t = random_tree(rng, n);
    let mut edges: Vec<_> = t.graph().edges().collect();
    let mut next = n;
    for v in 0..n {
        if t.degree(v) == 2 {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::from_edges(next, &edges).unwrap()
}

/// A HIT with one edge subdivided: exactly one degree-2 vertex, returned too.
pub fn subdivided_hit(rng: &mut impl Rng, n: usize) -> (Tree, Vertex) {
    loop {
        let h = random_hit_tree(rng, n);
        if h.order() < 2 {
            continue;
        }
        let edges: Vec<_> = h.graph().edges().collect();
        let (a, b) = edges[rng.random_range(0..edges.len())];
        let mid = h.order();
        let mut new_edges: Vec<_> = edges.into_iter().filter(|&e| e != (a, b)).collect();
        new_edges.push((a, mid));
        new_edges.push((mid, b));
        return (Tree::from_edges(mid + 1, &new_edges).unwrap(), mid);
    }
}
