//! Exhaustive catalogs for property checks: all HITs on `n` vertices and all
//! connected graphs on `n` vertices, each up to isomorphism.

use std::collections::HashSet;

use crate::graph::{Graph, Vertex};
use crate::tree::Tree;

/// Rooted tree in which the root and every other vertex have either no
/// children or at least two. Hanging such a tree off a parent leaves every
/// vertex with degree 1 or at least 3.
#[derive(Debug, Clone)]
struct Planted {
    /// Children as `(size, index)` keys, non-increasing.
    children: Vec<(usize, usize)>,
}

/// `by_size[s]` lists the planted trees on `s` vertices, pairwise
/// non-isomorphic as rooted trees.
struct PlantedTable {
    by_size: Vec<Vec<Planted>>,
}

impl PlantedTable {
    fn new(max_size: usize) -> Self {
        let mut table = Self {
            by_size: vec![Vec::new(); max_size + 1],
        };
        if max_size >= 1 {
            table.by_size[1].push(Planted { children: Vec::new() });
        }
        for s in 2..=max_size {
            let mut trees = Vec::new();
            table.multisets(s - 1, s - 1, None, &mut Vec::new(), &mut |kids| {
                if kids.len() >= 2 {
                    trees.push(Planted {
                        children: kids.to_vec(),
                    });
                }
            });
            table.by_size[s] = trees;
        }
        table
    }

    /// Non-increasing sequences of keys with sizes summing to `remaining`,
    /// every size at most `max_size`, every key at most `bound`.
    fn multisets(
        &self,
        remaining: usize,
        max_size: usize,
        bound: Option<(usize, usize)>,
        acc: &mut Vec<(usize, usize)>,
        emit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if remaining == 0 {
            emit(acc);
            return;
        }
        for size in (1..=remaining.min(max_size)).rev() {
            for idx in (0..self.by_size[size].len()).rev() {
                let key = (size, idx);
                if bound.is_some_and(|b| key > b) {
                    continue;
                }
                acc.push(key);
                self.multisets(remaining - size, max_size, Some(key), acc, emit);
                acc.pop();
            }
        }
    }

    /// Appends the planted tree `key` below `parent`, allocating ids from `next`.
    fn attach(&self, key: (usize, usize), parent: Option<Vertex>, next: &mut Vertex, edges: &mut Vec<(Vertex, Vertex)>) {
        let me = *next;
        *next += 1;
        if let Some(p) = parent {
            edges.push((p, me));
        }
        for &child in &self.by_size[key.0][key.1].children {
            self.attach(child, Some(me), next, edges);
        }
    }
}

/// All homeomorphically irreducible trees on `n` vertices, one per
/// isomorphism class, rooted at their centroid for the construction.
pub fn series_reduced_trees(n: usize) -> Vec<Tree> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Tree::from_edges(1, &[]).unwrap()],
        _ => {}
    }
    let table = PlantedTable::new(n / 2);
    let mut out = Vec::new();
    let build = |roots: &[(usize, usize)], joined: bool| {
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 0;
        if joined {
            // Two centroids joined by an edge.
            table.attach(roots[0], None, &mut next, &mut edges);
            let second = next;
            table.attach(roots[1], None, &mut next, &mut edges);
            edges.push((0, second));
        } else {
            next = 1;
            for &r in roots {
                table.attach(r, Some(0), &mut next, &mut edges);
            }
        }
        Tree::from_edges(n, &edges).unwrap()
    };

    table.multisets(n - 1, (n - 1) / 2, None, &mut Vec::new(), &mut |branches| {
        if branches.len() != 2 {
            out.push(build(branches, false));
        }
    });
    if n.is_multiple_of(2) {
        let half = &table.by_size[n / 2];
        for a in 0..half.len() {
            for b in a..half.len() {
                out.push(build(&[(n / 2, a), (n / 2, b)], true));
            }
        }
    }
    out
}

/// Edge bitmask over pairs `(i, j)`, `i < j`, in row-major order.
fn pair_bit(i: usize, j: usize, n: usize) -> u64 {
    let (i, j) = (i.min(j), i.max(j));
    1 << (i * (2 * n - i - 1) / 2 + (j - i - 1))
}

#[cfg(test)]
fn mask_of(g: &Graph) -> u64 {
    let n = g.order();
    g.edges().fold(0, |m, (u, v)| m | pair_bit(u, v, n))
}

fn graph_of(mask: u64, n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask & pair_bit(i, j, n) != 0)
        .collect();
    Graph::new(n, &edges).unwrap()
}

/// Canonical edge mask: minimum over relabelings that list vertices by
/// ascending degree, permuting freely within each degree class.
fn canonical_mask(g: &Graph) -> u64 {
    let n = g.order();
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let classes: Vec<&[Vertex]> = by_degree
        .chunk_by(|&a, &b| g.degree(a) == g.degree(b))
        .collect();
    let edges: Vec<_> = g.edges().collect();
    let mut position = vec![0; n];
    let mut best = u64::MAX;
    permute_classes(&classes, 0, 0, &mut position, &mut |pos| {
        let m = edges.iter().fold(0, |m, &(u, v)| m | pair_bit(pos[u], pos[v], n));
        best = best.min(m);
    });
    best
}

fn permute_classes(
    classes: &[&[Vertex]],
    class: usize,
    offset: usize,
    position: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    let Some(members) = classes.get(class) else {
        emit(position);
        return;
    };
    let mut perm: Vec<Vertex> = members.to_vec();
    heap_permutations(&mut perm, members.len(), &mut |p| {
        for (i, &v) in p.iter().enumerate() {
            position[v] = offset + i;
        }
        permute_classes(classes, class + 1, offset + members.len(), position, emit);
    });
}

fn heap_permutations(items: &mut [Vertex], k: usize, emit: &mut dyn FnMut(&[Vertex])) {
    if k <= 1 {
        emit(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, emit);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            items.swap(j, k - 1);
        }
    }
}

pub const MAX_CATALOG_ORDER: usize = 8;

/// All connected graphs on `n ≤ 8` vertices, one per isomorphism class, in
/// ascending canonical-mask order.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// the `n`-vertex catalog arises from the `(n-1)`-vertex one by adding a
/// vertex with a non-empty neighborhood.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_CATALOG_ORDER).contains(&n),
        "catalog supports 1..={MAX_CATALOG_ORDER} vertices"
    );
    let mut level = vec![graph_of(0, 1)];
    for order in 2..=n {
        let mut seen = HashSet::new();
        let mut masks = Vec::new();
        for g in &level {
            let base: Vec<_> = g.edges().collect();
            for subset in 1u32..(1 << (order - 1)) {
                let mut edges = base.clone();
                edges.extend((0..order - 1).filter(|&v| subset >> v & 1 == 1).map(|v| (v, order - 1)));
                let h = Graph::new(order, &edges).unwrap();
                let c = canonical_mask(&h);
                if seen.insert(c) {
                    masks.push(c);
                }
            }
        }
        masks.sort_unstable();
        level = masks.into_iter().map(|m| graph_of(m, order)).collect();
    }
    level
}

/// Whether two graphs lie in the same isomorphism class.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.order() <= MAX_CATALOG_ORDER
        && canonical_mask(a) == canonical_mask(b)
}
