//! Trees validated at construction, with the structural queries used by the
//! schedule constructions: bridge sides, smoothing of degree-2 vertices and
//! induced subtrees.

use crate::graph::{Graph, GraphError, Vertex};

/// A connected acyclic [`Graph`] with its leaf/internal partition cached.
///
/// Leaves have degree 1 and internal vertices degree at least 2. The single
/// vertex tree has neither leaves nor internal vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
    leaves: Vec<Vertex>,
    internal: Vec<Vertex>,
}

/// The component `T_x(xy)` containing `x` after deleting the edge `xy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeSide {
    pub x: Vertex,
    pub y: Vertex,
    /// Sorted ascending.
    pub vertices: Vec<Vertex>,
}

impl BridgeSide {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Result of smoothing a degree-2 vertex: the smaller tree plus the id map.
///
/// Surviving vertices keep their relative order, so every id above the
/// removed vertex shifts down by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smoothing {
    pub tree: Tree,
    pub removed: Vertex,
    /// `old_to_new[v]` is `None` exactly for the removed vertex.
    pub old_to_new: Vec<Option<Vertex>>,
}

impl Smoothing {
    /// Maps an id of the smoothed tree back to the original tree.
    pub fn to_original(&self, v: Vertex) -> Vertex {
        if v < self.removed {
            v
        } else {
            v + 1
        }
    }
}

/// An induced subtree relabeled to `0..k`, with `original[new] = old`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subtree {
    pub tree: Tree,
    pub original: Vec<Vertex>,
}

impl Subtree {
    pub fn local_id(&self, old: Vertex) -> Option<Vertex> {
        self.original.binary_search(&old).ok()
    }
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Self, GraphError> {
        if graph.edge_count() + 1 != graph.order() {
            return Err(GraphError::NotATree("edge count is not n - 1"));
        }
        if !graph.is_connected() {
            return Err(GraphError::NotATree("not connected"));
        }
        let (leaves, internal) = if graph.order() == 1 {
            (Vec::new(), Vec::new())
        } else {
            graph.vertices().partition(|&v| graph.degree(v) == 1)
        };
        Ok(Self {
            graph,
            leaves,
            internal,
        })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::new(Graph::new(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.graph.degree(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.graph.neighbors(v)
    }

    pub fn leaves(&self) -> &[Vertex] {
        &self.leaves
    }

    pub fn internal_vertices(&self) -> &[Vertex] {
        &self.internal
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.internal.len()
    }

    /// Homeomorphically irreducible: no vertex of degree exactly 2.
    pub fn is_hit(&self) -> bool {
        self.graph.vertices().all(|v| self.degree(v) != 2)
    }

    pub fn degree_two_vertices(&self) -> Vec<Vertex> {
        self.graph
            .vertices()
            .filter(|&v| self.degree(v) == 2)
            .collect()
    }

    /// Vertices of `T_x(xy)`.
    pub fn bridge_component(&self, x: Vertex, y: Vertex) -> Result<BridgeSide, GraphError> {
        self.graph.check_vertex(x)?;
        self.graph.check_vertex(y)?;
        if !self.graph.has_edge(x, y) {
            return Err(GraphError::NotAnEdge(x, y));
        }
        let mut seen = vec![false; self.order()];
        seen[x] = true;
        seen[y] = true;
        let mut stack = vec![x];
        let mut vertices = vec![x];
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        Ok(BridgeSide { x, y, vertices })
    }

    /// Deletes the degree-2 vertex `v` and joins its two neighbors.
    pub fn smooth(&self, v: Vertex) -> Result<Smoothing, GraphError> {
        self.graph.check_vertex(v)?;
        if self.degree(v) != 2 {
            return Err(GraphError::NotDegreeTwo(v, self.degree(v)));
        }
        let old_to_new: Vec<Option<Vertex>> = self
            .graph
            .vertices()
            .map(|u| match u.cmp(&v) {
                std::cmp::Ordering::Less => Some(u),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(u - 1),
            })
            .collect();
        let (a, b) = (self.neighbors(v)[0], self.neighbors(v)[1]);
        let mut edges: Vec<_> = self
            .graph
            .edges()
            .filter(|&(p, q)| p != v && q != v)
            .map(|(p, q)| (old_to_new[p].unwrap(), old_to_new[q].unwrap()))
            .collect();
        edges.push((old_to_new[a].unwrap(), old_to_new[b].unwrap()));
        let tree = Tree::from_edges(self.order() - 1, &edges)?;
        Ok(Smoothing {
            tree,
            removed: v,
            old_to_new,
        })
    }

    /// Induced subtree on `vertices`, which must be sorted, duplicate-free and
    /// induce a connected subgraph.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Subtree, GraphError> {
        let mut local = vec![None; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            self.graph.check_vertex(v)?;
            local[v] = Some(i);
        }
        let edges: Vec<_> = self
            .graph
            .edges()
            .filter_map(|(p, q)| Some((local[p]?, local[q]?)))
            .collect();
        let tree = Tree::from_edges(vertices.len(), &edges)?;
        Ok(Subtree {
            tree,
            original: vertices.to_vec(),
        })
    }
}
