//! Python bindings: graphs and trees, simulation, exact solving, certified
//! plans and generators.

use burnkit::catalog::series_reduced_trees;
use burnkit::generate::Family;
use burnkit::spanning::{self, SpanningConfig, SpanningError};
use burnkit::{
    BurnError, BurnMap, CertifiedPlan, ExactConfig, Graph, GraphError, HitError, ModifiedSchedule,
    Tree, Vertex,
};
use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn burn_err(e: BurnError) -> PyErr {
    match e {
        BurnError::WitnessRejected(_) => PyRuntimeError::new_err(e.to_string()),
        _ => value_err(e),
    }
}

fn hit_err(e: HitError) -> PyErr {
    match e {
        HitError::LiftVerificationFailed(_)
        | HitError::ProjectionVerificationFailed(_)
        | HitError::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        HitError::Burn(b) => burn_err(b),
        _ => value_err(e),
    }
}

fn spanning_err(e: SpanningError) -> PyErr {
    match e {
        SpanningError::HostVerificationFailed(_) => PyRuntimeError::new_err(e.to_string()),
        SpanningError::Hit(h) => hit_err(h),
        SpanningError::Burn(b) => burn_err(b),
        _ => value_err(e),
    }
}

fn graph_err(e: GraphError) -> PyErr {
    value_err(e)
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "burnkit", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        Ok(Self {
            inner: Graph::new(n, &edges).map_err(graph_err)?,
        })
    }

    /// Parses the `n m` / `u v` edge-list format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: Graph::parse_edge_list(text).map_err(graph_err)?,
        })
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: Vertex) -> PyResult<Vec<Vertex>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn distance(&self, u: Vertex, v: Vertex) -> PyResult<usize> {
        self.inner.distance(u, v).map_err(graph_err)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __eq__(&self, other: PyRef<'_, PyGraph>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.order(), self.inner.edge_count())
    }
}

impl PyGraph {
    fn check(&self, v: Vertex) -> PyResult<()> {
        if v < self.inner.order() {
            Ok(())
        } else {
            Err(value_err(GraphError::InvalidVertex(v, self.inner.order())))
        }
    }
}

/// A tree, validated on construction.
#[pyclass(name = "Tree", module = "burnkit", frozen)]
struct PyTree {
    inner: Tree,
}

#[pymethods]
impl PyTree {
    #[new]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        Ok(Self {
            inner: Tree::from_edges(n, &edges).map_err(graph_err)?,
        })
    }

    #[staticmethod]
    fn from_graph(g: PyRef<'_, PyGraph>) -> PyResult<Self> {
        Ok(Self {
            inner: Tree::new(g.inner.clone()).map_err(graph_err)?,
        })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph().clone(),
        }
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.graph().edges().collect()
    }

    fn leaves(&self) -> Vec<Vertex> {
        self.inner.leaves().to_vec()
    }

    fn internal_vertices(&self) -> Vec<Vertex> {
        self.inner.internal_vertices().to_vec()
    }

    fn degree_two_vertices(&self) -> Vec<Vertex> {
        self.inner.degree_two_vertices()
    }

    /// True when no vertex has degree 2.
    fn is_hit(&self) -> bool {
        self.inner.is_hit()
    }

    /// Vertices on `x`'s side once edge `xy` is removed.
    fn bridge_component(&self, x: Vertex, y: Vertex) -> PyResult<Vec<Vertex>> {
        Ok(self.inner.bridge_component(x, y).map_err(graph_err)?.vertices)
    }

    /// Removes degree-2 vertex `v` and joins its neighbors. Returns the new
    /// tree and, for each old vertex, its new id (`None` for `v`).
    fn smooth(&self, v: Vertex) -> PyResult<(PyTree, Vec<Option<Vertex>>)> {
        let s = self.inner.smooth(v).map_err(graph_err)?;
        Ok((PyTree { inner: s.tree }, s.old_to_new))
    }

    fn to_edge_list(&self) -> String {
        self.inner.graph().to_edge_list()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Tree(n={}, hit={})", self.inner.order(), self.inner.is_hit())
    }
}

/// Burn round of every vertex (1-based, `None` if never burned).
#[pyclass(name = "BurnMap", module = "burnkit", frozen)]
struct PyBurnMap {
    inner: BurnMap,
}

#[pymethods]
impl PyBurnMap {
    #[getter]
    fn rounds(&self) -> Vec<Option<usize>> {
        self.inner.rounds().to_vec()
    }

    /// Last burn round, or `None` when some vertex stays unburned.
    #[getter]
    fn completion(&self) -> Option<usize> {
        self.inner.completion()
    }

    fn is_complete(&self) -> bool {
        self.inner.is_complete()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!("BurnMap(completion={:?})", self.inner.completion())
    }
}

/// A schedule with the round bound it certifies and its simulation.
#[pyclass(name = "Plan", module = "burnkit", frozen)]
struct PyPlan {
    inner: CertifiedPlan,
}

#[pymethods]
impl PyPlan {
    #[getter]
    fn bound(&self) -> usize {
        self.inner.bound
    }

    #[getter]
    fn sources(&self) -> Vec<Vertex> {
        self.inner.schedule.sources().to_vec()
    }

    #[getter]
    fn rounds(&self) -> Vec<Option<usize>> {
        self.inner.verification.rounds().to_vec()
    }

    #[getter]
    fn completion(&self) -> Option<usize> {
        self.inner.verification.completion()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(value_err)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Plan(bound={}, sources={:?})", self.inner.bound, self.inner.schedule.sources())
    }
}

/// Runs `sources` (one per round) with `preburn` burned alongside the first.
#[pyfunction]
#[pyo3(signature = (graph, sources, preburn = Vec::new()))]
fn simulate(graph: PyRef<'_, PyGraph>, sources: Vec<Vertex>, preburn: Vec<Vertex>) -> PyResult<PyBurnMap> {
    let m = ModifiedSchedule::new(preburn, sources).map_err(burn_err)?;
    let inner = burnkit::simulate_modified(&graph.inner, &m).map_err(burn_err)?;
    Ok(PyBurnMap { inner })
}

/// Exact burning number and the lexicographically first optimal sources.
#[pyfunction]
#[pyo3(signature = (graph, preburn = Vec::new(), max_order = burnkit::burning::DEFAULT_EXACT_LIMIT))]
fn burning_number(
    py: Python<'_>,
    graph: PyRef<'_, PyGraph>,
    preburn: Vec<Vertex>,
    max_order: usize,
) -> PyResult<(usize, Vec<Vertex>)> {
    let g = &graph.inner;
    let sol = py
        .detach(|| burnkit::modified_burning_number_exact_with(g, &preburn, &ExactConfig { max_order }))
        .map_err(burn_err)?;
    Ok((sol.k, sol.witness.sources().to_vec()))
}

/// `(x, y)`: every side at `x` other than through `y` is small, the side of
/// `x` across `xy` is large.
#[pyfunction]
fn find_anchor(tree: PyRef<'_, PyTree>) -> PyResult<(Vertex, Vertex)> {
    let a = burnkit::find_anchor(&tree.inner).map_err(hit_err)?;
    Ok((a.x, a.heavy()))
}

/// Plan within `ceil(sqrt n)` rounds for a tree without degree-2 vertices.
#[pyfunction]
fn hit_schedule(tree: PyRef<'_, PyTree>) -> PyResult<PyPlan> {
    let inner = burnkit::hit_schedule(&tree.inner).map_err(hit_err)?;
    Ok(PyPlan { inner })
}

/// Plan within `ceil(sqrt(n + d))` rounds for any tree with `d` degree-2 vertices.
#[pyfunction]
fn tree_schedule(tree: PyRef<'_, PyTree>) -> PyResult<PyPlan> {
    let inner = burnkit::tree_schedule_via_augmentation(&tree.inner).map_err(hit_err)?;
    Ok(PyPlan { inner })
}

/// A spanning tree without degree-2 vertices, or `None` if there is none.
#[pyfunction]
#[pyo3(signature = (graph, max_order = spanning::DEFAULT_HIST_LIMIT))]
fn find_hist(py: Python<'_>, graph: PyRef<'_, PyGraph>, max_order: usize) -> PyResult<Option<PyTree>> {
    let g = &graph.inner;
    let res = py.detach(|| spanning::find_hist(g, max_order)).map_err(spanning_err)?;
    Ok(res.tree.map(|inner| PyTree { inner }))
}

#[pyfunction]
#[pyo3(signature = (graph, max_order = spanning::DEFAULT_HIST_LIMIT))]
fn hist_bound(py: Python<'_>, graph: PyRef<'_, PyGraph>, max_order: usize) -> PyResult<Option<PyPlan>> {
    let g = &graph.inner;
    let plan = py.detach(|| spanning::hist_bound(g, max_order)).map_err(spanning_err)?;
    Ok(plan.map(|inner| PyPlan { inner }))
}

#[pyfunction]
fn spanning_tree_count(graph: PyRef<'_, PyGraph>) -> BigUint {
    spanning::spanning_tree_count(&graph.inner)
}

/// Minimum exact burning number over all spanning trees: `(k, tree, sources)`.
#[pyfunction]
#[pyo3(signature = (graph, tree_limit = spanning::DEFAULT_TREE_LIMIT))]
fn spanning_min(
    py: Python<'_>,
    graph: PyRef<'_, PyGraph>,
    tree_limit: u64,
) -> PyResult<(usize, PyTree, Vec<Vertex>)> {
    let g = &graph.inner;
    let cfg = SpanningConfig {
        tree_limit,
        ..SpanningConfig::default()
    };
    let best = py
        .detach(|| spanning::burning_number_via_spanning_trees(g, &cfg))
        .map_err(spanning_err)?;
    Ok((best.k, PyTree { inner: best.tree }, best.schedule.into_sources()))
}

/// Builds a graph from a named family, e.g. `generate("random_hit", [20], seed=3)`.
#[pyfunction]
#[pyo3(signature = (family, params = Vec::new(), seed = 0))]
fn generate(family: &str, params: Vec<Bound<'_, PyAny>>, seed: u64) -> PyResult<PyGraph> {
    let params: Vec<String> = params
        .iter()
        .map(|p| p.str().map(|s| s.to_string()))
        .collect::<PyResult<_>>()?;
    let f = Family::parse(family, &params, seed).map_err(value_err)?;
    Ok(PyGraph {
        inner: f.generate().map_err(value_err)?,
    })
}

/// One tree per isomorphism class of trees on `n` vertices without degree-2 vertices.
#[pyfunction]
fn hits(n: usize) -> Vec<PyTree> {
    series_reduced_trees(n).into_iter().map(|inner| PyTree { inner }).collect()
}

#[pyfunction]
fn ceil_sqrt(n: usize) -> usize {
    burnkit::ceil_sqrt(n)
}

#[pymodule]
#[pyo3(name = "burnkit")]
fn burnkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTree>()?;
    m.add_class::<PyBurnMap>()?;
    m.add_class::<PyPlan>()?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(burning_number, m)?)?;
    m.add_function(wrap_pyfunction!(find_anchor, m)?)?;
    m.add_function(wrap_pyfunction!(hit_schedule, m)?)?;
    m.add_function(wrap_pyfunction!(tree_schedule, m)?)?;
    m.add_function(wrap_pyfunction!(find_hist, m)?)?;
    m.add_function(wrap_pyfunction!(hist_bound, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(spanning_min, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(hits, m)?)?;
    m.add_function(wrap_pyfunction!(ceil_sqrt, m)?)?;
    Ok(())
}
