//! Deterministic graph generators.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};
use crate::hit::augment_degree2;
use crate::tree::Tree;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: String, reason: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &str, reason: impl Into<String>) -> GenerateError {
    GenerateError::BadParams {
        family: family.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    /// Star on `n` vertices, center 0.
    Star(usize),
    Complete(usize),
    /// Hub 0 with legs of the given lengths, numbered leg by leg.
    Spider(Vec<usize>),
    Petersen,
    /// Uniform labeled tree drawn through a random Prüfer word.
    RandomTree { n: usize, seed: u64 },
    RandomHit { n: usize, seed: u64 },
    /// Random tree plus each remaining pair as an edge with probability `p`.
    RandomConnected { n: usize, p: f64, seed: u64 },
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "star",
    "complete",
    "spider",
    "petersen",
    "random_tree",
    "random_hit",
    "random_connected",
];

impl Family {
    /// Builds a family from its CLI name and positional parameters.
    pub fn parse(name: &str, params: &[String], seed: u64) -> Result<Self, GenerateError> {
        let int = |i: usize| -> Result<usize, GenerateError> {
            let raw = params.get(i).ok_or_else(|| bad(name, format!("missing parameter #{}", i + 1)))?;
            raw.parse().map_err(|_| bad(name, format!("not a count: {raw:?}")))
        };
        let arity = |k: usize| -> Result<(), GenerateError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(bad(name, format!("expected {k} parameter(s), got {}", params.len())))
            }
        };
        Ok(match name {
            "path" => {
                arity(1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(int(0)?)
            }
            "star" => {
                arity(1)?;
                Family::Star(int(0)?)
            }
            "complete" => {
                arity(1)?;
                Family::Complete(int(0)?)
            }
            "spider" => {
                arity(1)?;
                let legs = params[0]
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| bad(name, format!("bad leg {s:?}"))))
                    .collect::<Result<_, _>>()?;
                Family::Spider(legs)
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "random_tree" => {
                arity(1)?;
                Family::RandomTree { n: int(0)?, seed }
            }
            "random_hit" => {
                arity(1)?;
                Family::RandomHit { n: int(0)?, seed }
            }
            "random_connected" => {
                arity(2)?;
                let p: f64 = params[1]
                    .parse()
                    .map_err(|_| bad(name, format!("not a probability: {:?}", params[1])))?;
                Family::RandomConnected { n: int(0)?, p, seed }
            }
            other => return Err(GenerateError::UnknownFamily(other.into())),
        })
    }

    pub fn generate(&self) -> Result<Graph, GenerateError> {
        match *self {
            Family::Path(n) => Ok(path(n)?.into_graph()),
            Family::Cycle(n) => cycle(n),
            Family::Star(n) => Ok(star(n)?.into_graph()),
            Family::Complete(n) => Ok(complete(n)?),
            Family::Spider(ref legs) => Ok(spider(legs)?.into_graph()),
            Family::Petersen => Ok(petersen()),
            Family::RandomTree { n, seed } => Ok(random_tree(n, seed)?.into_graph()),
            Family::RandomHit { n, seed } => Ok(random_hit(n, seed)?.into_graph()),
            Family::RandomConnected { n, p, seed } => random_connected(n, p, seed),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path-{n}"),
            Family::Cycle(n) => write!(f, "cycle-{n}"),
            Family::Star(n) => write!(f, "star-{n}"),
            Family::Complete(n) => write!(f, "complete-{n}"),
            Family::Spider(legs) => {
                let legs: Vec<_> = legs.iter().map(usize::to_string).collect();
                write!(f, "spider-{}", legs.join("_"))
            }
            Family::Petersen => write!(f, "petersen"),
            Family::RandomTree { n, seed } => write!(f, "random_tree-{n}-s{seed}"),
            Family::RandomHit { n, seed } => write!(f, "random_hit-{n}-s{seed}"),
            Family::RandomConnected { n, p, seed } => write!(f, "random_connected-{n}-p{p}-s{seed}"),
        }
    }
}

pub fn path(n: usize) -> Result<Tree, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Tree::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(bad("cycle", "needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn star(n: usize) -> Result<Tree, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Tree::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

pub fn spider(legs: &[usize]) -> Result<Tree, GraphError> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Tree::from_edges(next, &edges)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, &edges).expect("static edge list")
}

/// Decodes a Prüfer word over `0..n` (length `n - 2`) into its labeled tree.
pub fn prufer_decode(word: &[Vertex]) -> Result<Tree, GraphError> {
    let n = word.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in word {
        if v >= n {
            return Err(GraphError::InvalidVertex(v, n));
        }
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in word {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer word always leaves a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Tree::from_edges(n, &edges)
}

/// Uniformly random labeled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Tree, GenerateError> {
    random_tree_from(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn random_tree_from(n: usize, rng: &mut impl Rng) -> Result<Tree, GenerateError> {
    match n {
        0 => Err(bad("random_tree", "needs at least one vertex")),
        1 => Ok(path(1)?),
        _ => {
            let word: Vec<_> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            Ok(prufer_decode(&word)?)
        }
    }
}

const RANDOM_HIT_ATTEMPTS: usize = 100_000;

/// A HIT on exactly `n` vertices, built by hanging a leaf off every degree-2
/// vertex of a uniform random tree. The base tree size is adjusted between
/// draws until the augmented size lands on `n`.
pub fn random_hit(n: usize, seed: u64) -> Result<Tree, GenerateError> {
    if n == 0 || n == 3 {
        return Err(bad("random_hit", format!("no HIT has {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // About a third of the vertices of a uniform tree have degree 2.
    let mut m = ((n as f64) / (1.0 + (-1.0f64).exp())).round().clamp(1.0, n as f64) as usize;
    for _ in 0..RANDOM_HIT_ATTEMPTS {
        let aug = augment_degree2(&random_tree_from(m, &mut rng)?);
        let size = aug.tree.order();
        if size == n {
            return Ok(aug.tree);
        }
        m = if size > n { (m - 1).max(1) } else { (m + 1).min(n) };
    }
    Err(bad("random_hit", format!("no HIT of size {n} after {RANDOM_HIT_ATTEMPTS} draws")))
}

pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("random_connected", format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_from(n, &mut rng)?;
    let mut edges: Vec<_> = tree.graph().edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.graph().has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}
