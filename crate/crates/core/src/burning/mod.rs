//! The burning process: simulation under standard and pre-burned semantics,
//! and exact burning numbers by iterative deepening.

mod exact;
mod schedule;

pub use exact::{
    burning_number_exact, burning_number_exact_with, modified_burning_number_exact,
    modified_burning_number_exact_with, ExactConfig, ExactSolution, DEFAULT_EXACT_LIMIT,
};
pub use schedule::{BurnMap, BurningSchedule, ModifiedSchedule};

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnError {
    #[error("a schedule needs at least one source")]
    EmptySchedule,
    #[error("standard schedules cannot carry a preburn set")]
    UnexpectedPreburn,
    #[error("source {0} out of range for a graph of order {1}")]
    InvalidSource(Vertex, usize),
    #[error("graph of order {order} exceeds the exact-solver limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("solver witness failed re-verification: {0}")]
    WitnessRejected(String),
}

/// Runs `|sources|` rounds of the burning process.
pub fn simulate(g: &Graph, s: &BurningSchedule) -> Result<BurnMap, BurnError> {
    run(g, &[], s.sources())
}

/// Like [`simulate`], with every vertex of the preburn set burned in round 1.
pub fn simulate_modified(g: &Graph, m: &ModifiedSchedule) -> Result<BurnMap, BurnError> {
    run(g, m.preburn(), m.sources())
}

pub fn is_complete(bm: &BurnMap) -> bool {
    bm.is_complete()
}

fn run(g: &Graph, preburn: &[Vertex], sources: &[Vertex]) -> Result<BurnMap, BurnError> {
    let n = g.order();
    if let Some(&bad) = preburn.iter().chain(sources).find(|&&v| v >= n) {
        return Err(BurnError::InvalidSource(bad, n));
    }
    let mut rounds = vec![None; n];
    let mut frontier: Vec<Vertex> = Vec::new();
    for (i, &source) in sources.iter().enumerate() {
        let round = i + 1;
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if rounds[w].is_none() {
                    rounds[w] = Some(round);
                    next.push(w);
                }
            }
        }
        let placed = if round == 1 { preburn } else { &[] };
        for &v in placed.iter().chain(std::iter::once(&source)) {
            if rounds[v].is_none() {
                rounds[v] = Some(round);
                next.push(v);
            }
        }
        frontier = next;
    }
    Ok(BurnMap::from_rounds(rounds))
}
