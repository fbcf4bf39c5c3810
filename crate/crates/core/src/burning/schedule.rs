use serde::{Deserialize, Serialize};

use super::BurnError;
use crate::graph::Vertex;

/// Ordered sources `(x_1, ..., x_k)`; round `i` places `x_i`. Repeats are
/// allowed and are no-ops once the vertex is burned.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSchedule", into = "RawSchedule")]
pub struct BurningSchedule {
    sources: Vec<Vertex>,
}

impl BurningSchedule {
    pub fn new(sources: Vec<Vertex>) -> Result<Self, BurnError> {
        if sources.is_empty() {
            return Err(BurnError::EmptySchedule);
        }
        Ok(Self { sources })
    }

    pub fn sources(&self) -> &[Vertex] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_sources(self) -> Vec<Vertex> {
        self.sources
    }

    /// Pads with repeats of the first source up to `len` rounds.
    pub fn padded(mut self, len: usize) -> Self {
        let first = self.sources[0];
        if self.sources.len() < len {
            self.sources.resize(len, first);
        }
        self
    }
}

/// A schedule whose round 1 additionally burns every vertex of `preburn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSchedule", into = "RawSchedule")]
pub struct ModifiedSchedule {
    preburn: Vec<Vertex>,
    sources: Vec<Vertex>,
}

impl ModifiedSchedule {
    /// `preburn` is stored sorted and deduplicated.
    pub fn new(mut preburn: Vec<Vertex>, sources: Vec<Vertex>) -> Result<Self, BurnError> {
        if sources.is_empty() {
            return Err(BurnError::EmptySchedule);
        }
        preburn.sort_unstable();
        preburn.dedup();
        Ok(Self { preburn, sources })
    }

    pub fn preburn(&self) -> &[Vertex] {
        &self.preburn
    }

    pub fn sources(&self) -> &[Vertex] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<BurningSchedule> for ModifiedSchedule {
    fn from(s: BurningSchedule) -> Self {
        Self {
            preburn: Vec::new(),
            sources: s.sources,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawSchedule {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    preburn: Vec<Vertex>,
    sources: Vec<Vertex>,
}

impl TryFrom<RawSchedule> for BurningSchedule {
    type Error = BurnError;

    fn try_from(raw: RawSchedule) -> Result<Self, BurnError> {
        if !raw.preburn.is_empty() {
            return Err(BurnError::UnexpectedPreburn);
        }
        Self::new(raw.sources)
    }
}

impl From<BurningSchedule> for RawSchedule {
    fn from(s: BurningSchedule) -> Self {
        Self {
            preburn: Vec::new(),
            sources: s.sources,
        }
    }
}

impl TryFrom<RawSchedule> for ModifiedSchedule {
    type Error = BurnError;

    fn try_from(raw: RawSchedule) -> Result<Self, BurnError> {
        Self::new(raw.preburn, raw.sources)
    }
}

impl From<ModifiedSchedule> for RawSchedule {
    fn from(s: ModifiedSchedule) -> Self {
        Self {
            preburn: s.preburn,
            sources: s.sources,
        }
    }
}

/// Burn round of every vertex after running a schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawBurnMap", into = "RawBurnMap")]
pub struct BurnMap {
    rounds: Vec<Option<usize>>,
}

impl BurnMap {
    pub(crate) fn from_rounds(rounds: Vec<Option<usize>>) -> Self {
        Self { rounds }
    }

    /// Burn round of `v` (1-based), `None` if it never burned.
    pub fn round(&self, v: Vertex) -> Option<usize> {
        self.rounds[v]
    }

    pub fn rounds(&self) -> &[Option<usize>] {
        &self.rounds
    }

    pub fn is_complete(&self) -> bool {
        self.rounds.iter().all(Option::is_some)
    }

    /// Round in which the last vertex burned; `None` while anything is unburned.
    pub fn completion(&self) -> Option<usize> {
        self.rounds
            .iter()
            .try_fold(0, |acc, r| r.map(|r| acc.max(r)))
    }
}

#[derive(Serialize, Deserialize)]
struct RawBurnMap {
    rounds: Vec<usize>,
    completion: usize,
}

impl From<RawBurnMap> for BurnMap {
    fn from(raw: RawBurnMap) -> Self {
        Self {
            rounds: raw
                .rounds
                .into_iter()
                .map(|r| (r != 0).then_some(r))
                .collect(),
        }
    }
}

impl From<BurnMap> for RawBurnMap {
    fn from(bm: BurnMap) -> Self {
        Self {
            completion: bm.completion().unwrap_or(0),
            rounds: bm.rounds.into_iter().map(|r| r.unwrap_or(0)).collect(),
        }
    }
}
