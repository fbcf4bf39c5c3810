//! Certified `⌈√n⌉`-round schedules for homeomorphically irreducible trees
//! (HITs), and `⌈√(n+d)⌉`-round schedules for arbitrary trees with `d`
//! degree-2 vertices.
//!
//! Every constructive step re-runs the burning simulation on its own output.
//! The underlying bounds are theorems, so a failed check is reported as an
//! error that points at an implementation bug rather than at the input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{
    simulate, simulate_modified, BurnError, BurnMap, BurningSchedule, ModifiedSchedule,
};
use crate::ceil_sqrt;
use crate::graph::{GraphError, Vertex};
use crate::tree::{Smoothing, Tree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HitError {
    #[error("tree has a degree-2 vertex")]
    NotAHit,
    #[error("anchor search needs at least 6 vertices, got {0}")]
    TooSmall(usize),
    #[error("base schedule does not burn the smoothed tree")]
    BaseScheduleIncomplete,
    #[error("lifted schedule failed verification: {0}")]
    LiftVerificationFailed(String),
    #[error("projected schedule failed verification: {0}")]
    ProjectionVerificationFailed(String),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Burn(#[from] BurnError),
}

/// A vertex `x` whose neighbor sides are all smaller than `threshold`, except
/// the side through the heavy neighbor, which leaves `|T_x(xy)| ≥ threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anchor {
    pub x: Vertex,
    /// All neighbors of `x`, light ones ascending, heavy neighbor last.
    pub neighbors: Vec<Vertex>,
    /// `2⌈√n⌉ - 1`.
    pub threshold: usize,
    /// `|T_v(xv)|` for each light neighbor, aligned with `neighbors`.
    pub light_sizes: Vec<usize>,
    /// `|T_x(xy)|` for the heavy neighbor `y`.
    pub heavy_size: usize,
    /// Vertices visited by the walk.
    pub steps: usize,
}

impl Anchor {
    pub fn heavy(&self) -> Vertex {
        *self.neighbors.last().unwrap()
    }
}

/// A schedule together with the bound it certifies and its simulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedPlan {
    pub bound: usize,
    pub schedule: BurningSchedule,
    pub verification: BurnMap,
}

impl CertifiedPlan {
    pub fn len(&self) -> usize {
        self.schedule.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Serialize, Deserialize)]
struct RawPlan {
    bound: usize,
    sources: Vec<Vertex>,
    rounds: Vec<usize>,
    completion: usize,
}

impl Serialize for CertifiedPlan {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        RawPlan {
            bound: self.bound,
            sources: self.schedule.sources().to_vec(),
            rounds: self
                .verification
                .rounds()
                .iter()
                .map(|r| r.unwrap_or(0))
                .collect(),
            completion: self.verification.completion().unwrap_or(0),
        }
        .serialize(ser)
    }
}

/// Walks from the lowest-id leaf towards any side of size `≥ 2⌈√n⌉ - 1`,
/// always stepping to the lowest such neighbor, until no side ahead is heavy.
pub fn find_anchor(t: &Tree) -> Result<Anchor, HitError> {
    let n = t.order();
    if n < 6 {
        return Err(HitError::TooSmall(n));
    }
    let threshold = 2 * ceil_sqrt(n) - 1;
    let sides = SideSizes::new(t);

    let leaf = t.leaves()[0];
    let mut from = leaf;
    let mut x = t.neighbors(leaf)[0];
    let mut steps = 1;
    while let Some(&next) = t
        .neighbors(x)
        .iter()
        .find(|&&v| v != from && sides.size(v, x) >= threshold)
    {
        from = x;
        x = next;
        steps += 1;
        if steps > n {
            return Err(HitError::Invariant("anchor walk did not terminate".into()));
        }
    }

    let mut neighbors: Vec<Vertex> = t.neighbors(x).iter().copied().filter(|&v| v != from).collect();
    let light_sizes: Vec<usize> = neighbors.iter().map(|&v| sides.size(v, x)).collect();
    neighbors.push(from);
    let anchor = Anchor {
        x,
        neighbors,
        threshold,
        light_sizes,
        heavy_size: sides.size(x, from),
        steps,
    };
    if anchor.heavy_size < threshold || anchor.light_sizes.iter().any(|&s| s >= threshold) {
        return Err(HitError::Invariant(format!("anchor {anchor:?} violates its size conditions")));
    }
    Ok(anchor)
}

/// `|T_v(uv)|` for every tree edge in O(1) after an O(n) rooting.
struct SideSizes {
    parent: Vec<Option<Vertex>>,
    subtree: Vec<usize>,
}

impl SideSizes {
    fn new(t: &Tree) -> Self {
        let n = t.order();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in t.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    stack.push(w);
                }
            }
        }
        let mut subtree = vec![1; n];
        for &u in order.iter().rev() {
            if let Some(p) = parent[u] {
                subtree[p] += subtree[u];
            }
        }
        Self { parent, subtree }
    }

    /// Size of the side containing `v` once edge `uv` is removed.
    fn size(&self, v: Vertex, u: Vertex) -> usize {
        if self.parent[v] == Some(u) {
            self.subtree[v]
        } else {
            self.subtree.len() - self.subtree[u]
        }
    }
}

/// Turns a complete schedule for `smooth(t, v)` into one for `t` that also
/// pre-burns `v`, with the same number of rounds.
pub fn lift_schedule(
    t: &Tree,
    v: Vertex,
    s: &BurningSchedule,
) -> Result<ModifiedSchedule, HitError> {
    let sm = t.smooth(v)?;
    lift_through(t, &sm, s)
}

fn lift_through(
    t: &Tree,
    sm: &Smoothing,
    s: &BurningSchedule,
) -> Result<ModifiedSchedule, HitError> {
    if !simulate(sm.tree.graph(), s)?.is_complete() {
        return Err(HitError::BaseScheduleIncomplete);
    }
    let sources = s.sources().iter().map(|&u| sm.to_original(u)).collect();
    let lifted = ModifiedSchedule::new(vec![sm.removed], sources)?;
    let bm = simulate_modified(t.graph(), &lifted)?;
    if !bm.is_complete() {
        return Err(HitError::LiftVerificationFailed(format!(
            "{lifted:?} leaves vertices unburned"
        )));
    }
    Ok(lifted)
}

/// Burns a HIT on `n` vertices within `⌈√n⌉` rounds.
///
/// Stars and the two smallest trees are handled directly. Otherwise the
/// anchor `x` is burned first: everything on its side lies within
/// `⌈√n⌉ - 1` steps of it, while the heavy neighbor `y` catches fire in
/// round 2. The remaining side `T_y(xy)` is solved recursively as a tree with
/// `y` pre-burned, smoothing `y` first when that leaves it with degree 2.
pub fn hit_schedule(t: &Tree) -> Result<CertifiedPlan, HitError> {
    if !t.is_hit() {
        return Err(HitError::NotAHit);
    }
    let n = t.order();
    let bound = ceil_sqrt(n);
    let schedule = match n {
        1 => BurningSchedule::new(vec![0])?,
        2 => BurningSchedule::new(vec![0, 1])?,
        4 | 5 => BurningSchedule::new(vec![t.internal_vertices()[0], t.leaves()[0]])?,
        _ => anchored_schedule(t, bound)?,
    };
    let verification = simulate(t.graph(), &schedule)?;
    if !verification.is_complete() || schedule.len() > bound {
        return Err(HitError::Invariant(format!(
            "plan {:?} for a HIT on {n} vertices does not burn it within {bound} rounds",
            schedule.sources()
        )));
    }
    Ok(CertifiedPlan {
        bound,
        schedule,
        verification,
    })
}

fn anchored_schedule(t: &Tree, bound: usize) -> Result<BurningSchedule, HitError> {
    let n = t.order();
    let anchor = find_anchor(t)?;
    let (x, y) = (anchor.x, anchor.heavy());

    let far_side = t.bridge_component(y, x)?;
    let measure = n + 1 - 2 * bound;
    if far_side.size() > measure || measure > (bound - 1) * (bound - 1) {
        return Err(HitError::Invariant(format!(
            "side of {y} has {} vertices, recursion measure {measure}, bound {bound}",
            far_side.size()
        )));
    }

    let sub = t.induced(&far_side.vertices)?;
    let local_y = sub.local_id(y).unwrap();
    let local_sources: Vec<Vertex> = if sub.tree.order() == 1 {
        vec![local_y]
    } else if sub.tree.degree(local_y) == 2 {
        let sm = sub.tree.smooth(local_y)?;
        let inner = hit_schedule(&sm.tree)?;
        lift_through(&sub.tree, &sm, &inner.schedule)?
            .sources()
            .to_vec()
    } else {
        let inner = hit_schedule(&sub.tree)?;
        let wrapped = ModifiedSchedule::new(vec![local_y], inner.schedule.into_sources())?;
        if !simulate_modified(sub.tree.graph(), &wrapped)?.is_complete() {
            return Err(HitError::Invariant("pre-burning broke a complete schedule".into()));
        }
        wrapped.sources().to_vec()
    };

    let near_side = t.bridge_component(x, y)?;
    let dist = t.graph().bfs_distances(x);
    let eccentricity = near_side
        .vertices
        .iter()
        .map(|&v| dist[v].unwrap())
        .max()
        .unwrap_or(0);
    if eccentricity + 1 > bound {
        return Err(HitError::Invariant(format!(
            "anchor {x} reaches its side in {eccentricity} steps, bound {bound}"
        )));
    }

    let mut sources = Vec::with_capacity(bound);
    sources.push(x);
    sources.extend(local_sources.into_iter().map(|v| sub.original[v]));
    Ok(BurningSchedule::new(sources)?.padded(eccentricity + 1))
}

/// A tree with one new leaf hung off every degree-2 vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub tree: Tree,
    /// `hosts[i]` is the vertex the added leaf `n + i` hangs from.
    pub hosts: Vec<Vertex>,
}

impl Augmentation {
    pub fn host_of(&self, v: Vertex) -> Option<Vertex> {
        let n = self.tree.order() - self.hosts.len();
        v.checked_sub(n).map(|i| self.hosts[i])
    }
}

pub fn augment_degree2(t: &Tree) -> Augmentation {
    let n = t.order();
    let hosts = t.degree_two_vertices();
    let edges: Vec<_> = t
        .graph()
        .edges()
        .chain(hosts.iter().enumerate().map(|(i, &h)| (h, n + i)))
        .collect();
    let tree = Tree::from_edges(n + hosts.len(), &edges).expect("adding leaves keeps a tree");
    Augmentation { tree, hosts }
}

/// Burns any tree with `d` degree-2 vertices within `⌈√(n+d)⌉` rounds by
/// planning on the augmented HIT and moving added-leaf sources to their hosts.
pub fn tree_schedule_via_augmentation(t: &Tree) -> Result<CertifiedPlan, HitError> {
    let aug = augment_degree2(t);
    let plan = hit_schedule(&aug.tree)?;
    let sources = plan
        .schedule
        .sources()
        .iter()
        .map(|&v| aug.host_of(v).unwrap_or(v))
        .collect();
    let schedule = BurningSchedule::new(sources)?;
    let bound = ceil_sqrt(aug.tree.order());
    let verification = simulate(t.graph(), &schedule)?;
    if !verification.is_complete() || schedule.len() > bound {
        return Err(HitError::ProjectionVerificationFailed(format!(
            "{:?} does not burn the tree within {bound} rounds",
            schedule.sources()
        )));
    }
    Ok(CertifiedPlan {
        bound,
        schedule,
        verification,
    })
}
