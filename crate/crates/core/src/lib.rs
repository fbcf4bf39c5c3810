//! Graph burning toolkit.
//!
//! Simulates the burning process, computes exact burning numbers for small
//! graphs, and builds simulation-certified schedules for trees: within
//! `⌈√n⌉` rounds for trees without degree-2 vertices, within `⌈√(n+d)⌉`
//! rounds for trees with `d` of them, and for any graph with such a spanning
//! tree.

pub mod bench;
pub mod burning;
pub mod catalog;
pub mod generate;
pub mod graph;
pub mod hit;
pub mod spanning;
pub mod tree;

pub use burning::{
    burning_number_exact, burning_number_exact_with, is_complete, modified_burning_number_exact,
    modified_burning_number_exact_with, simulate, simulate_modified, BurnError, BurnMap,
    BurningSchedule, ExactConfig, ExactSolution, ModifiedSchedule,
};
pub use graph::{Graph, GraphError, Vertex};
pub use hit::{
    augment_degree2, find_anchor, hit_schedule, lift_schedule, tree_schedule_via_augmentation,
    Anchor, Augmentation, CertifiedPlan, HitError,
};
pub use tree::{BridgeSide, Smoothing, Subtree, Tree};

/// Smallest `r` with `r * r >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}
