//! Bound comparison runs over tree families.
//!
//! Each row records the `⌈√n⌉` bound (HITs only), the leaf-augmentation
//! bound `⌈√(n+d)⌉`, the competing closed-form bound `⌈√(n+d+8)⌉ - 1`, the
//! length of the certified plan, and the exact burning number where the
//! solver is feasible.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burning::{burning_number_exact_with, ExactConfig};
use crate::ceil_sqrt;
use crate::generate::{Family, GenerateError};
use crate::hit::tree_schedule_via_augmentation;
use crate::tree::Tree;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("bad bench spec: {0}")]
    BadSpec(String),
    #[error("row {instance} violates its bounds: {detail}")]
    Violation { instance: String, detail: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Families, size grid and seeds. Deterministic families ignore the seeds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSpec {
    pub families: Vec<String>,
    pub sizes: Vec<usize>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    /// Largest order handed to the exact solver.
    #[serde(default = "default_exact_limit")]
    pub exact_limit: usize,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

fn default_exact_limit() -> usize {
    24
}

pub const TREE_FAMILIES: &[&str] = &["path", "star", "random_tree", "random_hit"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub family: String,
    pub size: usize,
    pub n: usize,
    pub d: usize,
    pub exact_b: Option<usize>,
    pub plan_len: Option<usize>,
    pub bound_hit: Option<usize>,
    pub bound_cor8: usize,
    pub bound_das: usize,
    pub plan_us: Option<u128>,
    pub exact_us: Option<u128>,
    pub error: Option<String>,
}

impl BenchRecord {
    fn check(&self) -> Result<(), String> {
        if let Some(len) = self.plan_len {
            if len > self.bound_cor8 {
                return Err(format!("plan length {len} > ⌈√(n+d)⌉ = {}", self.bound_cor8));
            }
            if let Some(b) = self.bound_hit.filter(|&b| len > b) {
                return Err(format!("plan length {len} > ⌈√n⌉ = {b}"));
            }
            if let Some(b) = self.exact_b.filter(|&b| b > len) {
                return Err(format!("exact burning number {b} > plan length {len}"));
            }
        }
        Ok(())
    }
}

/// `⌈√(n+d)⌉`, from hanging a leaf on each degree-2 vertex.
pub fn bound_augmented(n: usize, d: usize) -> usize {
    ceil_sqrt(n + d)
}

/// `⌈√(n+d+8)⌉ - 1`.
pub fn bound_das(n: usize, d: usize) -> usize {
    ceil_sqrt(n + d + 8) - 1
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub rows: usize,
    pub cor8_le_das: usize,
    pub cor8_gt_das: usize,
    /// Largest `plan_len - exact_b` among rows with both values.
    pub max_slack: Option<usize>,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// Keyed by requested size.
    pub summary: BTreeMap<usize, SizeSummary>,
}

impl BenchReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), BenchError> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.records {
            w.serialize(r)?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>6} {:>6} {:>12} {:>12} {:>10} {:>7}", "size", "rows", "cor8<=das", "cor8>das", "max_slack", "errors")?;
        for (size, s) in &self.summary {
            let slack = s.max_slack.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                f,
                "{size:>6} {:>6} {:>12} {:>12} {slack:>10} {:>7}",
                s.rows, s.cor8_le_das, s.cor8_gt_das, s.errors
            )?;
        }
        Ok(())
    }
}

fn family_for(name: &str, size: usize, seed: u64) -> Family {
    match name {
        "path" => Family::Path(size),
        "star" => Family::Star(size),
        "random_tree" => Family::RandomTree { n: size, seed },
        _ => Family::RandomHit { n: size, seed },
    }
}

/// Runs every (family, size, seed) instance, in parallel, and returns rows in
/// spec order. Solver failures are recorded on their row; a row whose plan
/// breaks its own bounds aborts the run.
pub fn run_bench(spec: &BenchSpec) -> Result<BenchReport, BenchError> {
    if let Some(f) = spec.families.iter().find(|f| !TREE_FAMILIES.contains(&f.as_str())) {
        return Err(BenchError::BadSpec(format!(
            "family {f:?} is not a tree family (expected one of {TREE_FAMILIES:?})"
        )));
    }
    let mut instances = Vec::new();
    for family in &spec.families {
        let seeded = family.starts_with("random");
        for &size in &spec.sizes {
            let seeds: &[u64] = if seeded { &spec.seeds } else { &[0] };
            for &seed in seeds {
                instances.push((family.clone(), size, family_for(family, size, seed)));
            }
        }
    }
    let exact = ExactConfig {
        max_order: spec.exact_limit,
    };
    let records: Vec<BenchRecord> = instances
        .par_iter()
        .map(|(family, size, fam)| bench_row(family, *size, fam, &exact))
        .collect();

    let mut summary: BTreeMap<usize, SizeSummary> = BTreeMap::new();
    for r in &records {
        r.check().map_err(|detail| BenchError::Violation {
            instance: r.instance.clone(),
            detail,
        })?;
        let s = summary.entry(r.size).or_default();
        s.rows += 1;
        if r.error.is_some() {
            s.errors += 1;
        }
        if r.n > 0 {
            if r.bound_cor8 <= r.bound_das {
                s.cor8_le_das += 1;
            } else {
                s.cor8_gt_das += 1;
            }
        }
        if let (Some(len), Some(b)) = (r.plan_len, r.exact_b) {
            s.max_slack = Some(s.max_slack.unwrap_or(0).max(len - b));
        }
    }
    Ok(BenchReport { records, summary })
}

fn bench_row(family: &str, size: usize, fam: &Family, exact: &ExactConfig) -> BenchRecord {
    let mut rec = BenchRecord {
        instance: fam.to_string(),
        family: family.to_string(),
        size,
        n: 0,
        d: 0,
        exact_b: None,
        plan_len: None,
        bound_hit: None,
        bound_cor8: 0,
        bound_das: 0,
        plan_us: None,
        exact_us: None,
        error: None,
    };
    let tree = match fam.generate().and_then(|g| Tree::new(g).map_err(GenerateError::from)) {
        Ok(t) => t,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    rec.n = tree.order();
    rec.d = tree.degree_two_vertices().len();
    rec.bound_cor8 = bound_augmented(rec.n, rec.d);
    rec.bound_das = bound_das(rec.n, rec.d);
    rec.bound_hit = (rec.d == 0).then(|| ceil_sqrt(rec.n));

    let start = Instant::now();
    match tree_schedule_via_augmentation(&tree) {
        Ok(plan) => {
            rec.plan_len = Some(plan.len());
            rec.plan_us = Some(start.elapsed().as_micros());
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    if rec.n <= exact.max_order {
        let start = Instant::now();
        match burning_number_exact_with(tree.graph(), exact) {
            Ok(sol) => {
                rec.exact_b = Some(sol.k);
                rec.exact_us = Some(start.elapsed().as_micros());
            }
            Err(e) => rec.error = Some(e.to_string()),
        }
    }
    rec
}
