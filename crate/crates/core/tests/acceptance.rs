//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use burnkit::bench::{bound_augmented, bound_das, run_bench, BenchSpec};
use burnkit::catalog::{connected_graphs, series_reduced_trees};
use burnkit::generate::{random_hit, random_tree};
use burnkit::spanning::{burning_number_via_spanning_trees, SpanningConfig};
use burnkit::{
    burning_number_exact, ceil_sqrt, find_anchor, hit_schedule, lift_schedule,
    modified_burning_number_exact, simulate, simulate_modified, tree_schedule_via_augmentation,
    BurningSchedule, ModifiedSchedule,
};
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn known_values() -> Outcome {
    let b = |g: &burnkit::Graph| burning_number_exact(g).map(|s| s.k).map_err(|e| e.to_string());
    let p4 = b(&path(4))?;
    let pet = b(&petersen())?;
    let hit = b(eight_vertex_hit().graph())?;
    ensure((p4, pet, hit) == (2, 3, 3), || format!("got b(P4)={p4}, b(Petersen)={pet}, b(HIT)={hit}"))?;
    let bm = simulate(&path(4), &BurningSchedule::new(vec![1, 3]).unwrap()).unwrap();
    let rounds: Vec<_> = bm.rounds().iter().map(|r| r.unwrap_or(0)).collect();
    ensure(rounds == [2, 1, 2, 2], || format!("P4 rounds {rounds:?}"))?;
    Ok("b(P4)=2, b(Petersen)=3, b(HIT8)=3, P4 rounds [2,1,2,2]".into())
}

fn path_law() -> Outcome {
    for n in 1..=36 {
        let k = burning_number_exact(&path(n)).map_err(|e| e.to_string())?.k;
        ensure(k == ceil_sqrt(n), || format!("b(P{n}) = {k}"))?;
    }
    Ok("b(P_n) = ceil(sqrt n) for n in 1..=36".into())
}

fn check_hit_plan(t: &burnkit::Tree, exact: bool) -> Result<(), String> {
    let n = t.order();
    let plan = hit_schedule(t).map_err(|e| format!("n {n}: {e}"))?;
    let bm = simulate(t.graph(), &plan.schedule).unwrap();
    ensure(bm.is_complete() && plan.len() <= ceil_sqrt(n), || {
        format!("n {n}: plan {:?} fails", plan.schedule.sources())
    })?;
    if exact {
        let k = burning_number_exact(t.graph()).map_err(|e| e.to_string())?.k;
        ensure(k <= plan.len(), || format!("n {n}: exact {k} > plan {}", plan.len()))?;
    }
    Ok(())
}

fn hit_plans() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=16 {
        for t in series_reduced_trees(n) {
            check_hit_plan(&t, true)?;
            exhaustive += 1;
        }
    }
    let mut rng = rng(0x5eed_0003);
    for _ in 0..500 {
        let n = loop {
            let n = rng.random_range(1..=500);
            if n != 3 {
                break n;
            }
        };
        let t = random_hit(n, rng.random()).map_err(|e| e.to_string())?;
        check_hit_plan(&t, n <= 24)?;
    }
    Ok(format!("{exhaustive} catalog HITs (n<=16) + 500 random HITs (n<=500)"))
}

fn anchor_soundness() -> Outcome {
    let mut rng = rng(0x5eed_0004);
    for _ in 0..1000 {
        let n = rng.random_range(6..=300);
        let t = random_tree(n, rng.random()).map_err(|e| e.to_string())?;
        let a = find_anchor(&t).map_err(|e| format!("n {n}: {e}"))?;
        let tau = 2 * ceil_sqrt(n) - 1;
        let y = a.heavy();
        ensure(t.neighbors(a.x).contains(&y), || format!("n {n}: {y} not adjacent to {}", a.x))?;
        ensure(side_size(&t, a.x, y) >= tau, || format!("n {n}: heavy side too small"))?;
        for &v in t.neighbors(a.x).iter().filter(|&&v| v != y) {
            ensure(side_size(&t, v, a.x) < tau, || format!("n {n}: light side at {v} too big"))?;
        }
    }
    Ok("1000 random trees, 6 <= n <= 300".into())
}

fn internal_bound() -> Outcome {
    // Internal counts are only defined from two vertices up.
    let mut total = 0;
    for size in 2..=23 {
        let m = (size + 2) / 2;
        for t in series_reduced_trees(size) {
            ensure(t.internal_vertex_count() + 2 <= m, || {
                format!("|T|={size}: {} internal vertices", t.internal_vertex_count())
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} HITs with 2 <= |T| <= 23"))
}

fn lift_schedules() -> Outcome {
    let mut rng = rng(0x5eed_0006);
    let mut lifted = 0;
    for _ in 0..300 {
        let size = rng.random_range(2..=12);
        let (t, v) = subdivided_hit(&mut rng, size);
        let smoothed = t.smooth(v).map_err(|e| e.to_string())?;
        let t2 = &smoothed.tree;
        let exact = burning_number_exact(t2.graph()).map_err(|e| e.to_string())?;
        let mut found = vec![exact.witness.clone()];
        found.push(hit_schedule(t2).map_err(|e| e.to_string())?.schedule);
        found.push(tree_schedule_via_augmentation(t2).map_err(|e| e.to_string())?.schedule);
        let padded: Vec<_> = (0..3).map(|_| rng.random_range(0..t2.order())).collect();
        found.push(BurningSchedule::new([exact.witness.sources(), &padded].concat()).unwrap());
        for s in found {
            let m = lift_schedule(&t, v, &s).map_err(|e| e.to_string())?;
            let ok = m.len() == s.len() && simulate_modified(t.graph(), &m).unwrap().is_complete();
            ensure(ok, || format!("lift of {:?} failed", s.sources()))?;
            lifted += 1;
        }
        let modified = modified_burning_number_exact(t.graph(), &[v]).map_err(|e| e.to_string())?.k;
        ensure(modified <= exact.k, || format!("b^U(T) = {modified} > b(T') = {}", exact.k))?;
    }
    Ok(format!("300 subdivided HITs, {lifted} schedules lifted"))
}

fn spanning_equality() -> Outcome {
    let cfg = SpanningConfig::default();
    let check = |g: &burnkit::Graph| -> Result<(), String> {
        let via = burning_number_via_spanning_trees(g, &cfg).map_err(|e| e.to_string())?;
        let (b, _) = naive_burning_number(g, &[]);
        ensure(via.k == b, || format!("min over spanning trees {} != b(G) {b}", via.k))?;
        let bm = simulate(via.tree.graph(), &via.schedule).unwrap();
        ensure(bm.completion() == Some(via.k), || "witness tree schedule".into())
    };
    let mut catalog = 0;
    for n in 1..=7 {
        for g in connected_graphs(n) {
            check(&g)?;
            catalog += 1;
        }
    }
    let mut rng = rng(0x5eed_0007);
    for _ in 0..200 {
        let n = rng.random_range(1..=7);
        let p = rng.random_range(0.0..0.6);
        check(&random_connected(&mut rng, n, p))?;
    }
    Ok(format!("{catalog} catalog graphs (n<=7) + 200 random"))
}

fn augmentation_bound() -> Outcome {
    let mut rng = rng(0x5eed_0008);
    for _ in 0..300 {
        let n = rng.random_range(1..=100);
        let t = random_tree(n, rng.random()).map_err(|e| e.to_string())?;
        let d = t.degree_two_vertices().len();
        let plan = tree_schedule_via_augmentation(&t).map_err(|e| e.to_string())?;
        let ok = plan.len() <= ceil_sqrt(n + d)
            && simulate(t.graph(), &plan.schedule).unwrap().is_complete();
        ensure(ok, || format!("n {n}, d {d}: plan {:?}", plan.schedule.sources()))?;
    }
    let spec = BenchSpec {
        families: vec!["path".into()],
        sizes: vec![100],
        seeds: vec![0],
        exact_limit: 0,
    };
    let report = run_bench(&spec).map_err(|e| e.to_string())?;
    let row = &report.records[0];
    let got = (row.n, row.d, row.bound_das, row.bound_cor8);
    ensure(got == (100, 98, 14, 15), || format!("P100 row {got:?}"))?;
    ensure(bound_das(100, 98) < bound_augmented(100, 98), || "crossover".into())?;
    ensure(report.summary[&100].cor8_gt_das == 1, || "summary".into())?;
    Ok("300 random trees n<=100; P100 das 14 vs cor8 15".into())
}

fn oracle_identity() -> Outcome {
    let mut rng = rng(0x5eed_0009);
    for i in 0..10_000 {
        let n = rng.random_range(1..=30);
        let p = rng.random_range(0.0..0.3);
        let g = random_connected(&mut rng, n, p);
        let len = rng.random_range(1..=8);
        let sources: Vec<_> = (0..len).map(|_| rng.random_range(0..n)).collect();
        let bm = simulate(&g, &BurningSchedule::new(sources.clone()).unwrap()).unwrap();
        ensure(bm.rounds() == closed_form_rounds(&g, &[], &sources), || {
            format!("pair {i}: sources {sources:?}")
        })?;
        if i % 2 == 0 {
            let preburn: Vec<_> = (0..rng.random_range(0..3)).map(|_| rng.random_range(0..n)).collect();
            let m = ModifiedSchedule::new(preburn.clone(), sources.clone()).unwrap();
            let bm = simulate_modified(&g, &m).unwrap();
            ensure(bm.rounds() == closed_form_rounds(&g, &preburn, &sources), || {
                format!("pair {i}: preburn {preburn:?} sources {sources:?}")
            })?;
        }
    }
    Ok("10000 random (graph, schedule) pairs".into())
}

fn exact_vs_naive() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for g in labeled_connected_graphs(n) {
            let sol = burning_number_exact(&g).map_err(|e| e.to_string())?;
            let (k, seq) = naive_burning_number(&g, &[]);
            ensure(sol.k == k && sol.witness.sources() == seq, || {
                format!("{:?}: solver ({}, {:?}) naive ({k}, {seq:?})", g.edges().collect::<Vec<_>>(), sol.k, sol.witness.sources())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} labeled connected graphs, n <= 6, value and witness"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("known small values", known_values),
        ("path law", path_law),
        ("HIT plans within ceil(sqrt n)", hit_plans),
        ("anchor soundness", anchor_soundness),
        ("internal vertex bound", internal_bound),
        ("lift of smoothed schedules", lift_schedules),
        ("spanning tree equality", spanning_equality),
        ("augmentation bound and crossover", augmentation_bound),
        ("closed-form oracle identity", oracle_identity),
        ("exact solver vs naive enumeration", exact_vs_naive),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
