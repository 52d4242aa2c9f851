//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture` to see
//! the report.

use std::time::{Duration, Instant};

use geodkit::construct::{
    build_diameter2, build_diameter4, embed_weighted_geodetic, verify_hamiltonian_cycle, Construction,
};
use geodkit::enumerate::{connected_graph_from_mask, enumerate_trees, pair_list, subset_count};
use geodkit::gallery;
use geodkit::graph::Graph;
use geodkit::paths::{diameter, oracle_is_antipodal, oracle_is_geodetic};
use geodkit::random::{
    random_connected_graph, random_odd_cactus, random_tree, random_weighted_graph, seeded_rng,
};
use geodkit::recognition::{check_antipodal_fast, check_geodetic_fast, check_weighted};
use geodkit::selftest::{
    assigned_weights_certified, block_lemma_holds, claw_free_characterization_holds, embedding_valid,
    floor_class_agrees, geodetic_is_c4_and_diamond_free, hereditarily_antipodal,
    locally_connected_geodetic_is_complete, min_degree_two_geodetic_has_two_antipodes, subdivision_preserves,
    tree_criterion_agrees, unique_length_two_geodesics, CheckResult,
};
use geodkit::structure::{verify_transversal_blocks, TransversalShape};
use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

const SEED: u64 = 20_240_601;

type Criterion = fn() -> (bool, String);

struct Outcome {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    /// `(n, mask, message)` of the smallest failing graph.
    first: Option<(usize, u64, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failures += other.failures;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if (a.0, a.1) <= (b.0, b.1) { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn ok(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    fn summary(&self) -> String {
        match &self.first {
            None => format!("{} graphs, 0 failures", self.checked),
            Some((_, _, msg)) => format!(
                "{} graphs, {} failures, first: {msg}",
                self.checked, self.failures
            ),
        }
    }
}

/// Every connected labeled graph on `1..=max_n` vertices, in parallel.
fn sweep(max_n: usize, check: impl Fn(&Graph) -> CheckResult + Sync) -> Tally {
    (1..=max_n)
        .map(|n| {
            let pairs = pair_list(n);
            (0..subset_count(n))
                .into_par_iter()
                .filter_map(|mask| connected_graph_from_mask(n, &pairs, mask).map(|g| (mask, g)))
                .map(|(mask, g)| match check(&g) {
                    Ok(()) => Tally {
                        checked: 1,
                        ..Tally::default()
                    },
                    Err(msg) => Tally {
                        checked: 1,
                        failures: 1,
                        first: Some((n, mask, msg)),
                    },
                })
                .reduce(Tally::default, Tally::merge)
        })
        .fold(Tally::default(), Tally::merge)
}

fn record(tally: &mut Tally, outcome: CheckResult) {
    tally.checked += 1;
    if let Err(msg) = outcome {
        tally.failures += 1;
        tally.first.get_or_insert((0, 0, msg));
    }
}

fn fail_text(what: &str, g: &Graph) -> String {
    format!(
        "{what}: {}",
        geodkit::graph::serialize_graph(g).replace('\n', ";")
    )
}

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let tally = sweep(6, |g| {
        let fast_geo = check_geodetic_fast(g).map_err(|e| e.to_string())?;
        let fast_anti = check_antipodal_fast(g).map_err(|e| e.to_string())?;
        let geo = oracle_is_geodetic(g).map_err(|e| e.to_string())?;
        let anti = oracle_is_antipodal(g).map_err(|e| e.to_string())?;
        if fast_geo.holds != geo.holds || fast_anti.holds != anti.holds {
            return Err(fail_text("verdicts differ", g));
        }
        Ok(())
    });
    let elapsed = start.elapsed();
    (
        tally.ok() && elapsed < Duration::from_secs(60),
        format!("{} in {:.1}s (limit 60s)", tally.summary(), elapsed.as_secs_f64()),
    )
}

fn criterion_2() -> (bool, String) {
    let mut rng = seeded_rng(SEED);
    let mut accepted: Vec<(String, Graph)> = Vec::new();
    accepted.extend((1..=8).map(|n| (format!("K{n}"), Graph::complete(n))));
    accepted.extend((1..=6).map(|k| (format!("C{}", 2 * k + 1), Graph::cycle(2 * k + 1))));
    for i in 0..50 {
        let n = rng.gen_range(1..=20);
        accepted.push((format!("tree #{i}"), random_tree(&mut rng, n)));
    }
    for i in 0..20 {
        let blocks = rng.gen_range(1..=6);
        accepted.push((format!("cactus #{i}"), random_odd_cactus(&mut rng, blocks)));
    }
    let rejected: Vec<(String, Graph)> = (2..=6)
        .map(|k| (format!("C{}", 2 * k), Graph::cycle(2 * k)))
        .collect();

    let mut wrong = Vec::new();
    for (name, g) in &accepted {
        let fast = check_geodetic_fast(g).map(|v| v.holds).unwrap_or(false);
        let oracle = oracle_is_geodetic(g).map(|v| v.holds).unwrap_or(false);
        if !(fast && oracle) {
            wrong.push(name.clone());
        }
    }
    for (name, g) in &rejected {
        let fast = check_geodetic_fast(g).map(|v| v.holds).unwrap_or(true);
        if fast || oracle_is_geodetic(g).map(|v| v.holds).unwrap_or(true) {
            wrong.push(name.clone());
        }
    }
    (
        wrong.is_empty(),
        format!(
            "{} accepted, {} rejected, misclassified: {:?}",
            accepted.len(),
            rejected.len(),
            wrong
        ),
    )
}

fn family_checks(c: &Construction, vertices: usize, degree: Option<usize>, diam: u32) -> Result<(), String> {
    let g = &c.graph;
    let mut problems = Vec::new();
    if g.vertex_count() != vertices {
        problems.push(format!("{} vertices", g.vertex_count()));
    }
    if let Some(d) = degree {
        if !(0..g.vertex_count()).all(|v| g.degree(v) == d) {
            problems.push(format!("not {d}-regular"));
        }
    }
    match diameter(g) {
        Ok(d) if d == BigUint::from(diam) => {}
        other => problems.push(format!("diameter {other:?}")),
    }
    if !check_geodetic_fast(g).map(|v| v.holds).unwrap_or(false) {
        problems.push("fast check rejects".into());
    }
    if !oracle_is_geodetic(g).map(|v| v.holds).unwrap_or(false) {
        problems.push("oracle rejects".into());
    }
    match &c.hamiltonian_cycle {
        Some(cycle) if verify_hamiltonian_cycle(g, cycle) => {}
        _ => problems.push("no valid Hamiltonian cycle".into()),
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(format!("{} q={}: {}", c.name, c.q, problems.join(", ")))
    }
}

fn family_criterion(
    build: fn(usize) -> geodkit::error::Result<Construction>,
    expected: &[(usize, usize, Option<usize>)],
    diam: u32,
    limit: Duration,
) -> (bool, String) {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for &(q, vertices, degree) in expected {
        match build(q)
            .map_err(|e| e.to_string())
            .and_then(|c| family_checks(&c, vertices, degree, diam))
        {
            Ok(()) => notes.push(format!("q={q}: {vertices} vertices ok")),
            Err(e) => {
                ok = false;
                notes.push(e);
            }
        }
    }
    let elapsed = start.elapsed();
    notes.push(format!(
        "{:.1}s (limit {}s)",
        elapsed.as_secs_f64(),
        limit.as_secs()
    ));
    (ok && elapsed < limit, notes.join("; "))
}

fn criterion_3() -> (bool, String) {
    family_criterion(
        build_diameter4,
        &[(2, 28, Some(3)), (3, 65, Some(4))],
        4,
        Duration::from_secs(120),
    )
}

fn criterion_4() -> (bool, String) {
    family_criterion(
        build_diameter2,
        &[(2, 13, None), (3, 25, None)],
        2,
        Duration::from_secs(30),
    )
}

fn criterion_5() -> (bool, String) {
    let tally = sweep(5, subdivision_preserves);
    (tally.ok(), tally.summary())
}

fn criterion_6() -> (bool, String) {
    let exhaustive = sweep(6, |g| assigned_weights_certified(g, true));
    let mut rng = seeded_rng(SEED);
    let mut random = Tally::default();
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.0..0.7);
        let g = random_connected_graph(&mut rng, n, density);
        record(&mut random, assigned_weights_certified(&g, false));
    }
    (
        exhaustive.ok() && random.ok(),
        format!(
            "exhaustive n<=6 with oracle: {}; random n<=12: {}",
            exhaustive.summary(),
            random.summary()
        ),
    )
}

fn criterion_7() -> (bool, String) {
    let mut rng = seeded_rng(SEED);
    let mut tally = Tally::default();
    let mut skipped = 0;
    while tally.checked < 100 {
        let n = rng.gen_range(2..=8);
        let density = rng.gen_range(0.0..0.6);
        let h = random_weighted_graph(&mut rng, n, density, 5);
        if !unique_length_two_geodesics(&h).unwrap() {
            skipped += 1;
            if embed_weighted_geodetic(&h).is_ok() {
                record(&mut tally, Err(fail_text("precondition violation accepted", &h)));
            }
            continue;
        }
        record(&mut tally, embedding_valid(&h));
    }
    (
        tally.ok(),
        format!(
            "{} ({skipped} draws violated the precondition and were rejected)",
            tally.summary()
        ),
    )
}

/// All labeled trees on `n` vertices from their Prüfer codes.
fn labeled_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![Graph::path(n)];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut index| {
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let d = index % n;
                    index /= n;
                    d
                })
                .collect();
            let mut degree = vec![1; n];
            for &c in &code {
                degree[c] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &c in &code {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, c));
                degree[leaf] -= 1;
                degree[c] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

fn criterion_8() -> (bool, String) {
    let mut unlabeled = Tally::default();
    for n in 1..=9 {
        for t in enumerate_trees(n).unwrap() {
            record(&mut unlabeled, tree_criterion_agrees(&t));
        }
    }
    let labeled = (1..=7)
        .flat_map(labeled_trees)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|t| {
            let mut one = Tally::default();
            record(&mut one, tree_criterion_agrees(t));
            one
        })
        .reduce(Tally::default, Tally::merge);
    (
        unlabeled.ok() && labeled.ok(),
        format!(
            "all trees up to isomorphism n<=9: {}; all labeled trees n<=7: {}",
            unlabeled.summary(),
            labeled.summary()
        ),
    )
}

fn criterion_9() -> (bool, String) {
    let floor = sweep(7, floor_class_agrees);
    let free = sweep(6, geodetic_is_c4_and_diamond_free);
    let survivors: Vec<Graph> = (1..=6)
        .flat_map(|n| {
            let pairs = pair_list(n);
            (0..subset_count(n))
                .into_par_iter()
                .filter_map(|mask| connected_graph_from_mask(n, &pairs, mask))
                .filter(|g| hereditarily_antipodal(g).unwrap())
                .collect::<Vec<_>>()
        })
        .collect();
    let only_p1_p2 = survivors == vec![Graph::path(1), Graph::path(2)];
    (
        floor.ok() && free.ok() && only_p1_p2,
        format!(
            "floor class vs forbidden search n<=7: {}; geodetic => C4/K4-e-free n<=6: {}; hereditarily antipodal n<=6: {} survivors {:?}",
            floor.summary(),
            free.summary(),
            survivors.len(),
            survivors.iter().map(Graph::vertex_count).collect::<Vec<_>>()
        ),
    )
}

fn transversality_ok(g: &Graph, root: usize) -> bool {
    verify_transversal_blocks(g, root)
        .map(|r| {
            r.applicable
                && r.all_transversal()
                && r.blocks
                    .iter()
                    .any(|b| matches!(b.shape, TransversalShape::Transversal { .. }))
        })
        .unwrap_or(false)
}

fn criterion_10() -> (bool, String) {
    let blocks = sweep(6, block_lemma_holds);
    let claw = sweep(6, claw_free_characterization_holds);
    let local = sweep(6, locally_connected_geodetic_is_complete);
    let antipodes = sweep(7, min_degree_two_geodetic_has_two_antipodes);
    let six_block = gallery::six_block_graph();
    let mut transversal = vec![(
        "six-block graph at 0".to_string(),
        transversality_ok(&six_block, 0),
    )];
    for n in [4, 5] {
        for root in 0..n {
            transversal.push((
                format!("K{n} at {root}"),
                transversality_ok(&Graph::complete(n), root),
            ));
        }
    }
    let bad: Vec<&String> = transversal
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect();
    (
        blocks.ok() && claw.ok() && local.ok() && antipodes.ok() && bad.is_empty(),
        format!(
            "block lemma n<=6: {}; claw-free n<=6: {}; locally connected n<=6: {}; min-degree-2 antipodes n<=7: {}; transversal: {} roots, failing {:?}",
            blocks.summary(),
            claw.summary(),
            local.summary(),
            antipodes.summary(),
            transversal.len(),
            bad
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(usize, &str, Criterion); 10] = [
        (1, "recogniser equivalence, n <= 6", criterion_1),
        (2, "named families accepted / even cycles rejected", criterion_2),
        (3, "diameter-4 Hamiltonian geodetic graphs, q = 2, 3", criterion_3),
        (4, "diameter-2 Hamiltonian geodetic graphs, q = 2, 3", criterion_4),
        (5, "subdivision preserves geodeticity, n <= 5", criterion_5),
        (6, "weight assignment geodetic and antipodal", criterion_6),
        (7, "weighted geodetic embedding", criterion_7),
        (8, "tree antipodality criterion, n <= 9", criterion_8),
        (9, "hereditary classes", criterion_9),
        (10, "structural theorems as properties", criterion_10),
    ];
    let mut outcomes = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let (passed, detail) = run();
        let outcome = Outcome {
            id,
            title,
            passed,
            detail,
            elapsed: start.elapsed(),
        };
        println!(
            "{} [{:>2}] {} ({:.1}s): {}",
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.id,
            outcome.title,
            outcome.elapsed.as_secs_f64(),
            outcome.detail
        );
        outcomes.push(outcome);
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed.len(),
        outcomes.len()
    );
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn weighted_recogniser_matches_oracle_on_assigned_weights() {
    // The weighted checker and the oracle agree on the n <= 6 slice even
    // when the two are run on the same weighted outputs independently.
    let tally = sweep(5, |g| {
        let w = geodkit::construct::assign_weights(g).map_err(|e| e.to_string())?;
        let fast = check_weighted(&w).map_err(|e| e.to_string())?;
        let geo = oracle_is_geodetic(&w).map_err(|e| e.to_string())?;
        let anti = oracle_is_antipodal(&w).map_err(|e| e.to_string())?;
        if fast.geodetic.holds == geo.holds && fast.antipodal.holds == anti.holds {
            Ok(())
        } else {
            Err(fail_text("weighted verdicts differ", g))
        }
    });
    assert!(tally.ok(), "{}", tally.summary());
}
