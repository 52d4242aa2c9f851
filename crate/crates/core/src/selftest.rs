// SPDX-License-Identifier: Apache-2.0

//! Equivalence sweeps: per-graph checks that compare a fast routine or a
//! structural characterisation with the brute-force oracles, and drivers
//! that run them over every small connected graph.

use num_bigint::BigUint;
use rand::Rng;

use crate::construct::{assign_weights, embed_weighted_geodetic, subdivide};
use crate::enumerate::{enumerate_connected_graphs, enumerate_trees};
use crate::error::{Error, Result};
use crate::graph::{serialize_graph, Graph};
use crate::paths::{oracle_is_antipodal, oracle_is_geodetic, shortest_path_counts};
use crate::random::{random_connected_graph, random_weighted_graph, seeded_rng};
use crate::recognition::{check_weighted, recognize};
use crate::structure::{
    antipode_counts, claw_free_geodetic_characterization, find_induced_star, geodetic_via_blocks,
    has_induced_c4_or_k4e, in_floor_geodetic, is_locally_connected, search_forbidden_even_structure,
    tree_antipodal_criterion,
};

/// `Err` carries a one-line description of the disagreement.
pub type CheckResult = std::result::Result<(), String>;

fn expect(cond: bool, g: &Graph, what: &str) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(format!("{what}: {}", serialize_graph(g).replace('\n', ";")))
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Fast recognisers equal the oracles, and every witness re-verifies.
pub fn recognizers_agree(g: &Graph) -> CheckResult {
    let fast = lib(recognize(g, false))?;
    let geo = lib(oracle_is_geodetic(g))?;
    let anti = lib(oracle_is_antipodal(g))?;
    expect(fast.geodetic.holds == geo.holds, g, "geodetic verdicts differ")?;
    expect(fast.antipodal.holds == anti.holds, g, "antipodal verdicts differ")?;
    for w in [&fast.geodetic.witness, &fast.antipodal.witness]
        .into_iter()
        .flatten()
    {
        expect(w.verify(g), g, "witness does not re-verify")?;
    }
    Ok(())
}

/// Weighted recogniser equals the oracles on a weighted graph.
pub fn weighted_recognizer_agrees(g: &Graph) -> CheckResult {
    let fast = lib(check_weighted(g))?;
    expect(
        fast.geodetic.holds == lib(oracle_is_geodetic(g))?.holds,
        g,
        "weighted geodetic verdicts differ",
    )?;
    expect(
        fast.antipodal.holds == lib(oracle_is_antipodal(g))?.holds,
        g,
        "weighted antipodal verdicts differ",
    )
}

/// A graph is geodetic iff each of its blocks is.
pub fn block_lemma_holds(g: &Graph) -> CheckResult {
    let blocks = lib(geodetic_via_blocks(g))?.holds;
    expect(
        blocks == lib(oracle_is_geodetic(g))?.holds,
        g,
        "block verdict differs",
    )
}

/// `G` is geodetic iff `G` with two vertices on every edge is.
pub fn subdivision_preserves(g: &Graph) -> CheckResult {
    let s = lib(subdivide(g, 2))?;
    let same = lib(oracle_is_geodetic(g))?.holds == lib(oracle_is_geodetic(&s))?.holds;
    expect(same, g, "subdivision changes geodeticity")
}

pub fn claw_free_characterization_holds(g: &Graph) -> CheckResult {
    let member = lib(claw_free_geodetic_characterization(g))?.member;
    let truth = lib(oracle_is_geodetic(g))?.holds && lib(find_induced_star(g, 3))?.is_none();
    expect(member == truth, g, "claw-free characterisation differs")
}

/// Block shapes decide membership in the largest hereditary geodetic
/// subclass exactly when the forbidden-structure search does.
pub fn floor_class_agrees(g: &Graph) -> CheckResult {
    let member = lib(in_floor_geodetic(g))?.member;
    let free = lib(search_forbidden_even_structure(g))?.is_none();
    expect(member == free, g, "block shapes and forbidden structures differ")
}

pub fn geodetic_is_c4_and_diamond_free(g: &Graph) -> CheckResult {
    if lib(oracle_is_geodetic(g))?.holds {
        expect(
            has_induced_c4_or_k4e(g).is_none(),
            g,
            "geodetic graph with induced C4 or K4-e",
        )?;
    }
    Ok(())
}

pub fn locally_connected_geodetic_is_complete(g: &Graph) -> CheckResult {
    if is_locally_connected(g) && lib(oracle_is_geodetic(g))?.holds {
        expect(
            g.is_complete(),
            g,
            "locally connected geodetic graph is not complete",
        )?;
    }
    Ok(())
}

pub fn min_degree_two_geodetic_has_two_antipodes(g: &Graph) -> CheckResult {
    let min_degree = (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap_or(0);
    if min_degree >= 2 && lib(recognize(g, false))?.geodetic.holds {
        let counts = lib(antipode_counts(g))?;
        expect(counts.iter().all(|&c| c >= 2), g, "vertex with a single antipode")?;
    }
    Ok(())
}

pub fn tree_criterion_agrees(t: &Graph) -> CheckResult {
    let criterion = lib(tree_antipodal_criterion(t))?.holds;
    expect(
        criterion == lib(oracle_is_antipodal(t))?.holds,
        t,
        "tree criterion differs",
    )
}

/// Weight assignment yields a weighted graph that both the fast checker
/// and the oracles certify geodetic and antipodal, over the same edges.
pub fn assigned_weights_certified(g: &Graph, with_oracle: bool) -> CheckResult {
    let w = lib(assign_weights(g))?;
    expect(
        w.unweighted() == g.unweighted(),
        g,
        "weights changed the edge set",
    )?;
    let fast = lib(check_weighted(&w))?;
    expect(
        fast.geodetic.holds && fast.antipodal.holds,
        g,
        "assigned weights not certified",
    )?;
    if with_oracle {
        expect(
            lib(oracle_is_geodetic(&w))?.holds && lib(oracle_is_antipodal(&w))?.holds,
            g,
            "oracle rejects assigned weights",
        )?;
    }
    Ok(())
}

/// No pair at distance exactly 2 is joined by two geodesics.
pub fn unique_length_two_geodesics(h: &Graph) -> Result<bool> {
    let two = BigUint::from(2u32);
    for u in 0..h.vertex_count() {
        let row = shortest_path_counts(h, u)?;
        if (0..h.vertex_count())
            .any(|v| row.dist[v].as_ref() == Some(&two) && row.count[v] > BigUint::from(1u32))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The embedding is geodetic, keeps `h` induced with its weights, and adds
/// only weights 1 and 2.
pub fn embedding_valid(h: &Graph) -> CheckResult {
    let g = lib(embed_weighted_geodetic(h))?;
    let n = h.vertex_count();
    expect(lib(oracle_is_geodetic(&g))?.holds, h, "embedding not geodetic")?;
    let ids: Vec<usize> = (0..n).collect();
    expect(
        g.induced_subgraph(&ids) == *h,
        h,
        "input not induced in the embedding",
    )?;
    let small = g
        .weighted_edges()
        .filter(|&(u, v, _)| u >= n || v >= n)
        .all(|(_, _, w)| *w == BigUint::from(1u32) || *w == BigUint::from(2u32));
    expect(small, h, "embedding added a weight other than 1 or 2")
}

/// Whether every connected induced subgraph (including `g`) is antipodal.
pub fn hereditarily_antipodal(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    for mask in 1u64..(1 << n) {
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&vertices);
        if sub.is_connected() && antipode_counts(&sub)?.iter().any(|&c| c != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SweepReport {
    fn new(name: impl Into<String>) -> Self {
        SweepReport {
            name: name.into(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, outcome: CheckResult) {
        self.checked += 1;
        if let Err(msg) = outcome {
            self.failures += 1;
            self.first_failure.get_or_insert(msg);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed() { "ok" } else { "FAILED" };
        let mut line = format!(
            "{verdict:<6} {:<50} {:>9} checked {:>4} failures",
            self.name, self.checked, self.failures
        );
        if let Some(first) = &self.first_failure {
            line.push_str(&format!("  first: {first}"));
        }
        line
    }
}

/// Runs `check` on every connected labeled graph with `1..=max_n` vertices.
pub fn sweep_connected(
    name: &str,
    max_n: usize,
    check: impl Fn(&Graph) -> CheckResult,
) -> Result<SweepReport> {
    let mut report = SweepReport::new(format!("{name} (n <= {max_n})"));
    for n in 1..=max_n {
        for g in enumerate_connected_graphs(n)? {
            report.record(check(&g));
        }
    }
    Ok(report)
}

type GraphCheck = fn(&Graph) -> CheckResult;

/// The full self-test: exhaustive sweeps up to `max_n` vertices (the
/// subdivision sweep stops at 6), trees up to `max_n + 2`, and seeded
/// random weighted sweeps.
pub fn run_selftest(max_n: usize, seed: u64) -> Result<Vec<SweepReport>> {
    if !(1..=crate::enumerate::MAX_ENUMERATION_N).contains(&max_n) {
        return Err(Error::InvalidArgument(format!(
            "--max-n must be between 1 and {}",
            crate::enumerate::MAX_ENUMERATION_N
        )));
    }
    let exhaustive: [(&str, GraphCheck); 8] = [
        ("fast recognisers vs oracles", recognizers_agree),
        ("block lemma", block_lemma_holds),
        ("claw-free characterisation", claw_free_characterization_holds),
        ("floor class vs forbidden structures", floor_class_agrees),
        (
            "geodetic => no induced C4 / K4-e",
            geodetic_is_c4_and_diamond_free,
        ),
        (
            "locally connected geodetic => complete",
            locally_connected_geodetic_is_complete,
        ),
        (
            "min degree 2 geodetic => 2 antipodes",
            min_degree_two_geodetic_has_two_antipodes,
        ),
        ("assigned weights certified", |g| {
            assigned_weights_certified(g, true)
        }),
    ];
    let mut reports = Vec::new();
    for (name, check) in exhaustive {
        reports.push(sweep_connected(name, max_n, check)?);
    }
    reports.push(sweep_connected(
        "subdivision preserves geodeticity",
        max_n.min(6),
        subdivision_preserves,
    )?);

    let tree_n = max_n + 2;
    let mut trees = SweepReport::new(format!("tree criterion vs oracle (n <= {tree_n})"));
    for n in 1..=tree_n {
        for t in enumerate_trees(n)? {
            trees.record(tree_criterion_agrees(&t));
        }
    }
    reports.push(trees);

    let mut rng = seeded_rng(seed);
    let mut weighted = SweepReport::new("weighted recogniser vs oracles (200 random)");
    let mut embedded = SweepReport::new("weighted embedding (100 random)");
    while weighted.checked < 200 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.0..0.6);
        let h = random_weighted_graph(&mut rng, n, density, 5);
        weighted.record(weighted_recognizer_agrees(&h));
        if embedded.checked < 100 && unique_length_two_geodesics(&h)? {
            embedded.record(embedding_valid(&h));
        }
    }
    reports.push(weighted);
    reports.push(embedded);

    let mut random_weights = SweepReport::new("assigned weights certified (200 random, n <= 12)");
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let density = rng.gen_range(0.0..0.7);
        let g = random_connected_graph(&mut rng, n, density);
        random_weights.record(assigned_weights_certified(&g, false));
    }
    reports.push(random_weights);
    Ok(reports)
}
