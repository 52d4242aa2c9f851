// SPDX-License-Identifier: Apache-2.0

//! Geodetic and antipodal recognition through bearing trees.
//!
//! A bearing tree is the breadth-first tree from a root, with each vertex
//! placed in the tier equal to its distance from the root. A graph is
//! geodetic exactly when, for every root, each vertex has a single neighbour
//! in the tier above it; it is antipodal exactly when, for every root, the
//! deepest tier holds a single vertex. One pass per root decides both, for
//! `O(n·m)` work overall.
//!
//! Weighted graphs use the same scheme with exact label-setting distances
//! as tiers: a vertex is ambiguous when two neighbours `u` satisfy
//! `tier[u] + w(u, v) == tier[v]`.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BearingTree<D = usize> {
    pub root: Vertex,
    /// `None` only at the root.
    pub parent: Vec<Option<Vertex>>,
    pub tier: Vec<D>,
}

impl<D> BearingTree<D> {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Children lists, each ascending.
    pub fn children(&self) -> Vec<Vec<Vertex>> {
        let mut children = vec![Vec::new(); self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                children[*p].push(v);
            }
        }
        children
    }

    pub fn is_tree_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// The tree path from the root down to `v`.
    pub fn path_from_root(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// Which of several equally short predecessors becomes the tree parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Ascending,
    Descending,
}

/// A non-tree edge whose endpoints share a tier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Balk<D = usize> {
    pub u: Vertex,
    pub v: Vertex,
    pub tier: D,
}

/// A root-to-leaf path of a bearing tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stem {
    pub vertices: Vec<Vertex>,
}

impl Stem {
    pub fn leaf(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecognitionReport<D = usize> {
    pub geodetic: Verdict,
    pub antipodal: Verdict,
    pub diameter: D,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trees: Option<Vec<BearingTree<D>>>,
}

/// What a single root contributes to the combined report.
struct RootPass<D> {
    tree: BearingTree<D>,
    /// Smallest vertex with two shortest-path predecessors, and the two
    /// smallest such predecessors.
    ambiguous: Option<(Vertex, [Vertex; 2])>,
    farthest: Vec<Vertex>,
}

fn bfs_tiers(g: &Graph, root: Vertex) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut tier = vec![usize::MAX; n];
    tier[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for v in g.neighbor_ids(u) {
            if tier[v] == usize::MAX {
                tier[v] = tier[u] + 1;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached != n {
        return Err(Error::Disconnected);
    }
    Ok(tier)
}

fn unweighted_pass(g: &Graph, root: Vertex, tie: TieBreak) -> Result<RootPass<usize>> {
    let tier = bfs_tiers(g, root)?;
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut ambiguous = None;
    for v in 0..n {
        if v == root {
            continue;
        }
        let mut preds = g.neighbor_ids(v).filter(|&u| tier[u] + 1 == tier[v]);
        let first = preds.next().expect("BFS tier has a predecessor");
        let second = preds.next();
        let last = preds.last().or(second).unwrap_or(first);
        parent[v] = Some(match tie {
            TieBreak::Ascending => first,
            TieBreak::Descending => last,
        });
        if let (None, Some(second)) = (ambiguous, second) {
            ambiguous = Some((v, [first, second]));
        }
    }
    let depth = tier.iter().copied().max().unwrap_or(0);
    let farthest = (0..n).filter(|&v| tier[v] == depth).collect();
    Ok(RootPass {
        tree: BearingTree { root, parent, tier },
        ambiguous,
        farthest,
    })
}

fn weighted_pass(g: &Graph, root: Vertex) -> Result<RootPass<BigUint>> {
    let n = g.vertex_count();
    let mut dist: Vec<Option<BigUint>> = vec![None; n];
    let mut done = vec![false; n];
    dist[root] = Some(BigUint::zero());
    let mut heap = BinaryHeap::from([Reverse((BigUint::zero(), root))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &(v, e) in g.neighbors(u) {
            let cand = &d + g.edge_weight(e);
            if dist[v].as_ref().is_none_or(|dv| cand < *dv) {
                dist[v] = Some(cand.clone());
                heap.push(Reverse((cand, v)));
            }
        }
    }
    if dist.iter().any(Option::is_none) {
        return Err(Error::Disconnected);
    }
    let tier: Vec<BigUint> = dist.into_iter().map(Option::unwrap).collect();
    let mut parent = vec![None; n];
    let mut ambiguous = None;
    for v in 0..n {
        if v == root {
            continue;
        }
        let mut preds = g
            .neighbors(v)
            .iter()
            .filter(|&&(u, e)| tier[u].clone() + g.edge_weight(e) == tier[v])
            .map(|&(u, _)| u);
        let first = preds.next().expect("settled vertex has a predecessor");
        parent[v] = Some(first);
        if let (None, Some(second)) = (ambiguous, preds.next()) {
            ambiguous = Some((v, [first, second]));
        }
    }
    let depth = tier.iter().max().cloned().unwrap_or_default();
    let farthest = (0..n).filter(|&v| tier[v] == depth).collect();
    Ok(RootPass {
        tree: BearingTree { root, parent, tier },
        ambiguous,
        farthest,
    })
}

fn check_root(g: &Graph, root: Vertex) -> Result<()> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    Ok(())
}

/// Breadth-first bearing tree; among equally short predecessors the
/// smallest id becomes the parent.
pub fn build_bearing_tree(g: &Graph, root: Vertex) -> Result<BearingTree> {
    build_bearing_tree_with(g, root, TieBreak::Ascending)
}

pub fn build_bearing_tree_with(g: &Graph, root: Vertex, tie: TieBreak) -> Result<BearingTree> {
    g.require_unweighted("build_bearing_tree")?;
    check_root(g, root)?;
    Ok(unweighted_pass(g, root, tie)?.tree)
}

/// Bearing tree whose tiers are exact weighted distances.
pub fn build_weighted_bearing_tree(g: &Graph, root: Vertex) -> Result<BearingTree<BigUint>> {
    check_root(g, root)?;
    Ok(weighted_pass(g, root)?.tree)
}

/// Splits the non-tree edges into balks (same tier) and violations (any
/// other tier relation). Geodetic graphs have no violations.
pub fn classify_non_tree_edges<D: PartialEq + Clone>(
    g: &Graph,
    t: &BearingTree<D>,
) -> (Vec<Balk<D>>, Vec<(Vertex, Vertex)>) {
    let mut balks = Vec::new();
    let mut violations = Vec::new();
    for &(u, v) in g.edges() {
        if t.is_tree_edge(u, v) {
            continue;
        }
        if t.tier[u] == t.tier[v] {
            balks.push(Balk {
                u,
                v,
                tier: t.tier[u].clone(),
            });
        } else {
            violations.push((u, v));
        }
    }
    (balks, violations)
}

/// One stem per leaf, ordered by leaf id. A one-vertex tree has a single
/// zero-length stem.
pub fn extract_stems<D>(t: &BearingTree<D>) -> Vec<Stem> {
    let children = t.children();
    (0..t.vertex_count())
        .filter(|&v| children[v].is_empty() && (v != t.root || t.vertex_count() == 1))
        .map(|leaf| Stem {
            vertices: t.path_from_root(leaf),
        })
        .collect()
}

fn merge_passes<D, I>(passes: I, keep_trees: bool) -> Result<RecognitionReport<D>>
where
    D: Ord + Clone + Default,
    I: Iterator<Item = Result<RootPass<D>>>,
{
    let mut geodetic = Verdict::holds();
    let mut antipodal = Verdict::holds();
    let mut diameter = D::default();
    let mut trees = keep_trees.then(Vec::new);
    for pass in passes {
        let pass = pass?;
        let root = pass.tree.root;
        if let (true, Some((vertex, predecessors))) = (geodetic.holds, pass.ambiguous) {
            geodetic = Verdict::fails(Witness::TwoPredecessors {
                root,
                vertex,
                predecessors,
            });
        }
        if antipodal.holds && pass.farthest.len() > 1 {
            antipodal = Verdict::fails(Witness::Antipodes {
                vertex: root,
                antipodes: pass.farthest,
            });
        }
        if let Some(depth) = pass.tree.tier.iter().max() {
            if *depth > diameter {
                diameter = depth.clone();
            }
        }
        if let Some(trees) = &mut trees {
            trees.push(pass.tree);
        }
    }
    Ok(RecognitionReport {
        geodetic,
        antipodal,
        diameter,
        trees,
    })
}

/// Both verdicts from a single bearing-tree sweep over every root.
pub fn recognize(g: &Graph, keep_trees: bool) -> Result<RecognitionReport> {
    g.require_unweighted("recognize")?;
    g.require_connected()?;
    merge_passes(
        (0..g.vertex_count()).map(|r| unweighted_pass(g, r, TieBreak::Ascending)),
        keep_trees,
    )
}

pub fn check_geodetic_fast(g: &Graph) -> Result<Verdict> {
    Ok(recognize(g, false)?.geodetic)
}

/// Unweighted graphs go through the BFS sweep, weighted ones through the
/// label-setting sweep.
pub fn check_antipodal_fast(g: &Graph) -> Result<Verdict> {
    if g.is_weighted() {
        return Ok(check_weighted(g)?.antipodal);
    }
    Ok(recognize(g, false)?.antipodal)
}

/// Weighted recognition; unweighted graphs are treated as all-ones.
pub fn check_weighted(g: &Graph) -> Result<RecognitionReport<BigUint>> {
    check_weighted_with(g, false)
}

pub fn check_weighted_with(g: &Graph, keep_trees: bool) -> Result<RecognitionReport<BigUint>> {
    g.require_connected()?;
    merge_passes((0..g.vertex_count()).map(|r| weighted_pass(g, r)), keep_trees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::paths::{oracle_is_antipodal, oracle_is_geodetic};

    /// Hexagon 1..6 with chord 2-4 and the chord 3-6 subdivided by 7,
    /// relabelled to `0..7`.
    pub(crate) fn balk_figure() -> Graph {
        Graph::new(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (1, 3),
                (2, 6),
                (6, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn c5_tiers() {
        let t = build_bearing_tree(&Graph::cycle(5), 0).unwrap();
        assert_eq!(t.tier, vec![0, 1, 2, 2, 1]);
        let mut sorted = t.tier.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 1, 2, 2]);
    }

    #[test]
    fn balk_figure_has_three_balks() {
        let g = balk_figure();
        let t = build_bearing_tree(&g, 0).unwrap();
        assert_eq!(t.tier, vec![0, 1, 2, 2, 2, 1, 2]);
        let (balks, violations) = classify_non_tree_edges(&g, &t);
        assert!(violations.is_empty());
        let pairs: Vec<_> = balks.iter().map(|b| (b.u, b.v, b.tier)).collect();
        assert_eq!(pairs, vec![(2, 3, 2), (2, 6, 2), (3, 4, 2)]);
    }

    #[test]
    fn k4_has_one_tier_one_layer() {
        let t = build_bearing_tree(&Graph::complete(4), 2).unwrap();
        assert_eq!(t.tier.iter().filter(|&&k| k == 1).count(), 3);
    }

    #[test]
    fn c4_shows_two_parents_not_a_violation() {
        let g = Graph::cycle(4);
        let t = build_bearing_tree(&g, 0).unwrap();
        let (balks, violations) = classify_non_tree_edges(&g, &t);
        assert!(balks.is_empty());
        assert_eq!(violations, vec![(2, 3)]);
        assert_eq!(
            check_geodetic_fast(&g).unwrap().witness,
            Some(Witness::TwoPredecessors {
                root: 0,
                vertex: 2,
                predecessors: [1, 3]
            })
        );
    }

    #[test]
    fn trees_have_no_non_tree_edges() {
        let g = parse_graph("6\n0 1\n1 2\n1 3\n3 4\n3 5").unwrap();
        let t = build_bearing_tree(&g, 4).unwrap();
        let (balks, violations) = classify_non_tree_edges(&g, &t);
        assert!(balks.is_empty() && violations.is_empty());
    }

    #[test]
    fn petersen_is_geodetic() {
        let g = Graph::petersen();
        assert!(oracle_is_geodetic(&g).unwrap().holds);
        assert!(check_geodetic_fast(&g).unwrap().holds);
    }

    #[test]
    fn even_cycle_is_rejected() {
        let v = check_geodetic_fast(&Graph::cycle(6)).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().verify(&Graph::cycle(6)));
    }

    #[test]
    fn antipodal_examples() {
        assert!(check_antipodal_fast(&Graph::cycle(6)).unwrap().holds);
        let k3 = check_antipodal_fast(&Graph::complete(3)).unwrap();
        assert_eq!(
            k3.witness,
            Some(Witness::Antipodes {
                vertex: 0,
                antipodes: vec![1, 2]
            })
        );
    }

    #[test]
    fn weighted_examples() {
        let fig =
            parse_graph("8\n0 1 1\n1 2 2\n2 3 4\n3 4 8\n4 5 16\n5 6 32\n6 7 64\n0 7 128\n4 7 128").unwrap();
        let report = check_weighted(&fig).unwrap();
        assert!(report.geodetic.holds && report.antipodal.holds);

        let square = check_weighted(&Graph::cycle(4)).unwrap();
        assert!(!square.geodetic.holds);

        let skewed = parse_graph("4\n0 1 1\n1 2 2\n2 3 4\n3 0 8").unwrap();
        assert!(check_weighted(&skewed).unwrap().geodetic.holds);
        assert!(oracle_is_geodetic(&skewed).unwrap().holds);
    }

    #[test]
    fn weighted_witness_reverifies() {
        let g = parse_graph("4\n0 1 1\n1 2 2\n2 3 1\n0 3 2").unwrap();
        let report = check_weighted(&g).unwrap();
        let w = report.geodetic.witness.unwrap();
        assert!(w.verify(&g));
        assert!(!report.antipodal.holds || oracle_is_antipodal(&g).unwrap().holds);
    }

    #[test]
    fn stems_of_the_five_stem_tree() {
        // root 0; leaves 1, 3, 5, 7, 8
        let g = parse_graph("9\n0 1\n0 2\n0 4\n2 3\n4 5\n4 6\n6 7\n6 8").unwrap();
        let t = build_bearing_tree(&g, 0).unwrap();
        let stems = extract_stems(&t);
        let mut lengths: Vec<usize> = stems.iter().map(Stem::len).collect();
        lengths.sort();
        assert_eq!(lengths, vec![1, 2, 2, 3, 3]);
        assert_eq!(stems[3].vertices, vec![0, 4, 6, 7]);
    }

    #[test]
    fn star_and_path_stems() {
        let star = build_bearing_tree(&Graph::star(4), 0).unwrap();
        assert_eq!(extract_stems(&star).len(), 4);
        let path = build_bearing_tree(&Graph::path(5), 0).unwrap();
        assert_eq!(extract_stems(&path).len(), 1);
    }

    #[test]
    fn bearing_tree_rejects_weighted_input() {
        let g = parse_graph("2\n0 1 5").unwrap();
        assert!(matches!(build_bearing_tree(&g, 0), Err(Error::WeightedInput(_))));
        assert!(matches!(check_geodetic_fast(&g), Err(Error::WeightedInput(_))));
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(check_geodetic_fast(&g), Err(Error::Disconnected)));
        assert!(matches!(check_weighted(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn diameter_is_reported() {
        let r = recognize(&Graph::cycle(7), true).unwrap();
        assert_eq!(r.diameter, 3);
        assert_eq!(r.trees.unwrap().len(), 7);
    }
}
