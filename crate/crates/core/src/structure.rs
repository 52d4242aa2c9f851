// SPDX-License-Identifier: Apache-2.0

//! Structural characterisations: block decomposition, block-shape based
//! class membership, induced-subgraph searches, the tree antipodality
//! criterion, antipode counts and bearing-tree transversality of blocks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::paths::{bfs_distances, farthest_vertices, hop_distance_matrix};
use crate::recognition::{build_bearing_tree, check_geodetic_fast, check_weighted, extract_stems};
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub cut_vertices: Vec<Vertex>,
    /// Each block's vertices ascending; blocks in lexicographic order.
    pub blocks: Vec<Vec<Vertex>>,
}

/// Biconnected components via an iterative Hopcroft–Tarjan pass over an
/// edge stack. Isolated vertices form one-vertex blocks.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut clock = 0;
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();

    for start in 0..n {
        if disc[start] != UNSEEN {
            continue;
        }
        disc[start] = clock;
        low[start] = clock;
        clock += 1;
        if g.degree(start) == 0 {
            blocks.push(vec![start]);
            continue;
        }
        let mut root_children = 0;
        // (vertex, edge to its DFS parent, next neighbour slot)
        let mut stack: Vec<(Vertex, usize, usize)> = vec![(start, UNSEEN, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, slot) = *top;
            if let Some(&(w, e)) = g.neighbors(v).get(slot) {
                top.2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else {
                continue;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                if u == start {
                    root_children += 1;
                } else {
                    is_cut[u] = true;
                }
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    let (a, b) = g.edges()[e];
                    block.push(a);
                    block.push(b);
                    if e == parent_edge {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[start] = true;
        }
    }
    blocks.sort();
    BlockDecomposition {
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        blocks,
    }
}

fn map_witness(w: Witness, ids: &[Vertex]) -> Witness {
    match w {
        Witness::TwoPredecessors {
            root,
            vertex,
            predecessors: [a, b],
        } => Witness::TwoPredecessors {
            root: ids[root],
            vertex: ids[vertex],
            predecessors: [ids[a], ids[b]],
        },
        Witness::GeodesicPair {
            source,
            target,
            count,
        } => Witness::GeodesicPair {
            source: ids[source],
            target: ids[target],
            count,
        },
        Witness::Antipodes { vertex, antipodes } => Witness::Antipodes {
            vertex: ids[vertex],
            antipodes: antipodes.into_iter().map(|v| ids[v]).collect(),
        },
        Witness::InducedSubgraph { vertices } => Witness::InducedSubgraph {
            vertices: vertices.into_iter().map(|v| ids[v]).collect(),
        },
        Witness::LongestPaths { length, endpoints } => Witness::LongestPaths {
            length,
            endpoints: endpoints.into_iter().map(|(a, b)| (ids[a], ids[b])).collect(),
        },
    }
}

/// Geodeticity decided block by block; the witness is reported in the
/// original vertex ids.
pub fn geodetic_via_blocks(g: &Graph) -> Result<Verdict> {
    g.require_connected()?;
    for block in block_decomposition(g).blocks {
        let sub = g.induced_subgraph(&block);
        let verdict = if sub.is_weighted() {
            check_weighted(&sub)?.geodetic
        } else {
            check_geodetic_fast(&sub)?
        };
        if let Some(w) = verdict.witness {
            return Ok(Verdict::fails(map_witness(w, &block)));
        }
    }
    Ok(Verdict::holds())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockShape {
    Complete,
    OddCycle,
    Other,
}

pub fn shape_of(g: &Graph) -> BlockShape {
    let n = g.vertex_count();
    if g.is_complete() {
        BlockShape::Complete
    } else if n % 2 == 1 && g.edge_count() == n && (0..n).all(|v| g.degree(v) == 2) && g.is_connected() {
        BlockShape::OddCycle
    } else {
        BlockShape::Other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledBlock {
    pub vertices: Vec<Vertex>,
    pub shape: BlockShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassCertificate {
    Blocks { blocks: Vec<LabeledBlock> },
    ForbiddenSubgraph { vertices: Vec<Vertex> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub member: bool,
    pub certificate: ClassCertificate,
}

pub fn labeled_blocks(g: &Graph) -> Vec<LabeledBlock> {
    block_decomposition(g)
        .blocks
        .into_iter()
        .map(|vertices| {
            let shape = shape_of(&g.induced_subgraph(&vertices));
            LabeledBlock { vertices, shape }
        })
        .collect()
}

/// Geodetic claw-free graphs are exactly the odd cycles and the graphs
/// whose blocks are complete with every vertex in at most two blocks.
pub fn claw_free_geodetic_characterization(g: &Graph) -> Result<ClassVerdict> {
    g.require_connected()?;
    let blocks = labeled_blocks(g);
    let odd_cycle = blocks.len() == 1 && blocks[0].shape == BlockShape::OddCycle;
    let mut membership = vec![0usize; g.vertex_count()];
    for b in &blocks {
        for &v in &b.vertices {
            membership[v] += 1;
        }
    }
    let member = odd_cycle
        || (blocks.iter().all(|b| b.shape == BlockShape::Complete) && membership.iter().all(|&c| c <= 2));
    if !member {
        if let Some(claw) = find_induced_star(g, 3)? {
            return Ok(ClassVerdict {
                member,
                certificate: ClassCertificate::ForbiddenSubgraph { vertices: claw },
            });
        }
    }
    Ok(ClassVerdict {
        member,
        certificate: ClassCertificate::Blocks { blocks },
    })
}

/// A centre followed by `m` pairwise non-adjacent neighbours, the first
/// such in lexicographic order.
pub fn find_induced_star(g: &Graph, m: usize) -> Result<Option<Vec<Vertex>>> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "induced star needs at least two leaves, got {m}"
        )));
    }
    fn extend(g: &Graph, pool: &[Vertex], chosen: &mut Vec<Vertex>, m: usize) -> bool {
        if chosen.len() == m {
            return true;
        }
        for (i, &v) in pool.iter().enumerate() {
            if pool.len() - i < m - chosen.len() {
                break;
            }
            if chosen.iter().all(|&c| !g.has_edge(c, v)) {
                chosen.push(v);
                if extend(g, &pool[i + 1..], chosen, m) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    for centre in 0..g.vertex_count() {
        let pool: Vec<Vertex> = g.neighbor_ids(centre).collect();
        if pool.len() < m {
            continue;
        }
        let mut chosen = Vec::with_capacity(m);
        if extend(g, &pool, &mut chosen, m) {
            let mut star = vec![centre];
            star.extend(chosen);
            return Ok(Some(star));
        }
    }
    Ok(None)
}

/// Membership in the largest hereditary subclass of geodetic graphs:
/// every block complete or an odd cycle.
pub fn in_floor_geodetic(g: &Graph) -> Result<ClassVerdict> {
    g.require_connected()?;
    let blocks = labeled_blocks(g);
    let member = blocks.iter().all(|b| b.shape != BlockShape::Other);
    Ok(ClassVerdict {
        member,
        certificate: ClassCertificate::Blocks { blocks },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_n: usize,
    /// Largest half-length `k` of the searched `2k`-cycles.
    pub max_k: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_n: 12, max_k: 6 }
    }
}

/// An induced even cycle, possibly with one chord splitting it into two
/// odd cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenStructure {
    /// Cycle order.
    pub cycle: Vec<Vertex>,
    pub chord: Option<(Vertex, Vertex)>,
}

impl EvenStructure {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = self.cycle.clone();
        v.sort_unstable();
        v
    }

    /// Re-checks the shape on the subgraph of `g` induced by the cycle.
    pub fn verify(&self, g: &Graph) -> bool {
        let len = self.cycle.len();
        if len < 4 || len % 2 == 1 {
            return false;
        }
        let mut expected: Vec<(Vertex, Vertex)> = (0..len)
            .map(|i| {
                let (a, b) = (self.cycle[i], self.cycle[(i + 1) % len]);
                (a.min(b), a.max(b))
            })
            .collect();
        if let Some((a, b)) = self.chord {
            let pa = self.cycle.iter().position(|&x| x == a);
            let pb = self.cycle.iter().position(|&x| x == b);
            match (pa, pb) {
                (Some(pa), Some(pb)) if pa.abs_diff(pb) % 2 == 0 && pa != pb => {}
                _ => return false,
            }
            expected.push((a.min(b), a.max(b)));
        }
        expected.sort_unstable();
        expected.dedup();
        let mut actual = Vec::new();
        for (i, &a) in self.cycle.iter().enumerate() {
            for &b in &self.cycle[i + 1..] {
                if g.has_edge(a, b) {
                    actual.push((a.min(b), a.max(b)));
                }
            }
        }
        actual.sort_unstable();
        actual == expected
    }
}

/// Checks whether the vertex set `mask` induces `C_{2k}` or a member of
/// `C'_{2k}`, given per-vertex neighbour masks.
fn even_shape_in_mask(adj: &[u64], mask: u64) -> Option<EvenStructure> {
    let size = mask.count_ones() as usize;
    let members: Vec<usize> = (0..64).filter(|&v| mask >> v & 1 == 1).collect();
    let deg = |v: usize| (adj[v] & mask).count_ones() as usize;
    let edges: usize = members.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    let chord = if edges == size {
        if !members.iter().all(|&v| deg(v) == 2) {
            return None;
        }
        None
    } else if edges == size + 1 {
        let heavy: Vec<usize> = members.iter().copied().filter(|&v| deg(v) == 3).collect();
        if heavy.len() != 2
            || members.iter().any(|&v| deg(v) != 2 && deg(v) != 3)
            || adj[heavy[0]] >> heavy[1] & 1 == 0
        {
            return None;
        }
        Some((heavy[0], heavy[1]))
    } else {
        return None;
    };
    // Walk the cycle left after removing the chord.
    let local = |v: usize| {
        let mut m = adj[v] & mask;
        if let Some((a, b)) = chord {
            if v == a {
                m &= !(1 << b);
            } else if v == b {
                m &= !(1 << a);
            }
        }
        m
    };
    let start = members[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = local(start).trailing_zeros() as usize;
    while cur != start {
        cycle.push(cur);
        let next = local(cur) & !(1 << prev);
        prev = cur;
        cur = next.trailing_zeros() as usize;
        if cycle.len() > size {
            return None;
        }
    }
    if cycle.len() != size {
        return None;
    }
    if let Some((a, b)) = chord {
        let pa = cycle.iter().position(|&x| x == a).unwrap();
        let pb = cycle.iter().position(|&x| x == b).unwrap();
        if pa.abs_diff(pb) % 2 == 1 {
            return None;
        }
    }
    Some(EvenStructure { cycle, chord })
}

/// Next bit pattern with the same popcount (Gosper's hack).
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Searches for an induced `C_{2k}` or `C'_{2k}`, `k ≥ 2`, smallest size
/// first. Exponential; guarded by [`SearchLimits`].
pub fn search_forbidden_even_structure(g: &Graph) -> Result<Option<EvenStructure>> {
    search_forbidden_even_structure_with(g, SearchLimits::default())
}

pub fn search_forbidden_even_structure_with(
    g: &Graph,
    limits: SearchLimits,
) -> Result<Option<EvenStructure>> {
    let n = g.vertex_count();
    if n > limits.max_n || n > 63 {
        return Err(Error::SizeLimit {
            n,
            limit: limits.max_n.min(63),
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbor_ids(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let end = 1u64 << n;
    for k in 2..=limits.max_k {
        let size = 2 * k;
        if size > n {
            break;
        }
        let mut mask = (1u64 << size) - 1;
        while mask < end {
            if let Some(found) = even_shape_in_mask(&adj, mask) {
                return Ok(Some(found));
            }
            mask = next_combination(mask);
        }
    }
    Ok(None)
}

/// An induced `C_4` or `K_4 - e` on four vertices, if any.
pub fn has_induced_c4_or_k4e(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.has_edge(a, b) as usize;
            for c in b + 1..n {
                let abc = ab + g.has_edge(a, c) as usize + g.has_edge(b, c) as usize;
                if abc == 0 {
                    continue;
                }
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let degs: Vec<usize> = quad
                        .iter()
                        .map(|&x| quad.iter().filter(|&&y| g.has_edge(x, y)).count())
                        .collect();
                    let edges: usize = degs.iter().sum::<usize>() / 2;
                    if (edges == 4 && degs.iter().all(|&x| x == 2)) || edges == 5 {
                        return Some(quad.to_vec());
                    }
                }
            }
        }
    }
    None
}

/// Every open neighbourhood induces a connected subgraph.
pub fn is_locally_connected(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nbrs: Vec<Vertex> = g.neighbor_ids(v).collect();
        nbrs.len() <= 1 || g.induced_subgraph(&nbrs).is_connected()
    })
}

/// A tree is antipodal iff its longest path is unique and has odd length.
/// The one-vertex tree is antipodal (its vertex is its own antipode).
pub fn tree_antipodal_criterion(t: &Graph) -> Result<Verdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    t.require_unweighted("tree_antipodal_criterion")?;
    if t.vertex_count() == 1 {
        return Ok(Verdict::holds());
    }
    let dist = hop_distance_matrix(t)?;
    let longest = dist.iter().flatten().copied().max().unwrap();
    let endpoints: Vec<(Vertex, Vertex)> = (0..t.vertex_count())
        .flat_map(|u| (u + 1..t.vertex_count()).map(move |v| (u, v)))
        .filter(|&(u, v)| dist[u][v] == longest)
        .collect();
    if endpoints.len() == 1 && longest % 2 == 1 {
        Ok(Verdict::holds())
    } else {
        Ok(Verdict::fails(Witness::LongestPaths {
            length: longest,
            endpoints,
        }))
    }
}

/// How many vertices realise each vertex's eccentricity.
pub fn antipode_counts(g: &Graph) -> Result<Vec<usize>> {
    g.require_connected()?;
    (0..g.vertex_count())
        .map(|u| {
            if g.is_weighted() {
                return Ok(farthest_vertices(g, u)?.len());
            }
            let d: Vec<usize> = bfs_distances(g, u).into_iter().map(Option::unwrap).collect();
            let ecc = d.iter().copied().max().unwrap();
            Ok(d.iter().filter(|&&x| x == ecc).count())
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TransversalShape {
    /// The block is one edge of a single stem.
    StemSegment {
        stem: usize,
    },
    /// The block spans the first `k` edges of stems `stems[0]` (the
    /// distinguished stem) through `stems[n]`, with `n` balks from the
    /// distinguished stem at tier `k` and one balk between every other pair
    /// of stems at tier `l`.
    Transversal {
        n: usize,
        k: usize,
        l: usize,
        stems: Vec<usize>,
    },
    NotTransversal {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockTransversality {
    pub vertices: Vec<Vertex>,
    pub shape: TransversalShape,
}

impl BlockTransversality {
    pub fn is_transversal(&self) -> bool {
        !matches!(self.shape, TransversalShape::NotTransversal { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalityReport {
    pub root: Vertex,
    /// Whether the bearing tree's stems meet only at the root. When false,
    /// no per-block verdicts are produced.
    pub applicable: bool,
    /// Stems as root-to-leaf vertex lists, indexed as referenced by the
    /// block shapes.
    pub stems: Vec<Vec<Vertex>>,
    pub blocks: Vec<BlockTransversality>,
}

impl TransversalityReport {
    pub fn all_transversal(&self) -> bool {
        self.blocks.iter().all(BlockTransversality::is_transversal)
    }
}

/// Matches every block against the transversal shape relative to the
/// bearing tree rooted at `root`.
pub fn verify_transversal_blocks(g: &Graph, root: Vertex) -> Result<TransversalityReport> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let tree = build_bearing_tree(g, root)?;
    let stems: Vec<Vec<Vertex>> = extract_stems(&tree).into_iter().map(|s| s.vertices).collect();
    let children = tree.children();
    let applicable = (0..n).all(|v| v == root || children[v].len() <= 1);
    if !applicable {
        return Ok(TransversalityReport {
            root,
            applicable,
            stems,
            blocks: Vec::new(),
        });
    }
    let mut stem_of = vec![usize::MAX; n];
    for (i, s) in stems.iter().enumerate() {
        for &v in &s[1..] {
            stem_of[v] = i;
        }
    }
    let blocks = block_decomposition(g)
        .blocks
        .into_iter()
        .map(|vertices| {
            let shape = classify_block(g, &tree.tier, &tree, &stems, &stem_of, &vertices);
            BlockTransversality { vertices, shape }
        })
        .collect();
    Ok(TransversalityReport {
        root,
        applicable,
        stems,
        blocks,
    })
}

fn classify_block(
    g: &Graph,
    tier: &[usize],
    tree: &crate::recognition::BearingTree,
    stems: &[Vec<Vertex>],
    stem_of: &[usize],
    block: &[Vertex],
) -> TransversalShape {
    let root = tree.root;
    let reject = |reason: String| TransversalShape::NotTransversal { reason };
    if block.len() == 1 {
        return TransversalShape::StemSegment { stem: 0 };
    }
    if block.len() == 2 && tree.is_tree_edge(block[0], block[1]) {
        let deeper = if tier[block[0]] > tier[block[1]] {
            block[0]
        } else {
            block[1]
        };
        return TransversalShape::StemSegment {
            stem: stem_of[deeper],
        };
    }
    if block.binary_search(&root).is_err() {
        return reject("block does not contain the root".into());
    }
    let mut used: Vec<usize> = block
        .iter()
        .filter(|&&v| v != root)
        .map(|&v| stem_of[v])
        .collect();
    used.sort_unstable();
    used.dedup();
    let k = block.iter().map(|&v| tier[v]).max().unwrap();
    for &s in &used {
        let stem = &stems[s];
        if stem.len() <= k {
            return reject(format!("stem {s} is shorter than tier {k}"));
        }
        let in_block = stem[1..]
            .iter()
            .filter(|&&v| block.binary_search(&v).is_ok())
            .count();
        if in_block != k {
            return reject(format!("block does not contain tiers 1..={k} of stem {s}"));
        }
    }
    let others = used.len() - 1;
    let mut balks = Vec::new();
    let mut tree_edges = 0;
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            if !g.has_edge(u, v) {
                continue;
            }
            if tree.is_tree_edge(u, v) {
                tree_edges += 1;
            } else if tier[u] == tier[v] {
                balks.push((u, v));
            } else {
                return reject(format!("edge {u}-{v} joins tiers {} and {}", tier[u], tier[v]));
            }
        }
    }
    if tree_edges != k * used.len() || balks.len() != others * (others + 1) / 2 {
        return reject(format!(
            "{} vertices and {} edges do not fit the shape",
            block.len(),
            tree_edges + balks.len()
        ));
    }
    'roles: for &first in &used {
        let head = stems[first][k];
        let (from_first, rest): (Vec<_>, Vec<_>) = balks
            .iter()
            .partition(|&&(u, v)| stem_of[u] == first || stem_of[v] == first);
        if from_first.len() != others || from_first.iter().any(|&&(u, v)| u != head && v != head) {
            continue;
        }
        let mut l = k;
        let mut seen_pairs = Vec::new();
        for (i, &&(u, v)) in rest.iter().enumerate() {
            if i == 0 {
                l = tier[u];
            } else if tier[u] != l {
                continue 'roles;
            }
            let pair = (stem_of[u].min(stem_of[v]), stem_of[u].max(stem_of[v]));
            seen_pairs.push(pair);
        }
        seen_pairs.sort_unstable();
        seen_pairs.dedup();
        if seen_pairs.len() != rest.len() || l > k {
            continue;
        }
        let mut order = vec![first];
        order.extend(used.iter().copied().filter(|&s| s != first));
        return TransversalShape::Transversal {
            n: others,
            k,
            l,
            stems: order,
        };
    }
    reject("no choice of distinguished stem matches".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::graph::parse_graph;

    #[test]
    fn cactus_blocks_are_triangles_bridges_and_a_pentagon() {
        let g = gallery::odd_cactus();
        let labeled = labeled_blocks(&g);
        assert_eq!(labeled.len(), 8);
        let cycles = labeled.iter().filter(|b| b.shape == BlockShape::OddCycle).count();
        let bridges = labeled.iter().filter(|b| b.vertices.len() == 2).count();
        let triangles = labeled.iter().filter(|b| b.vertices.len() == 3).count();
        assert_eq!((cycles, bridges, triangles), (1, 3, 4));
        assert_eq!(block_decomposition(&g).cut_vertices, vec![1, 4, 5, 10, 11]);
    }

    #[test]
    fn complete_graph_is_one_block() {
        let d = block_decomposition(&Graph::complete(5));
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn six_block_graph_has_six_blocks() {
        assert_eq!(block_decomposition(&gallery::six_block_graph()).blocks.len(), 6);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = gallery::six_block_graph();
        let blocks = block_decomposition(&g).blocks;
        for &(u, v) in g.edges() {
            let owners = blocks
                .iter()
                .filter(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
                .count();
            assert_eq!(owners, 1);
        }
    }

    #[test]
    fn block_lemma_examples() {
        let bowtie = parse_graph("5\n0 1\n1 2\n0 2\n0 3\n3 4\n0 4").unwrap();
        assert!(geodetic_via_blocks(&bowtie).unwrap().holds);
        let mixed = gallery::glue_at_vertex(&Graph::complete(3), &Graph::cycle(4));
        let v = geodetic_via_blocks(&mixed).unwrap();
        assert!(!v.holds);
        assert!(v.witness.unwrap().verify(&mixed));
        assert!(geodetic_via_blocks(&gallery::five_stem_tree()).unwrap().holds);
    }

    #[test]
    fn claw_free_examples() {
        assert!(
            claw_free_geodetic_characterization(&Graph::cycle(7))
                .unwrap()
                .member
        );
        assert!(
            claw_free_geodetic_characterization(&gallery::triangle_chain(3))
                .unwrap()
                .member
        );
        let claw = claw_free_geodetic_characterization(&Graph::star(3)).unwrap();
        assert!(!claw.member);
        assert_eq!(
            claw.certificate,
            ClassCertificate::ForbiddenSubgraph {
                vertices: vec![0, 1, 2, 3]
            }
        );
    }

    #[test]
    fn induced_star_examples() {
        assert_eq!(
            find_induced_star(&Graph::star(3), 3).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(find_induced_star(&Graph::complete(5), 2).unwrap(), None);
        assert!(find_induced_star(&Graph::petersen(), 3).unwrap().is_some());
        assert!(find_induced_star(&Graph::petersen(), 1).is_err());
    }

    #[test]
    fn floor_class_examples() {
        assert!(in_floor_geodetic(&gallery::odd_cactus()).unwrap().member);
        assert!(!in_floor_geodetic(&Graph::cycle(4)).unwrap().member);
        let k4_c5 = gallery::glue_at_vertex(&Graph::complete(4), &Graph::cycle(5));
        let v = in_floor_geodetic(&k4_c5).unwrap();
        assert!(v.member);
        let ClassCertificate::Blocks { blocks } = v.certificate else {
            panic!("expected block listing");
        };
        let shapes: Vec<_> = blocks.iter().map(|b| b.shape).collect();
        assert_eq!(shapes, vec![BlockShape::Complete, BlockShape::OddCycle]);
    }

    #[test]
    fn even_structure_examples() {
        let c4 = search_forbidden_even_structure(&Graph::cycle(4))
            .unwrap()
            .unwrap();
        assert_eq!(c4.chord, None);
        assert!(c4.verify(&Graph::cycle(4)));
        let d = gallery::diamond();
        let found = search_forbidden_even_structure(&d).unwrap().unwrap();
        assert_eq!(found.chord, Some((0, 2)));
        assert!(found.verify(&d));
        assert_eq!(search_forbidden_even_structure(&Graph::cycle(7)).unwrap(), None);
        assert!(matches!(
            search_forbidden_even_structure(&Graph::cycle(13)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn even_chord_splitting_into_even_cycles_is_not_forbidden() {
        // C6 with a long chord 0-3 splits into two 4-cycles; those 4-cycles
        // are themselves induced C4s, which is what must be reported.
        let g = parse_graph("6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3").unwrap();
        let found = search_forbidden_even_structure(&g).unwrap().unwrap();
        assert_eq!(found.cycle.len(), 4);
        assert_eq!(found.chord, None);
    }

    #[test]
    fn c4_or_diamond_scan() {
        assert!(has_induced_c4_or_k4e(&Graph::cycle(4)).is_some());
        assert!(has_induced_c4_or_k4e(&gallery::diamond()).is_some());
        assert!(has_induced_c4_or_k4e(&Graph::complete(4)).is_none());
        assert!(has_induced_c4_or_k4e(&Graph::petersen()).is_none());
    }

    #[test]
    fn local_connectivity_examples() {
        assert!(is_locally_connected(&Graph::complete(6)));
        assert!(!is_locally_connected(&Graph::cycle(5)));
        assert!(is_locally_connected(&gallery::wheel(5)));
    }

    #[test]
    fn tree_criterion_examples() {
        assert!(tree_antipodal_criterion(&Graph::path(4)).unwrap().holds);
        let claw = tree_antipodal_criterion(&Graph::star(3)).unwrap();
        assert_eq!(
            claw.witness,
            Some(Witness::LongestPaths {
                length: 2,
                endpoints: vec![(1, 2), (1, 3), (2, 3)]
            })
        );
        assert!(
            tree_antipodal_criterion(&gallery::antipodal_tree())
                .unwrap()
                .holds
        );
        assert!(tree_antipodal_criterion(&Graph::path(1)).unwrap().holds);
        assert!(matches!(
            tree_antipodal_criterion(&Graph::cycle(3)),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn antipode_count_examples() {
        assert_eq!(antipode_counts(&Graph::cycle(6)).unwrap(), vec![1; 6]);
        assert_eq!(antipode_counts(&Graph::complete(4)).unwrap(), vec![3; 4]);
        assert_eq!(antipode_counts(&Graph::cycle(5)).unwrap(), vec![2; 5]);
    }

    #[test]
    fn k4_is_one_transversal_block_from_every_root() {
        for root in 0..4 {
            let r = verify_transversal_blocks(&Graph::complete(4), root).unwrap();
            assert!(r.applicable);
            assert_eq!(r.blocks.len(), 1);
            match &r.blocks[0].shape {
                TransversalShape::Transversal { n, k, l, .. } => assert_eq!((*n, *k, *l), (2, 1, 1)),
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn six_block_graph_is_transversal() {
        let r = verify_transversal_blocks(&gallery::six_block_graph(), 0).unwrap();
        assert!(r.applicable);
        assert!(r.all_transversal());
        let mut big: Vec<(usize, usize, usize)> = r
            .blocks
            .iter()
            .filter_map(|b| match &b.shape {
                TransversalShape::Transversal { n, k, l, .. } => Some((*n, *k, *l)),
                _ => None,
            })
            .collect();
        big.sort();
        assert_eq!(big, vec![(2, 3, 2), (3, 3, 2)]);
        let segments = r
            .blocks
            .iter()
            .filter(|b| matches!(b.shape, TransversalShape::StemSegment { .. }))
            .count();
        assert_eq!(segments, 4);
    }

    #[test]
    fn c6_block_is_not_transversal() {
        let r = verify_transversal_blocks(&Graph::cycle(6), 0).unwrap();
        assert!(r.applicable);
        assert!(!r.blocks[0].is_transversal());
    }

    #[test]
    fn branching_tree_is_not_applicable() {
        let r = verify_transversal_blocks(&Graph::petersen(), 0).unwrap();
        assert!(!r.applicable);
        assert!(r.blocks.is_empty());
        assert!(verify_transversal_blocks(&Graph::petersen(), 10).is_err());
    }
}
