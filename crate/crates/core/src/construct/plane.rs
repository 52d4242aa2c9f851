// SPDX-License-Identifier: Apache-2.0

//! The Desarguesian projective plane PG(2, q) and its Levi graph.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::field::FiniteField;

#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    pub q: usize,
    /// Normalised homogeneous coordinates (first nonzero entry is 1),
    /// lexicographically ordered. Lines use the same coordinates; a point
    /// lies on a line when their dot product vanishes.
    pub points: Vec<[usize; 3]>,
    pub lines: Vec<[usize; 3]>,
    /// Points on each line, ascending.
    pub line_points: Vec<Vec<usize>>,
    /// Lines through each point, ascending.
    pub point_lines: Vec<Vec<usize>>,
}

fn normalised_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let t = [a, b, c];
                if t.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(t);
                }
            }
        }
    }
    out
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.line_points[line].binary_search(&point).is_ok()
    }

    /// The line through two distinct points.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.point_lines[a].iter().copied().find(|&l| self.incident(b, l))
    }

    /// Checks the four incidence axioms exhaustively.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let (q, n) = (self.q, self.size());
        if let Some(l) = (0..n).find(|&l| self.line_points[l].len() != q + 1) {
            return Err(format!("line {l} has {} points", self.line_points[l].len()));
        }
        if let Some(p) = (0..n).find(|&p| self.point_lines[p].len() != q + 1) {
            return Err(format!("point {p} lies on {} lines", self.point_lines[p].len()));
        }
        let common = |xs: &[usize], ys: &[usize]| xs.iter().filter(|x| ys.binary_search(x).is_ok()).count();
        for a in 0..n {
            for b in a + 1..n {
                let through = common(&self.point_lines[a], &self.point_lines[b]);
                if through != 1 {
                    return Err(format!("points {a} and {b} share {through} lines"));
                }
                let meet = common(&self.line_points[a], &self.line_points[b]);
                if meet != 1 {
                    return Err(format!("lines {a} and {b} share {meet} points"));
                }
            }
        }
        Ok(())
    }
}

/// PG(2, q) for `q` in [`super::field::SUPPORTED_ORDERS`], with the incidence
/// axioms verified before returning.
pub fn projective_plane(q: usize) -> Result<ProjectivePlane> {
    let field = FiniteField::new(q)?;
    let points = normalised_triples(q);
    let lines = points.clone();
    let n = points.len();
    let mut line_points = vec![Vec::new(); n];
    let mut point_lines = vec![Vec::new(); n];
    for (l, line) in lines.iter().enumerate() {
        for (p, point) in points.iter().enumerate() {
            if field.dot(point, line) == 0 {
                line_points[l].push(p);
                point_lines[p].push(l);
            }
        }
    }
    let plane = ProjectivePlane {
        q,
        points,
        lines,
        line_points,
        point_lines,
    };
    plane
        .verify_axioms()
        .map_err(|e| Error::Internal(format!("PG(2,{q}): {e}")))?;
    Ok(plane)
}

/// Point/line incidence graph: points are `0..N`, line `i` is `N + i`.
pub fn levi_graph(plane: &ProjectivePlane) -> Graph {
    let n = plane.size();
    let edges = plane
        .line_points
        .iter()
        .enumerate()
        .flat_map(|(l, pts)| pts.iter().map(move |&p| (p, n + l)));
    Graph::new(2 * n, edges).expect("incidence graph is simple")
}
