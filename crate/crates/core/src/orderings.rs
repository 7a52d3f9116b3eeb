//! Vertex orderings and the three ordering-based characterizations of
//! interval r-graphs:
//!
//! * the generalized interval ordering condition: for every edge between
//!   positions `j < i`, every vertex strictly between them that lies outside
//!   the part of the vertex at `j` is adjacent to it;
//! * absence of the three forbidden 3-vertex configurations [`PatternKind::P1`],
//!   [`PatternKind::P2`], [`PatternKind::P3`];
//! * the r-interval ordering condition: the almost-consecutive row runs `R_i`
//!   and column runs `C_j` of the ordered adjacency matrix cover every 1.
//!
//! Positions are 0-indexed throughout.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::RPartiteGraph;

/// A bijection between vertices and positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// `order[p]` is the vertex placed at position `p`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrdering {
                    n,
                    reason: format!("vertex {v} out of range"),
                });
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrdering {
                    n,
                    reason: format!("vertex {v} appears twice"),
                });
            }
            pos[v] = p;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn vertex_at(&self, position: usize) -> usize {
        self.order[position]
    }

    #[inline]
    pub fn position_of(&self, vertex: usize) -> usize {
        self.pos[vertex]
    }

    pub fn reversed(&self) -> Self {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        let n = order.len();
        let pos = self.pos.iter().map(|&p| n - 1 - p).collect();
        VertexOrdering { order, pos }
    }

    /// The ordering induced on `keep` (given as original vertex ids), with
    /// vertices relabelled as in [`RPartiteGraph::induced_subgraph`].
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let mut labelled: Vec<(usize, usize)> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (self.pos[old], new))
            .collect();
        labelled.sort_unstable();
        Self::from_order(labelled.into_iter().map(|(_, new)| new).collect())
    }

    pub(crate) fn check_against(&self, graph: &RPartiteGraph) -> Result<()> {
        if self.len() != graph.n() {
            return Err(Error::SizeMismatch {
                graph: graph.n(),
                ordering: self.len(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternKind {
    /// `part(j) = part(k) != part(i)`, edge `ik`, non-edge `ij`.
    P1,
    /// Three parts, edge `ik`, non-edges `ij` and `jk`.
    P2,
    /// Three parts, edges `ik` and `jk`, non-edge `ij`.
    P3,
    /// Bipartite: `part(a) = part(b) != part(c)`, edge `ac`, non-edge `bc`.
    HH,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PatternKind::P1 => "P1",
            PatternKind::P2 => "P2",
            PatternKind::P3 => "P3",
            PatternKind::HH => "HH",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub positions: [usize; 3],
    pub vertices: [usize; 3],
}

impl PatternWitness {
    fn at(kind: PatternKind, ordering: &VertexOrdering, positions: [usize; 3]) -> Self {
        PatternWitness {
            kind,
            positions,
            vertices: positions.map(|p| ordering.vertex_at(p)),
        }
    }
}

/// First failure of the generalized interval ordering condition: the edge
/// between positions `lower < upper` and the position `middle` strictly
/// between them holding a non-neighbor of the lower endpoint from another
/// part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GioViolation {
    pub lower: usize,
    pub upper: usize,
    pub middle: usize,
}

/// Position of the first vertex after `p` that is in another part than the
/// vertex at `p` and not adjacent to it.
fn first_blocker(graph: &RPartiteGraph, ordering: &VertexOrdering, p: usize) -> Option<usize> {
    let v = ordering.vertex_at(p);
    (p + 1..ordering.len()).find(|&q| {
        let w = ordering.vertex_at(q);
        !graph.same_part(v, w) && !graph.has_edge(v, w)
    })
}

/// Largest position holding a neighbor of the vertex at `p`, if any lies
/// to its right.
fn last_right_neighbor(graph: &RPartiteGraph, ordering: &VertexOrdering, p: usize) -> Option<usize> {
    graph
        .neighbors(ordering.vertex_at(p))
        .map(|w| ordering.position_of(w))
        .filter(|&q| q > p)
        .max()
}

/// Lexicographically smallest `(lower, upper, middle)` violating the
/// generalized interval ordering condition, or `None` if the ordering
/// satisfies it.
pub fn generalized_interval_violation(
    graph: &RPartiteGraph,
    ordering: &VertexOrdering,
) -> Result<Option<GioViolation>> {
    ordering.check_against(graph)?;
    let n = ordering.len();
    for lower in 0..n {
        let Some(middle) = first_blocker(graph, ordering, lower) else {
            continue;
        };
        let v = ordering.vertex_at(lower);
        if let Some(upper) = (middle + 1..n).find(|&q| graph.has_edge(v, ordering.vertex_at(q))) {
            return Ok(Some(GioViolation { lower, upper, middle }));
        }
    }
    Ok(None)
}

pub fn is_generalized_interval_ordering(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<bool> {
    generalized_interval_violation(graph, ordering).map(|v| v.is_none())
}

/// Every occurrence (up to `limit`) of the configurations P1, P2 and P3, in
/// lexicographic order of positions.
pub fn find_forbidden_patterns(
    graph: &RPartiteGraph,
    ordering: &VertexOrdering,
    limit: Option<usize>,
) -> Result<Vec<PatternWitness>> {
    ordering.check_against(graph)?;
    let limit = limit.unwrap_or(usize::MAX);
    let mut found = Vec::new();
    if limit == 0 {
        return Ok(found);
    }
    for i in 0..ordering.len() {
        // Both k and j < k must lie at or before the last right neighbor of v_i.
        let Some(reach) = last_right_neighbor(graph, ordering, i) else {
            continue;
        };
        let vi = ordering.vertex_at(i);
        for j in i + 1..reach {
            let vj = ordering.vertex_at(j);
            if graph.same_part(vi, vj) || graph.has_edge(vi, vj) {
                continue;
            }
            for k in j + 1..=reach {
                let vk = ordering.vertex_at(k);
                if !graph.has_edge(vi, vk) {
                    continue;
                }
                let kind = if graph.same_part(vj, vk) {
                    PatternKind::P1
                } else if graph.has_edge(vj, vk) {
                    PatternKind::P3
                } else {
                    PatternKind::P2
                };
                found.push(PatternWitness::at(kind, ordering, [i, j, k]));
                if found.len() >= limit {
                    return Ok(found);
                }
            }
        }
    }
    Ok(found)
}

/// First `a < b < c` (by position) with `part(a) = part(b) != part(c)`, edge
/// `ac` and non-edge `bc`. Only defined for bipartite graphs.
pub fn has_hell_huang_pattern(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<Option<PatternWitness>> {
    if graph.r() != 2 {
        return Err(Error::BipartiteOnly(graph.r()));
    }
    ordering.check_against(graph)?;
    let n = ordering.len();
    for a in 0..n {
        let Some(reach) = last_right_neighbor(graph, ordering, a) else {
            continue;
        };
        let va = ordering.vertex_at(a);
        for b in a + 1..reach {
            let vb = ordering.vertex_at(b);
            if !graph.same_part(va, vb) {
                continue;
            }
            for c in b + 1..=reach {
                let vc = ordering.vertex_at(c);
                if graph.has_edge(va, vc) && !graph.has_edge(vb, vc) {
                    return Ok(Some(PatternWitness::at(PatternKind::HH, ordering, [a, b, c])));
                }
            }
        }
    }
    Ok(None)
}

/// One almost-consecutive run of 1s, anchored at a row (scanning right) or a
/// column (scanning down).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Run {
    /// First position after the anchor holding a vertex of another part.
    pub start: Option<usize>,
    /// Positions of the 1s in the run, ascending. Empty when the cell at
    /// `start` is 0.
    pub cells: Vec<usize>,
    /// Zeros strictly inside the run, all at same-part positions.
    pub skipped: Vec<usize>,
}

impl Run {
    /// Position of the last 1 in the run.
    pub fn end(&self) -> Option<usize> {
        self.cells.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.cells.binary_search(&position).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    /// `rows[i]` is `R_i`; its cells are column positions.
    pub rows: Vec<Run>,
    /// `columns[j]` is `C_j`; its cells are row positions.
    pub columns: Vec<Run>,
    /// 1-cells `(row, column)` in no row run and no column run.
    pub uncovered: Vec<(usize, usize)>,
}

impl CoverageReport {
    pub fn is_complete(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Scans away from `anchor` over positions `anchor+1..n`. `is_one(k)` reads
/// the matrix cell pairing the anchor with position `k`.
fn scan_run(graph: &RPartiteGraph, ordering: &VertexOrdering, anchor: usize, is_one: impl Fn(usize) -> bool) -> Run {
    let va = ordering.vertex_at(anchor);
    let n = ordering.len();
    let same = |k: usize| graph.same_part(va, ordering.vertex_at(k));
    let start = (anchor + 1..n).find(|&k| !same(k));
    let mut run = Run {
        start,
        ..Run::default()
    };
    let Some(s) = start else {
        return run;
    };
    if !is_one(s) {
        return run;
    }
    run.cells.push(s);
    let mut pending = Vec::new();
    for k in s + 1..n {
        if is_one(k) {
            run.cells.push(k);
            run.skipped.append(&mut pending);
        } else if same(k) {
            pending.push(k);
        } else {
            break;
        }
    }
    run
}

pub fn compute_coverage(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<CoverageReport> {
    ordering.check_against(graph)?;
    let n = ordering.len();
    let cell = |p: usize, q: usize| graph.has_edge(ordering.vertex_at(p), ordering.vertex_at(q));
    let rows: Vec<Run> = (0..n).map(|i| scan_run(graph, ordering, i, |k| cell(i, k))).collect();
    let columns: Vec<Run> = (0..n).map(|j| scan_run(graph, ordering, j, |k| cell(k, j))).collect();

    let mut uncovered = Vec::new();
    for (p, row) in rows.iter().enumerate() {
        let mut ones: Vec<usize> = graph
            .neighbors(ordering.vertex_at(p))
            .map(|w| ordering.position_of(w))
            .collect();
        ones.sort_unstable();
        for q in ones {
            let covered = (q > p && row.contains(q)) || (p > q && columns[q].contains(p));
            if !covered {
                uncovered.push((p, q));
            }
        }
    }
    Ok(CoverageReport {
        rows,
        columns,
        uncovered,
    })
}

pub fn is_r_interval_ordering(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<bool> {
    compute_coverage(graph, ordering).map(|c| c.is_complete())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ord(v: &[usize]) -> VertexOrdering {
        VertexOrdering::from_order(v.to_vec()).unwrap()
    }

    #[test]
    fn ordering_bijection_errors() {
        assert!(VertexOrdering::from_order(vec![0, 0]).is_err());
        assert!(VertexOrdering::from_order(vec![0, 2]).is_err());
        let o = ord(&[2, 0, 1]);
        assert_eq!(o.position_of(2), 0);
        let r = o.reversed();
        assert_eq!(r.order(), &[1, 0, 2]);
        assert_eq!(r.position_of(1), 0);
    }

    #[test]
    fn restrict_keeps_relative_order() {
        let o = ord(&[3, 1, 4, 0, 2]);
        // keep vertices 4, 3, 0 -> new ids 0, 1, 2
        let sub = o.restrict(&[4, 3, 0]).unwrap();
        assert_eq!(sub.order(), &[1, 0, 2]);
    }

    #[test]
    fn gio_on_k3_and_worked_example() {
        let k3 = fixtures::complete_three_parts();
        assert!(is_generalized_interval_ordering(&k3, &VertexOrdering::identity(3)).unwrap());
        let g = fixtures::worked_example();
        assert!(is_generalized_interval_ordering(&g, &VertexOrdering::identity(10)).unwrap());
    }

    #[test]
    fn gio_abb_witness() {
        // parts A, B, B with the single edge between the first and last.
        let g = RPartiteGraph::from_edges(2, vec![0, 1, 1], &[(0, 2)]).unwrap();
        let v = generalized_interval_violation(&g, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(
            v,
            Some(GioViolation {
                lower: 0,
                upper: 2,
                middle: 1
            })
        );
        assert!(is_generalized_interval_ordering(&g, &ord(&[0, 2, 1])).unwrap());
    }

    #[test]
    fn gio_size_mismatch() {
        let g = fixtures::complete_three_parts();
        assert!(matches!(
            is_generalized_interval_ordering(&g, &VertexOrdering::identity(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn pattern_p2_and_p3() {
        let g = RPartiteGraph::from_edges(3, vec![0, 1, 2], &[(0, 2)]).unwrap();
        let w = find_forbidden_patterns(&g, &VertexOrdering::identity(3), None).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].kind, PatternKind::P2);
        assert_eq!(w[0].positions, [0, 1, 2]);

        let g = RPartiteGraph::from_edges(3, vec![0, 1, 2], &[(0, 2), (1, 2)]).unwrap();
        let w = find_forbidden_patterns(&g, &VertexOrdering::identity(3), None).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].kind, PatternKind::P3);
    }

    #[test]
    fn pattern_p1_and_limit() {
        // A B B B with edge from A to the last B: two P1 triples.
        let g = RPartiteGraph::from_edges(2, vec![0, 1, 1, 1], &[(0, 3)]).unwrap();
        let all = find_forbidden_patterns(&g, &VertexOrdering::identity(4), None).unwrap();
        let pos: Vec<_> = all.iter().map(|w| (w.kind, w.positions)).collect();
        assert_eq!(pos, vec![(PatternKind::P1, [0, 1, 3]), (PatternKind::P1, [0, 2, 3])]);
        let first = find_forbidden_patterns(&g, &VertexOrdering::identity(4), Some(1)).unwrap();
        assert_eq!(first.len(), 1);
        assert!(find_forbidden_patterns(&g, &VertexOrdering::identity(4), Some(0))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn hell_huang_basic() {
        let g = RPartiteGraph::from_edges(2, vec![0, 0, 1], &[(0, 2)]).unwrap();
        let w = has_hell_huang_pattern(&g, &VertexOrdering::identity(3))
            .unwrap()
            .unwrap();
        assert_eq!(w.kind, PatternKind::HH);
        assert_eq!(w.positions, [0, 1, 2]);

        let k22 = RPartiteGraph::from_edges(2, vec![0, 0, 1, 1], &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(has_hell_huang_pattern(&k22, &ord(&[2, 0, 3, 1])).unwrap().is_none());

        let g3 = fixtures::complete_three_parts();
        assert_eq!(
            has_hell_huang_pattern(&g3, &VertexOrdering::identity(3)),
            Err(Error::BipartiteOnly(3))
        );
    }

    #[test]
    fn coverage_abb_leaves_one_uncovered() {
        let g = RPartiteGraph::from_edges(2, vec![0, 1, 1], &[(0, 2)]).unwrap();
        let c = compute_coverage(&g, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(c.rows[0].start, Some(1));
        assert!(c.rows[0].is_empty());
        assert_eq!(c.uncovered, vec![(0, 2), (2, 0)]);
        assert!(!is_r_interval_ordering(&g, &VertexOrdering::identity(3)).unwrap());
    }

    #[test]
    fn coverage_k3() {
        let g = fixtures::complete_three_parts();
        let c = compute_coverage(&g, &VertexOrdering::identity(3)).unwrap();
        let cells: Vec<_> = c.rows.iter().map(|r| r.cells.clone()).collect();
        assert_eq!(cells, vec![vec![1, 2], vec![2], vec![]]);
        assert!(c.is_complete());
    }

    #[test]
    fn run_stops_at_last_one() {
        // A B A A with edge A0-B1 only: the run never extends over the
        // trailing same-part zeros.
        let g = RPartiteGraph::from_edges(2, vec![0, 1, 0, 0], &[(0, 1)]).unwrap();
        let c = compute_coverage(&g, &VertexOrdering::identity(4)).unwrap();
        assert_eq!(c.rows[0].cells, vec![1]);
        assert!(c.rows[0].skipped.is_empty());
        assert_eq!(c.rows[0].end(), Some(1));
    }

    #[test]
    fn edgeless_coverage_is_empty() {
        let g = RPartiteGraph::edgeless(3, vec![0, 1, 2, 0, 1]).unwrap();
        let o = ord(&[4, 2, 0, 3, 1]);
        let c = compute_coverage(&g, &o).unwrap();
        assert!(c.rows.iter().chain(&c.columns).all(Run::is_empty));
        assert!(c.is_complete());
    }
}
