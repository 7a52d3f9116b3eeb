//! Interval models: construction from orderings, verification against a
//! graph, and extraction of an ordering from a model.
//!
//! Endpoints are kept in half-units (`lo2 = 2 * lo`) so that `m + 1/2`
//! compares exactly against integer positions. Positions enter the
//! constructions 1-indexed: the vertex at position `p` gets left endpoint
//! `p + 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::RPartiteGraph;
use crate::orderings::{compute_coverage, VertexOrdering};

/// Closed interval `[lo2 / 2, hi2 / 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntInterval {
    lo2: i64,
    hi2: i64,
}

impl HalfIntInterval {
    /// `None` if `lo2 > hi2`.
    pub fn from_half_units(lo2: i64, hi2: i64) -> Option<Self> {
        (lo2 <= hi2).then_some(HalfIntInterval { lo2, hi2 })
    }

    /// `[lo, hi]` with integer endpoints. Panics if `lo > hi`.
    pub fn from_integers(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "interval [{lo}, {hi}] is reversed");
        HalfIntInterval {
            lo2: 2 * lo,
            hi2: 2 * hi,
        }
    }

    pub fn lo2(&self) -> i64 {
        self.lo2
    }

    pub fn hi2(&self) -> i64 {
        self.hi2
    }

    pub fn is_point(&self) -> bool {
        self.lo2 == self.hi2
    }

    pub fn intersects(&self, other: &HalfIntInterval) -> bool {
        self.lo2.max(other.lo2) <= self.hi2.min(other.hi2)
    }
}

fn half(x2: i64) -> String {
    let sign = if x2 < 0 { "-" } else { "" };
    let mag = x2.unsigned_abs();
    if mag.is_multiple_of(2) {
        format!("{sign}{}", mag / 2)
    } else {
        format!("{sign}{}.5", mag / 2)
    }
}

impl fmt::Display for HalfIntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", half(self.lo2), half(self.hi2))
    }
}

/// One interval per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalModel {
    intervals: Vec<HalfIntInterval>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<HalfIntInterval>) -> Self {
        IntervalModel { intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn interval(&self, vertex: usize) -> HalfIntInterval {
        self.intervals[vertex]
    }

    pub fn intervals(&self) -> &[HalfIntInterval] {
        &self.intervals
    }

    pub fn restrict(&self, keep: &[usize]) -> Self {
        IntervalModel::new(keep.iter().map(|&v| self.intervals[v]).collect())
    }
}

/// For each position `p`, the largest position of a neighbor of the vertex
/// at `p`, or `p` itself when no neighbor lies further right.
pub fn neighbor_reach(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<Vec<usize>> {
    ordering.check_against(graph)?;
    Ok((0..ordering.len())
        .map(|p| {
            graph
                .neighbors(ordering.vertex_at(p))
                .map(|w| ordering.position_of(w))
                .fold(p, usize::max)
        })
        .collect())
}

/// For each position `p`, the largest position `t` such that every vertex at
/// positions `p+1..=t` outside the part of the vertex at `p` is adjacent to
/// it, with the vertex at `t` itself outside that part. Falls back to `p`.
pub fn consecutive_reach(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<Vec<usize>> {
    ordering.check_against(graph)?;
    let n = ordering.len();
    let mut reach = Vec::with_capacity(n);
    for p in 0..n {
        let v = ordering.vertex_at(p);
        let mut t = p;
        for q in p + 1..n {
            let w = ordering.vertex_at(q);
            if graph.same_part(v, w) {
                continue;
            }
            if !graph.has_edge(v, w) {
                break;
            }
            t = q;
        }
        reach.push(t);
    }
    Ok(reach)
}

/// Interval `[p, m_p + 1/2]` (1-indexed) for the vertex at each position `p`,
/// where `m_p` is its [`neighbor_reach`]. A valid model exactly when the
/// ordering is a generalized interval ordering.
pub fn build_reach_model(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<IntervalModel> {
    let reach = neighbor_reach(graph, ordering)?;
    let mut intervals = vec![HalfIntInterval { lo2: 0, hi2: 0 }; ordering.len()];
    for (p, &m) in reach.iter().enumerate() {
        intervals[ordering.vertex_at(p)] = HalfIntInterval {
            lo2: 2 * (p as i64 + 1),
            hi2: 2 * (m as i64 + 1) + 1,
        };
    }
    Ok(IntervalModel::new(intervals))
}

/// Interval `[p, r_p]` (1-indexed) where `r_p` ends the row run `R_p`, or
/// the point `[p, p]` when the run is empty. A valid model exactly when the
/// ordering is an r-interval ordering.
pub fn build_run_model(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<IntervalModel> {
    let coverage = compute_coverage(graph, ordering)?;
    let mut intervals = vec![HalfIntInterval { lo2: 0, hi2: 0 }; ordering.len()];
    for (p, run) in coverage.rows.iter().enumerate() {
        let end = run.end().unwrap_or(p);
        intervals[ordering.vertex_at(p)] = HalfIntInterval::from_integers(p as i64 + 1, end as i64 + 1);
    }
    Ok(IntervalModel::new(intervals))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mismatch {
    /// Adjacent, but the intervals are disjoint.
    MissingIntersection,
    /// Not adjacent, but the intervals meet.
    SpuriousIntersection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelCounterexample {
    pub u: usize,
    pub v: usize,
    pub mismatch: Mismatch,
}

/// First cross-partite pair `(u, v)`, `u < v`, whose adjacency disagrees with
/// the intersection of their intervals. `None` means the model is valid.
pub fn model_counterexample(graph: &RPartiteGraph, model: &IntervalModel) -> Result<Option<ModelCounterexample>> {
    if model.len() != graph.n() {
        return Err(Error::MissingInterval {
            graph: graph.n(),
            model: model.len(),
        });
    }
    let n = graph.n();
    for u in 0..n {
        for v in u + 1..n {
            if graph.same_part(u, v) {
                continue;
            }
            let adjacent = graph.has_edge(u, v);
            let meet = model.interval(u).intersects(&model.interval(v));
            if adjacent != meet {
                let mismatch = if adjacent {
                    Mismatch::MissingIntersection
                } else {
                    Mismatch::SpuriousIntersection
                };
                return Ok(Some(ModelCounterexample { u, v, mismatch }));
            }
        }
    }
    Ok(None)
}

pub fn verify_model(graph: &RPartiteGraph, model: &IntervalModel) -> Result<bool> {
    model_counterexample(graph, model).map(|c| c.is_none())
}

/// Vertices sorted by `(lo, hi, id)`.
pub fn ordering_from_model(model: &IntervalModel) -> VertexOrdering {
    let mut order: Vec<usize> = (0..model.len()).collect();
    order.sort_by_key(|&v| (model.interval(v), v));
    VertexOrdering::from_order(order).expect("sorted ids form a permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shown(m: &IntervalModel) -> Vec<String> {
        m.intervals().iter().map(|iv| iv.to_string()).collect()
    }

    #[test]
    fn reach_model_worked_example() {
        let m = build_reach_model(&fixtures::worked_example(), &VertexOrdering::identity(10)).unwrap();
        assert_eq!(
            shown(&m),
            [
                "[1,3.5]",
                "[2,4.5]",
                "[3,3.5]",
                "[4,6.5]",
                "[5,8.5]",
                "[6,9.5]",
                "[7,9.5]",
                "[8,10.5]",
                "[9,9.5]",
                "[10,10.5]"
            ]
        );
    }

    #[test]
    fn reach_model_small() {
        let single = RPartiteGraph::edgeless(1, vec![0]).unwrap();
        let m = build_reach_model(&single, &VertexOrdering::identity(1)).unwrap();
        assert_eq!(shown(&m), ["[1,1.5]"]);
        let k3 = fixtures::complete_three_parts();
        let m = build_reach_model(&k3, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(shown(&m), ["[1,3.5]", "[2,3.5]", "[3,3.5]"]);
    }

    #[test]
    fn run_model_worked_example() {
        let m = build_run_model(&fixtures::worked_example(), &VertexOrdering::identity(10)).unwrap();
        assert_eq!(
            shown(&m),
            ["[1,3]", "[2,4]", "[3,3]", "[4,6]", "[5,8]", "[6,9]", "[7,9]", "[8,10]", "[9,9]", "[10,10]"]
        );
        assert!(verify_model(&fixtures::worked_example(), &m).unwrap());
    }

    #[test]
    fn run_model_small() {
        let e = RPartiteGraph::edgeless(2, vec![0, 1, 1]).unwrap();
        let o = VertexOrdering::from_order(vec![2, 0, 1]).unwrap();
        let m = build_run_model(&e, &o).unwrap();
        assert_eq!(shown(&m), ["[2,2]", "[3,3]", "[1,1]"]);
        let m = build_run_model(&fixtures::complete_three_parts(), &VertexOrdering::identity(3)).unwrap();
        assert_eq!(shown(&m), ["[1,3]", "[2,3]", "[3,3]"]);
    }

    #[test]
    fn alt_model_verifies() {
        assert!(verify_model(&fixtures::worked_example(), &fixtures::worked_example_alt_model()).unwrap());
    }

    #[test]
    fn missing_intersection_reported() {
        let g = RPartiteGraph::from_edges(2, vec![0, 1], &[(0, 1)]).unwrap();
        let m = IntervalModel::new(vec![
            HalfIntInterval::from_integers(1, 1),
            HalfIntInterval::from_integers(3, 3),
        ]);
        assert_eq!(
            model_counterexample(&g, &m).unwrap(),
            Some(ModelCounterexample {
                u: 0,
                v: 1,
                mismatch: Mismatch::MissingIntersection
            })
        );
        let e = RPartiteGraph::edgeless(2, vec![0, 1]).unwrap();
        let m = IntervalModel::new(vec![
            HalfIntInterval::from_integers(1, 2),
            HalfIntInterval::from_integers(2, 3),
        ]);
        assert_eq!(
            model_counterexample(&e, &m).unwrap().map(|c| c.mismatch),
            Some(Mismatch::SpuriousIntersection)
        );
        assert!(matches!(
            verify_model(&e, &IntervalModel::new(vec![])),
            Err(Error::MissingInterval { graph: 2, model: 0 })
        ));
    }

    #[test]
    fn same_part_intervals_unconstrained() {
        let g = RPartiteGraph::edgeless(1, vec![0, 0]).unwrap();
        let m = IntervalModel::new(vec![HalfIntInterval::from_integers(1, 5); 2]);
        assert!(verify_model(&g, &m).unwrap());
    }

    #[test]
    fn closed_endpoints_touch() {
        let a = HalfIntInterval::from_half_units(2, 7).unwrap();
        let b = HalfIntInterval::from_half_units(7, 7).unwrap();
        let c = HalfIntInterval::from_half_units(8, 9).unwrap();
        assert!(a.intersects(&b));
        assert!(!a.intersects(&c));
        assert!(HalfIntInterval::from_half_units(3, 2).is_none());
        assert_eq!(
            HalfIntInterval::from_half_units(-3, -1).unwrap().to_string(),
            "[-1.5,-0.5]"
        );
    }

    #[test]
    fn alt_model_ordering_ties() {
        let o = ordering_from_model(&fixtures::worked_example_alt_model());
        // v3 = [3,3] sorts before v2 = [3,4].
        assert_eq!(o.order(), &[0, 2, 1, 3, 4, 5, 6, 7, 8, 9]);
        assert!(crate::orderings::is_generalized_interval_ordering(&fixtures::worked_example(), &o).unwrap());
    }

    #[test]
    fn reach_model_round_trip() {
        let g = fixtures::worked_example();
        let o = VertexOrdering::from_order(vec![9, 3, 0, 6, 1, 8, 2, 5, 4, 7]).unwrap();
        assert_eq!(ordering_from_model(&build_reach_model(&g, &o).unwrap()), o);
    }

    #[test]
    fn reaches_agree_on_worked_example() {
        let g = fixtures::worked_example();
        let id = VertexOrdering::identity(10);
        assert_eq!(neighbor_reach(&g, &id).unwrap(), consecutive_reach(&g, &id).unwrap());
    }
}
