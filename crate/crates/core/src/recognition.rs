//! Recognition of interval r-graphs by certificate search.
//!
//! [`recognize`] builds orderings left to right and rejects a placement as
//! soon as it creates an edge whose lower endpoint already has a
//! different-part non-neighbor between the two. Such a violation never
//! disappears under extension, so the pruning is sound and every completed
//! ordering is a generalized interval ordering. Dead search states are
//! memoized on `(placed, blocked)` which fully determines the remaining
//! subproblem.
//!
//! [`recognize_exhaustive`] is the brute-force oracle: it enumerates every
//! ordering and evaluates all three characterizations on each.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::RPartiteGraph;
use crate::models::{build_reach_model, build_run_model, verify_model, IntervalModel};
use crate::orderings::{
    find_forbidden_patterns, is_generalized_interval_ordering, is_r_interval_ordering, VertexOrdering,
};

pub const DEFAULT_ORACLE_CAP: usize = 9;

/// Largest instance the bitmask search accepts.
pub const SEARCH_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub ordering: VertexOrdering,
    pub model: IntervalModel,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Accepted placements (search) or orderings evaluated (oracle).
    pub nodes_expanded: u64,
    /// Subtrees skipped because their state was already known to fail.
    pub memo_hits: u64,
    /// Oracle only: orderings enumerated.
    pub orderings_examined: Option<u64>,
    /// Oracle only: orderings on which all three checks passed.
    pub valid_orderings: Option<u64>,
    /// Oracle only: orderings on which the three checks disagreed.
    pub disagreements: Option<u64>,
    /// Oracle only: the first ordering with a disagreement.
    pub first_disagreement: Option<VertexOrdering>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionResult {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub stats: SearchStats,
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

/// Checks a candidate certificate end to end; both model constructions
/// must verify and all three ordering checks must pass.
pub fn certify(graph: &RPartiteGraph, ordering: VertexOrdering) -> Result<Certificate> {
    let reject = |what: &str| {
        Err(Error::CertificateRejected(format!(
            "{what} failed on {:?}",
            ordering.order()
        )))
    };
    if !is_generalized_interval_ordering(graph, &ordering)? {
        return reject("generalized interval ordering check");
    }
    if !find_forbidden_patterns(graph, &ordering, Some(1))?.is_empty() {
        return reject("forbidden pattern scan");
    }
    if !is_r_interval_ordering(graph, &ordering)? {
        return reject("row/column run coverage");
    }
    let model = build_reach_model(graph, &ordering)?;
    if !verify_model(graph, &model)? {
        return reject("neighbor-reach model verification");
    }
    if !verify_model(graph, &build_run_model(graph, &ordering)?)? {
        return reject("run model verification");
    }
    Ok(Certificate { ordering, model })
}

struct Search<'a> {
    n: usize,
    adj: Vec<u64>,
    other_part: Vec<u64>,
    order: Vec<usize>,
    dead: HashSet<(u64, u64)>,
    stats: &'a mut SearchStats,
}

impl Search<'_> {
    /// `blocked` holds placed vertices that already have a different-part
    /// non-neighbor placed after them; none of them may gain a new neighbor.
    fn extend(&mut self, placed: u64, blocked: u64) -> bool {
        if self.order.len() == self.n {
            return true;
        }
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let unplaced = all & !placed;
        // Placed vertices with no unplaced neighbor can no longer matter.
        let relevant = (0..self.n)
            .filter(|&v| blocked >> v & 1 == 1 && self.adj[v] & unplaced != 0)
            .fold(0u64, |acc, v| acc | 1 << v);
        let key = (placed, relevant);
        if self.dead.contains(&key) {
            self.stats.memo_hits += 1;
            return false;
        }
        let mut candidates = unplaced;
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if self.adj[w] & relevant != 0 {
                continue;
            }
            self.stats.nodes_expanded += 1;
            let newly_blocked = placed & self.other_part[w] & !self.adj[w];
            self.order.push(w);
            if self.extend(placed | 1 << w, relevant | newly_blocked) {
                return true;
            }
            self.order.pop();
        }
        self.dead.insert(key);
        false
    }
}

/// Searches for the lexicographically first (by vertex sequence) ordering
/// satisfying the generalized interval ordering condition.
pub fn recognize(graph: &RPartiteGraph) -> Result<RecognitionResult> {
    let n = graph.n();
    if n > SEARCH_LIMIT {
        return Err(Error::AboveSearchLimit { n, limit: SEARCH_LIMIT });
    }
    let mask = |f: &dyn Fn(usize) -> bool| (0..n).filter(|&w| f(w)).fold(0u64, |acc, w| acc | 1 << w);
    let adj: Vec<u64> = (0..n).map(|v| mask(&|w| graph.has_edge(v, w))).collect();
    let other_part: Vec<u64> = (0..n).map(|v| mask(&|w| !graph.same_part(v, w))).collect();

    let mut stats = SearchStats::default();
    let mut search = Search {
        n,
        adj,
        other_part,
        order: Vec::with_capacity(n),
        dead: HashSet::new(),
        stats: &mut stats,
    };
    let found = search.extend(0, 0);
    let order = std::mem::take(&mut search.order);
    if !found {
        return Ok(RecognitionResult {
            verdict: Verdict::No,
            certificate: None,
            stats,
        });
    }
    let certificate = certify(graph, VertexOrdering::from_order(order)?)?;
    Ok(RecognitionResult {
        verdict: Verdict::Yes,
        certificate: Some(certificate),
        stats,
    })
}

/// In-place lexicographic successor; `false` after the last permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn recognize_exhaustive(graph: &RPartiteGraph) -> Result<RecognitionResult> {
    recognize_exhaustive_with_cap(graph, DEFAULT_ORACLE_CAP)
}

/// Enumerates all `n!` orderings in lexicographic order. The verdict is YES
/// when some ordering passes all three checks; the certificate is built on
/// the first such ordering.
pub fn recognize_exhaustive_with_cap(graph: &RPartiteGraph, cap: usize) -> Result<RecognitionResult> {
    let n = graph.n();
    if n > cap {
        return Err(Error::AboveOracleCap { n, cap });
    }
    let mut stats = SearchStats::default();
    let (mut examined, mut valid, mut disagreements) = (0u64, 0u64, 0u64);
    let mut first_valid = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ordering = VertexOrdering::from_order(perm.clone())?;
        examined += 1;
        let gio = is_generalized_interval_ordering(graph, &ordering)?;
        let pattern_free = find_forbidden_patterns(graph, &ordering, Some(1))?.is_empty();
        let covered = is_r_interval_ordering(graph, &ordering)?;
        if gio != pattern_free || gio != covered {
            disagreements += 1;
            stats.first_disagreement.get_or_insert_with(|| ordering.clone());
        } else if gio {
            valid += 1;
            first_valid.get_or_insert(ordering);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    stats.nodes_expanded = examined;
    stats.orderings_examined = Some(examined);
    stats.valid_orderings = Some(valid);
    stats.disagreements = Some(disagreements);
    let certificate = first_valid.map(|o| certify(graph, o)).transpose()?;
    Ok(RecognitionResult {
        verdict: if certificate.is_some() {
            Verdict::Yes
        } else {
            Verdict::No
        },
        certificate,
        stats,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub search: Verdict,
    pub oracle: Verdict,
    /// Both recognizers returned the same certifying ordering (or both NO).
    pub same_certificate: bool,
    pub orderings_examined: u64,
    /// Orderings on which the three checks gave the same answer.
    pub three_way_agreements: u64,
    pub disagreements: u64,
    /// Instance dump reproducing a failure, shrunk to a minimal vertex set.
    pub reproducer: Option<String>,
}

impl CrossValidation {
    pub fn agrees(&self) -> bool {
        self.search == self.oracle && self.same_certificate && self.disagreements == 0
    }
}

fn discrepancy(graph: &RPartiteGraph, cap: usize) -> Result<bool> {
    let search = recognize(graph)?;
    let oracle = recognize_exhaustive_with_cap(graph, cap)?;
    let same = search.certificate.as_ref().map(|c| &c.ordering) == oracle.certificate.as_ref().map(|c| &c.ordering);
    Ok(search.verdict != oracle.verdict || !same || oracle.stats.disagreements != Some(0))
}

/// Greedily deletes vertices while `failing` keeps holding on the induced
/// subgraph. The result is minimal with respect to single-vertex deletion.
pub fn shrink_instance(
    graph: &RPartiteGraph,
    mut failing: impl FnMut(&RPartiteGraph) -> Result<bool>,
) -> Result<RPartiteGraph> {
    let mut current = graph.clone();
    'outer: loop {
        if current.n() == 1 {
            return Ok(current);
        }
        for drop in 0..current.n() {
            let keep: Vec<usize> = (0..current.n()).filter(|&v| v != drop).collect();
            let candidate = current.induced_subgraph(&keep)?;
            if failing(&candidate)? {
                current = candidate;
                continue 'outer;
            }
        }
        return Ok(current);
    }
}

pub fn cross_validate(graph: &RPartiteGraph) -> Result<CrossValidation> {
    cross_validate_with_cap(graph, DEFAULT_ORACLE_CAP)
}

pub fn cross_validate_with_cap(graph: &RPartiteGraph, cap: usize) -> Result<CrossValidation> {
    let search = recognize(graph)?;
    let oracle = recognize_exhaustive_with_cap(graph, cap)?;
    let examined = oracle.stats.orderings_examined.unwrap_or(0);
    let disagreements = oracle.stats.disagreements.unwrap_or(0);
    let same_certificate =
        search.certificate.as_ref().map(|c| &c.ordering) == oracle.certificate.as_ref().map(|c| &c.ordering);
    let mut report = CrossValidation {
        search: search.verdict,
        oracle: oracle.verdict,
        same_certificate,
        orderings_examined: examined,
        three_way_agreements: examined - disagreements,
        disagreements,
        reproducer: None,
    };
    if !report.agrees() {
        let minimal = shrink_instance(graph, |g| discrepancy(g, cap))?;
        let ordering = recognize_exhaustive_with_cap(&minimal, cap)?.stats.first_disagreement;
        report.reproducer = Some(
            crate::instance::Instance::from_graph(minimal)
                .with_ordering(ordering)
                .to_json(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn permutations_are_lexicographic() {
        let mut v = vec![0, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(
            seen,
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        );
        let mut one = vec![0];
        assert!(!next_permutation(&mut one));
    }

    #[test]
    fn worked_example_is_yes() {
        let g = fixtures::worked_example();
        let res = recognize(&g).unwrap();
        assert!(res.is_yes());
        let cert = res.certificate.unwrap();
        assert!(verify_model(&g, &cert.model).unwrap());
    }

    #[test]
    fn edgeless_is_identity() {
        let g = RPartiteGraph::edgeless(2, vec![1, 0, 1, 0, 0]).unwrap();
        let res = recognize(&g).unwrap();
        assert_eq!(res.certificate.unwrap().ordering, VertexOrdering::identity(5));
    }

    #[test]
    fn c6_is_no() {
        let g = fixtures::c6();
        assert_eq!(recognize(&g).unwrap().verdict, Verdict::No);
        let oracle = recognize_exhaustive(&g).unwrap();
        assert_eq!(oracle.verdict, Verdict::No);
        assert_eq!(oracle.stats.orderings_examined, Some(720));
        assert_eq!(oracle.stats.disagreements, Some(0));
    }

    #[test]
    fn single_vertex_oracle() {
        let g = RPartiteGraph::edgeless(1, vec![0]).unwrap();
        let res = recognize_exhaustive(&g).unwrap();
        assert!(res.is_yes());
        assert_eq!(res.stats.orderings_examined, Some(1));
    }

    #[test]
    fn isolated_middle_part() {
        // parts A, B, C; single edge A-C; B isolated.
        let g = RPartiteGraph::from_edges(3, vec![0, 1, 2], &[(0, 2)]).unwrap();
        let res = recognize_exhaustive(&g).unwrap();
        assert!(res.is_yes());
        assert_eq!(res.stats.orderings_examined, Some(6));
        // [0,1,2] puts B between the edge's endpoints; [0,2,1] is first valid.
        assert_eq!(res.certificate.unwrap().ordering.order(), &[0, 2, 1]);
    }

    #[test]
    fn oracle_cap_enforced() {
        let g = RPartiteGraph::edgeless(1, vec![0; 10]).unwrap();
        assert_eq!(recognize_exhaustive(&g), Err(Error::AboveOracleCap { n: 10, cap: 9 }));
        assert!(recognize_exhaustive_with_cap(&g, 3).is_err());
    }

    #[test]
    fn search_limit_enforced() {
        let g = RPartiteGraph::edgeless(1, vec![0; 65]).unwrap();
        assert!(matches!(recognize(&g), Err(Error::AboveSearchLimit { n: 65, .. })));
        let g = RPartiteGraph::edgeless(2, (0..64).map(|v| v % 2).collect()).unwrap();
        assert!(recognize(&g).unwrap().is_yes());
    }

    #[test]
    fn certify_rejects_bad_ordering() {
        let g = fixtures::c6();
        assert!(matches!(
            certify(&g, VertexOrdering::identity(6)),
            Err(Error::CertificateRejected(_))
        ));
    }

    #[test]
    fn shrinker_reaches_minimal_failure() {
        // Failure predicate: the graph contains a same-part pair with a
        // common neighbor. Minimal instances have exactly three vertices.
        let g = fixtures::worked_example();
        let failing = |h: &RPartiteGraph| -> Result<bool> {
            Ok((0..h.n()).any(|c| {
                let nb: Vec<usize> = h.neighbors(c).collect();
                nb.iter().any(|&a| nb.iter().any(|&b| a < b && h.same_part(a, b)))
            }))
        };
        let min = shrink_instance(&g, failing).unwrap();
        assert_eq!(min.n(), 3);
        assert_eq!(min.edge_count(), 2);
    }

    #[test]
    fn cross_validate_small() {
        let g = RPartiteGraph::edgeless(2, vec![0, 1, 0, 1]).unwrap();
        let cv = cross_validate(&g).unwrap();
        assert!(cv.agrees());
        assert_eq!(cv.search, Verdict::Yes);
        assert!(cv.reproducer.is_none());
    }
}
