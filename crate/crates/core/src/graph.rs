//! The r-partite graph data model, instance generators and the ordered
//! adjacency matrix.
//!
//! Vertices are `0..n`. Every vertex carries a partite-set label below the
//! declared `r`; empty partite sets are allowed. Adjacency is stored as one
//! bitset row per vertex.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::models::{HalfIntInterval, IntervalModel};
use crate::orderings::VertexOrdering;

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RPartiteGraph {
    r: usize,
    part: Vec<usize>,
    rows: Vec<Vec<u64>>,
    edge_count: usize,
}

impl RPartiteGraph {
    /// Graph with the given part labels and no edges.
    pub fn edgeless(r: usize, part: Vec<usize>) -> Result<Self> {
        if part.is_empty() {
            return Err(Error::Malformed("graph must have at least one vertex".into()));
        }
        if r == 0 {
            return Err(Error::Malformed("r must be at least 1".into()));
        }
        if let Some((vertex, &p)) = part.iter().enumerate().find(|(_, &p)| p >= r) {
            return Err(Error::PartOutOfRange { vertex, part: p, r });
        }
        let words = part.len().div_ceil(WORD);
        let rows = vec![vec![0u64; words]; part.len()];
        Ok(RPartiteGraph {
            r,
            part,
            rows,
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged.
    pub fn from_edges(r: usize, part: Vec<usize>, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges_reporting(r, part, edges).map(|(g, _)| g)
    }

    /// Like [`RPartiteGraph::from_edges`], also returning every edge that was
    /// dropped as a duplicate, in input order.
    pub fn from_edges_reporting(
        r: usize,
        part: Vec<usize>,
        edges: &[(usize, usize)],
    ) -> Result<(Self, Vec<(usize, usize)>)> {
        let mut g = Self::edgeless(r, part)?;
        let mut duplicates = Vec::new();
        for &(u, v) in edges {
            if !g.add_edge(u, v)? {
                duplicates.push((u, v));
            }
        }
        Ok((g, duplicates))
    }

    /// Inserts the edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.part[u] == self.part[v] {
            return Err(Error::SamePartiteEdge(u, v));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.part.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn part(&self, v: usize) -> usize {
        self.part[v]
    }

    pub fn parts(&self) -> &[usize] {
        &self.part
    }

    pub fn same_part(&self, u: usize, v: usize) -> bool {
        self.part[u] == self.part[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Induced subgraph on `keep`; vertex `keep[i]` becomes vertex `i`.
    /// The declared `r` is preserved.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Self> {
        let part = keep
            .iter()
            .map(|&v| {
                if v < self.n() {
                    Ok(self.part[v])
                } else {
                    Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sub = Self::edgeless(self.r, part)?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(i, j)?;
                }
            }
        }
        Ok(sub)
    }

    /// Re-checks every structural invariant from scratch.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 || self.r == 0 {
            return Err(Error::Malformed("empty graph or r = 0".into()));
        }
        let mut count = 0;
        for u in 0..n {
            if self.part[u] >= self.r {
                return Err(Error::PartOutOfRange {
                    vertex: u,
                    part: self.part[u],
                    r: self.r,
                });
            }
            if self.has_edge(u, u) {
                return Err(Error::SelfLoop(u));
            }
            for v in self.neighbors(u) {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if !self.has_edge(v, u) {
                    return Err(Error::Malformed(format!("asymmetric adjacency at ({u}, {v})")));
                }
                if self.same_part(u, v) {
                    return Err(Error::SamePartiteEdge(u.min(v), u.max(v)));
                }
                count += 1;
            }
        }
        if count != 2 * self.edge_count {
            return Err(Error::Malformed("edge count out of sync".into()));
        }
        Ok(())
    }
}

/// Parameters for [`random_rpartite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSeedSpec {
    pub n: usize,
    pub r: usize,
    pub p: f64,
    pub seed: u64,
}

impl InstanceSeedSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSeedSpec("n must be at least 1".into()));
        }
        if self.r == 0 {
            return Err(Error::InvalidSeedSpec("r must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidSeedSpec(format!(
                "edge density {} outside [0, 1]",
                self.p
            )));
        }
        Ok(())
    }
}

/// Uniform part labels, then each cross-partite pair independently with
/// probability `p`.
pub fn random_rpartite(spec: &InstanceSeedSpec) -> Result<RPartiteGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let part: Vec<usize> = (0..spec.n).map(|_| rng.gen_range(0..spec.r)).collect();
    let mut g = RPartiteGraph::edgeless(spec.r, part)?;
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            if !g.same_part(u, v) && rng.gen_bool(spec.p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Draws `n` closed intervals whose `2n` endpoints are distinct integers in
/// `1..=4n`, labels vertices with uniform random parts, and connects every
/// cross-partite pair whose intervals meet.
pub fn random_interval_instance(n: usize, r: usize, seed: u64) -> Result<(RPartiteGraph, IntervalModel)> {
    InstanceSeedSpec { n, r, p: 0.0, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = index::sample(&mut rng, 4 * n, 2 * n).into_vec();
    let intervals: Vec<HalfIntInterval> = points
        .chunks_exact(2)
        .map(|pair| {
            let (a, b) = (pair[0] as i64 + 1, pair[1] as i64 + 1);
            HalfIntInterval::from_integers(a.min(b), a.max(b))
        })
        .collect();
    let part: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
    let mut g = RPartiteGraph::edgeless(r, part)?;
    for u in 0..n {
        for v in u + 1..n {
            if !g.same_part(u, v) && intervals[u].intersects(&intervals[v]) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok((g, IntervalModel::new(intervals)))
}

/// The adjacency matrix with rows and columns arranged by `ordering`:
/// entry `(p, q)` is the adjacency of the vertices at positions `p` and `q`.
pub fn adjacency_matrix(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<Vec<Vec<bool>>> {
    ordering.check_against(graph)?;
    let order = ordering.order();
    Ok(order
        .iter()
        .map(|&u| order.iter().map(|&v| graph.has_edge(u, v)).collect())
        .collect())
}
