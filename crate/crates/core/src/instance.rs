//! JSON instance format.
//!
//! ```json
//! {"n": 3, "r": 2, "parts": [0, 1, 1], "edges": [[0, 1]],
//!  "ordering": [2, 0, 1], "intervals_x2": [[2, 4], [3, 3], [6, 6]]}
//! ```
//!
//! Vertex ids are 0-indexed. `ordering[p]` is the vertex at position `p`.
//! Intervals are per vertex id. `intervals_x2` carries doubled endpoints
//! and is what this crate writes; `intervals` accepts plain numbers whose
//! fractional part is `.0` or `.5`. Unknown keys are ignored so reports can
//! be fed back in as instances.

use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};
use crate::graph::RPartiteGraph;
use crate::models::{HalfIntInterval, IntervalModel};
use crate::orderings::VertexOrdering;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Document {
    n: usize,
    r: usize,
    parts: Vec<usize>,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ordering: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intervals: Option<Vec<[Number; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intervals_x2: Option<Vec<[i64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: RPartiteGraph,
    pub ordering: Option<VertexOrdering>,
    pub model: Option<IntervalModel>,
    /// Non-fatal findings from parsing, e.g. duplicate edges.
    pub warnings: Vec<String>,
}

fn doubled(vertex: usize, x: &Number) -> Result<i64> {
    let bad = |reason: String| Error::InvalidInterval { vertex, reason };
    if let Some(i) = x.as_i64() {
        return i
            .checked_mul(2)
            .ok_or_else(|| bad(format!("endpoint {i} out of range")));
    }
    let f = x.as_f64().ok_or_else(|| bad(format!("endpoint {x} is not a number")))?;
    let twice = f * 2.0;
    if !twice.is_finite() || twice.fract() != 0.0 || twice.abs() > (1u64 << 52) as f64 {
        return Err(bad(format!("endpoint {x} is not a multiple of 0.5")));
    }
    Ok(twice as i64)
}

fn interval(vertex: usize, lo2: i64, hi2: i64) -> Result<HalfIntInterval> {
    HalfIntInterval::from_half_units(lo2, hi2).ok_or_else(|| Error::InvalidInterval {
        vertex,
        reason: "left endpoint exceeds right endpoint".into(),
    })
}

impl Instance {
    pub fn from_graph(graph: RPartiteGraph) -> Self {
        Instance {
            graph,
            ordering: None,
            model: None,
            warnings: Vec::new(),
        }
    }

    pub fn with_ordering(mut self, ordering: Option<VertexOrdering>) -> Self {
        self.ordering = ordering;
        self
    }

    pub fn with_model(mut self, model: Option<IntervalModel>) -> Self {
        self.model = model;
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if doc.parts.len() != doc.n {
            return Err(Error::Malformed(format!(
                "\"parts\" has {} entries but n = {}",
                doc.parts.len(),
                doc.n
            )));
        }
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
        let (graph, duplicates) = RPartiteGraph::from_edges_reporting(doc.r, doc.parts, &edges)?;
        let warnings = duplicates
            .into_iter()
            .map(|(u, v)| format!("duplicate edge ({u}, {v}) ignored"))
            .collect();

        let ordering = doc.ordering.map(VertexOrdering::from_order).transpose()?;
        if let Some(o) = &ordering {
            o.check_against(&graph)?;
        }

        let from_x2 = doc
            .intervals_x2
            .map(|ivs| {
                ivs.iter()
                    .enumerate()
                    .map(|(v, &[lo2, hi2])| interval(v, lo2, hi2))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let from_plain = doc
            .intervals
            .map(|ivs| {
                ivs.iter()
                    .enumerate()
                    .map(|(v, [lo, hi])| interval(v, doubled(v, lo)?, doubled(v, hi)?))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        let intervals = match (from_x2, from_plain) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Malformed("\"intervals\" and \"intervals_x2\" disagree".into()));
            }
            (a, b) => a.or(b),
        };
        if let Some(ivs) = &intervals {
            if ivs.len() != graph.n() {
                return Err(Error::MissingInterval {
                    graph: graph.n(),
                    model: ivs.len(),
                });
            }
        }
        Ok(Instance {
            graph,
            ordering,
            model: intervals.map(IntervalModel::new),
            warnings,
        })
    }

    pub fn to_json(&self) -> String {
        let doc = Document {
            n: self.graph.n(),
            r: self.graph.r(),
            parts: self.graph.parts().to_vec(),
            edges: self.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            ordering: self.ordering.as_ref().map(|o| o.order().to_vec()),
            intervals: None,
            intervals_x2: self.model.as_ref().map(intervals_x2),
        };
        serde_json::to_string_pretty(&doc).expect("instance serializes")
    }
}

pub fn intervals_x2(model: &IntervalModel) -> Vec<[i64; 2]> {
    model.intervals().iter().map(|iv| [iv.lo2(), iv.hi2()]).collect()
}

/// Parses just the graph part of an instance document. Duplicate edges are
/// dropped silently; use [`Instance::parse`] to see them.
pub fn parse_graph(text: &str) -> Result<RPartiteGraph> {
    Instance::parse(text).map(|i| i.graph)
}
