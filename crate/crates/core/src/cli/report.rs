//! Structured reports. A report reuses the instance keys (`n`, `r`,
//! `parts`, `edges`, `ordering`, `intervals_x2`) so it can be fed back in
//! as an instance. Vertex ids and positions are 0-indexed throughout; only
//! the text output switches to 1-indexed labels.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::RPartiteGraph;
use crate::instance::intervals_x2;
use crate::models::{IntervalModel, Mismatch, ModelCounterexample};
use crate::orderings::{CoverageReport, GioViolation, PatternWitness, Run, VertexOrdering};

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intervals_x2: Option<Vec<[i64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<BTreeMap<&'static str, bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub patterns: Option<Vec<PatternJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<CoverageJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<BTreeMap<&'static str, serde_json::Value>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(verdict: &'static str) -> Self {
        Report {
            verdict,
            ..Report::default()
        }
    }

    pub fn with_graph(mut self, graph: &RPartiteGraph) -> Self {
        self.n = Some(graph.n());
        self.r = Some(graph.r());
        self.parts = Some(graph.parts().to_vec());
        self.edges = Some(graph.edges().into_iter().map(|(u, v)| [u, v]).collect());
        self
    }

    pub fn with_ordering(mut self, ordering: &VertexOrdering) -> Self {
        self.ordering = Some(ordering.order().to_vec());
        self
    }

    pub fn with_model(mut self, model: &IntervalModel) -> Self {
        let x2 = intervals_x2(model);
        self.intervals = Some(x2.iter().map(|&[a, b]| [a as f64 / 2.0, b as f64 / 2.0]).collect());
        self.intervals_x2 = Some(x2);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson {
    /// Positions `[lower, upper]` of the offending edge.
    pub edge: [usize; 2],
    pub middle: usize,
}

impl From<GioViolation> for ViolationJson {
    fn from(v: GioViolation) -> Self {
        ViolationJson {
            edge: [v.lower, v.upper],
            middle: v.middle,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternJson {
    pub kind: String,
    pub positions: [usize; 3],
    pub vertices: [usize; 3],
}

impl From<&PatternWitness> for PatternJson {
    fn from(w: &PatternWitness) -> Self {
        PatternJson {
            kind: w.kind.to_string(),
            positions: w.positions,
            vertices: w.vertices,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunJson {
    pub index: usize,
    pub s: Option<usize>,
    pub cells: Vec<usize>,
    pub end: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverageJson {
    pub rows: Vec<RunJson>,
    pub columns: Vec<RunJson>,
    pub uncovered: Vec<[usize; 2]>,
}

fn run_json(index: usize, run: &Run) -> RunJson {
    RunJson {
        index,
        s: run.start,
        cells: run.cells.clone(),
        end: run.end(),
        skipped: run.skipped.clone(),
    }
}

impl From<&CoverageReport> for CoverageJson {
    fn from(c: &CoverageReport) -> Self {
        CoverageJson {
            rows: c.rows.iter().enumerate().map(|(i, r)| run_json(i, r)).collect(),
            columns: c.columns.iter().enumerate().map(|(j, r)| run_json(j, r)).collect(),
            uncovered: c.uncovered.iter().map(|&(p, q)| [p, q]).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleJson {
    pub pair: [usize; 2],
    pub failure: &'static str,
}

impl From<ModelCounterexample> for CounterexampleJson {
    fn from(c: ModelCounterexample) -> Self {
        CounterexampleJson {
            pair: [c.u, c.v],
            failure: match c.mismatch {
                Mismatch::MissingIntersection => "missing intersection",
                Mismatch::SpuriousIntersection => "spurious intersection",
            },
        }
    }
}
