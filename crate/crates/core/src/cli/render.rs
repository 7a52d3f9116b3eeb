//! Human-readable text output. Labels are 1-indexed: vertex id `v` prints
//! as `v{v+1}`, part `k` as `X{k+1}`, position `p` as `p+1`.

use std::fmt::Write;

use crate::error::Result;
use crate::graph::RPartiteGraph;
use crate::models::{model_counterexample, IntervalModel};
use crate::orderings::{compute_coverage, Run, VertexOrdering};

fn label(v: usize) -> String {
    format!("v{}", v + 1)
}

fn one_based(ps: &[usize]) -> String {
    ps.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn describe_run(out: &mut String, name: &str, anchor: usize, run: &Run) {
    let Some(end) = run.end() else {
        return;
    };
    let start = run.start.expect("nonempty run has a start");
    let _ = write!(
        out,
        "  {name}_{}: s={} span {}..{} members {{{}}}",
        anchor + 1,
        start + 1,
        start + 1,
        end + 1,
        one_based(&run.cells)
    );
    if !run.skipped.is_empty() {
        let _ = write!(out, " same-part skip {{{}}}", one_based(&run.skipped));
    }
    out.push('\n');
}

/// The ordered 0/1 adjacency matrix followed by every nonempty row run
/// `R_i` and column run `C_j` and the list of uncovered 1-cells.
pub fn annotate_matrix(graph: &RPartiteGraph, ordering: &VertexOrdering) -> Result<String> {
    let coverage = compute_coverage(graph, ordering)?;
    let n = ordering.len();
    let labels: Vec<String> = ordering.order().iter().map(|&v| label(v)).collect();
    let width = labels.iter().map(String::len).max().unwrap_or(1) + 1;

    let mut out = String::new();
    let _ = write!(out, "{:width$}", "");
    for l in &labels {
        let _ = write!(out, "{l:>width$}");
    }
    out.push('\n');
    for (p, l) in labels.iter().enumerate() {
        let _ = write!(out, "{l:<width$}");
        for q in 0..n {
            let bit = u8::from(graph.has_edge(ordering.vertex_at(p), ordering.vertex_at(q)));
            let _ = write!(out, "{bit:>width$}");
        }
        out.push('\n');
    }

    out.push_str("parts:");
    for &v in ordering.order() {
        let _ = write!(out, " {}=X{}", label(v), graph.part(v) + 1);
    }
    out.push('\n');

    out.push_str("row runs:\n");
    for (i, run) in coverage.rows.iter().enumerate() {
        describe_run(&mut out, "R", i, run);
    }
    out.push_str("column runs:\n");
    for (j, run) in coverage.columns.iter().enumerate() {
        describe_run(&mut out, "C", j, run);
    }
    if coverage.uncovered.is_empty() {
        out.push_str("uncovered: none\n");
    } else {
        let cells: Vec<String> = coverage
            .uncovered
            .iter()
            .map(|&(p, q)| format!("({},{})", p + 1, q + 1))
            .collect();
        let _ = writeln!(out, "uncovered: {}", cells.join(" "));
    }
    Ok(out)
}

/// One line per vertex in left-endpoint order, drawn over a shared axis in
/// half-unit columns: `[` and `]` mark endpoints, `*` marks a point interval.
pub fn render_ascii(model: &IntervalModel, graph: &RPartiteGraph) -> Result<String> {
    // Same length check as verification; the verdict itself is not needed.
    model_counterexample(graph, model)?;
    let ivs = model.intervals();
    let lo = ivs.iter().map(|iv| iv.lo2()).min().unwrap_or(0).div_euclid(2) * 2;
    let hi = ivs.iter().map(|iv| iv.hi2()).max().unwrap_or(0);
    let hi = hi + hi.rem_euclid(2);
    let columns = (hi - lo + 1) as usize;

    let mut order: Vec<usize> = (0..model.len()).collect();
    order.sort_by_key(|&v| (ivs[v], v));
    let tags: Vec<String> = order
        .iter()
        .map(|&v| format!("{} X{}", label(v), graph.part(v) + 1))
        .collect();
    let pad = tags.iter().map(String::len).max().unwrap_or(0) + 2;

    let mut ticks = vec![b' '; columns];
    let mut numbers = vec![b' '; columns];
    let mut free_from = 0;
    for x2 in (lo..=hi).step_by(2) {
        let col = (x2 - lo) as usize;
        ticks[col] = b'|';
        let text = (x2 / 2).to_string();
        if col >= free_from && col + text.len() <= columns {
            numbers[col..col + text.len()].copy_from_slice(text.as_bytes());
            free_from = col + text.len() + 1;
        }
    }
    let mut out = String::new();
    let axis = |bytes: &[u8]| String::from_utf8_lossy(bytes).trim_end().to_string();
    let _ = writeln!(out, "{:pad$}{}", "", axis(&numbers));
    let _ = writeln!(out, "{:pad$}{}", "", axis(&ticks));
    for (tag, &v) in tags.iter().zip(&order) {
        let iv = ivs[v];
        let mut line = vec![b' '; columns];
        for x2 in iv.lo2()..=iv.hi2() {
            line[(x2 - lo) as usize] = b'-';
        }
        if iv.is_point() {
            line[(iv.lo2() - lo) as usize] = b'*';
        } else {
            line[(iv.lo2() - lo) as usize] = b'[';
            line[(iv.hi2() - lo) as usize] = b']';
        }
        let _ = writeln!(out, "{tag:pad$}{}  {iv}", axis(&line));
    }
    Ok(out)
}
