//! Small named instances used by tests, examples and the CLI.

use crate::graph::RPartiteGraph;
use crate::models::{HalfIntInterval, IntervalModel};

/// The 3-partite graph on `v1..v10` (0-indexed here) with parts
/// red `{v1, v6, v10}`, green `{v2, v8, v9}`, black `{v3, v4, v5, v7}`.
/// Its identity ordering is an r-interval ordering.
pub fn worked_example() -> RPartiteGraph {
    const RED: usize = 0;
    const GREEN: usize = 1;
    const BLACK: usize = 2;
    let part = vec![RED, GREEN, BLACK, BLACK, BLACK, RED, BLACK, GREEN, GREEN, RED];
    let edges = [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (4, 6),
        (5, 6),
        (5, 8),
        (6, 7),
        (6, 8),
        (6, 9),
        (7, 8),
        (7, 9),
        (8, 10),
    ]
    .map(|(u, v)| (u - 1, v - 1));
    RPartiteGraph::from_edges(3, part, &edges).expect("fixture is valid")
}

/// A second valid model of [`worked_example`]. It differs from the run
/// construction only at `v2`, which gets `[3, 4]` instead of `[2, 4]`.
pub fn worked_example_alt_model() -> IntervalModel {
    let ends = [
        (1, 3),
        (3, 4),
        (3, 3),
        (4, 6),
        (5, 8),
        (6, 9),
        (7, 9),
        (8, 10),
        (9, 9),
        (10, 10),
    ];
    IntervalModel::new(
        ends.iter()
            .map(|&(lo, hi)| HalfIntInterval::from_integers(lo, hi))
            .collect(),
    )
}

/// The 6-cycle `x1 y1 x2 y2 x3 y3` as a bipartite graph. Not an interval
/// bigraph.
pub fn c6() -> RPartiteGraph {
    let part = vec![0, 1, 0, 1, 0, 1];
    let edges: Vec<(usize, usize)> = (0..6).map(|v| (v, (v + 1) % 6)).collect();
    RPartiteGraph::from_edges(2, part, &edges).expect("fixture is valid")
}

/// Triangle with every vertex in its own part.
pub fn complete_three_parts() -> RPartiteGraph {
    RPartiteGraph::from_edges(3, vec![0, 1, 2], &[(0, 1), (0, 2), (1, 2)]).expect("fixture is valid")
}
