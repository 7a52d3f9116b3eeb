//! Brute-force references written directly from the definitions. Nothing
//! here calls into the checks it is used to test.

#![allow(dead_code)]

use irgraph::{IntervalModel, RPartiteGraph, VertexOrdering};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every edge `(j, i)` with `j < i` (positions) has each other-part vertex
/// strictly between them adjacent to the vertex at `j`.
pub fn naive_gio(g: &RPartiteGraph, order: &[usize]) -> bool {
    let n = order.len();
    for j in 0..n {
        for i in j + 1..n {
            let (vj, vi) = (order[j], order[i]);
            if !g.has_edge(vj, vi) {
                continue;
            }
            for &vl in &order[j + 1..i] {
                if g.part(vl) != g.part(vj) && !g.has_edge(vl, vj) {
                    return false;
                }
            }
        }
    }
    true
}

/// `(kind, [i, j, k])` for every triple of positions in the three
/// configurations, classified from scratch.
pub fn naive_patterns(g: &RPartiteGraph, order: &[usize]) -> Vec<(&'static str, [usize; 3])> {
    let n = order.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (order[i], order[j], order[k]);
                let (pa, pb, pc) = (g.part(a), g.part(b), g.part(c));
                let (ab, ac, bc) = (g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c));
                if pb == pc && pb != pa && ac && !ab {
                    out.push(("P1", [i, j, k]));
                }
                let distinct = pa != pb && pb != pc && pa != pc;
                if distinct && ac && !ab && !bc {
                    out.push(("P2", [i, j, k]));
                }
                if distinct && ac && bc && !ab {
                    out.push(("P3", [i, j, k]));
                }
            }
        }
    }
    out
}

/// First `a < b < c` with `part(a) = part(b) != part(c)`, edge `ac`, non-edge `bc`.
pub fn naive_hh(g: &RPartiteGraph, order: &[usize]) -> Option<[usize; 3]> {
    let n = order.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (order[a], order[b], order[c]);
                if g.part(x) == g.part(y) && g.part(x) != g.part(z) && g.has_edge(x, z) && !g.has_edge(y, z) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Closed-interval intersection on doubled endpoints, checked against every
/// cross-partite pair.
pub fn naive_model_ok(g: &RPartiteGraph, m: &IntervalModel) -> bool {
    let n = g.n();
    (0..n).all(|u| {
        (0..n).all(|v| {
            if u == v || g.part(u) == g.part(v) {
                return true;
            }
            let (a, b) = (m.interval(u), m.interval(v));
            let meet = !(a.hi2() < b.lo2() || b.hi2() < a.lo2());
            meet == g.has_edge(u, v)
        })
    })
}

/// All permutations of `0..n` in lexicographic order, by recursion.
pub fn all_orders(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every labelled graph with `n` vertices, declared `r`, every part
/// assignment in `0..r` and every subset of cross-partite pairs.
pub fn all_graphs(n: usize, r: usize) -> Vec<RPartiteGraph> {
    let mut out = Vec::new();
    let assignments = r.pow(n as u32);
    for code in 0..assignments {
        let mut c = code;
        let part: Vec<usize> = (0..n)
            .map(|_| {
                let p = c % r;
                c /= r;
                p
            })
            .collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part[u] != part[v])
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(RPartiteGraph::from_edges(r, part.clone(), &edges).unwrap());
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_ordering(n: usize, rng: &mut impl Rng) -> VertexOrdering {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    VertexOrdering::from_order(order).unwrap()
}
