//! Combinatorial and variational invariants of signed graphs.

mod cliques;
mod motzkin;
mod pattern;

pub use cliques::{balanced_cliques, CliqueReport};
pub use motzkin::{
    motzkin_straus_value, quadratic_form, random_l1_vector, weighted_form_value, L1Vector,
};
pub use pattern::{contains_induced_pattern, PATTERN_CAP};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchingFunction};

/// Largest order accepted by the exact frustration-index scan.
pub const FRUSTRATION_CAP: usize = 24;

/// Frustration index: the minimum number of negative edges over all
/// switchings of `g`, together with a switching that attains it.
///
/// Exact. Scans the `2^(n - c)` switchings that fix the minimum vertex of each
/// component at `+1`, in Gray-code order so each step updates the negative
/// edge count from a single vertex flip.
pub fn frustration_index(g: &SignedGraph) -> Result<(usize, SwitchingFunction)> {
    let n = g.order();
    if n > FRUSTRATION_CAP {
        return Err(Error::TooLarge {
            what: "exact frustration index",
            n,
            cap: FRUSTRATION_CAP,
        });
    }
    let free: Vec<usize> = g
        .components()
        .iter()
        .flat_map(|c| c[1..].iter().copied())
        .collect();

    let mut theta = vec![Sign::Positive; n];
    let mut negatives = g.negative_edge_count() as i64;
    let mut best = negatives;
    let mut best_theta = theta.clone();

    for step in 1u64..(1u64 << free.len()) {
        let v = free[step.trailing_zeros() as usize];
        // flipping v toggles every edge at v
        let mut delta = 0i64;
        for w in g.neighbors(v) {
            let current = theta[v] * g.sign(v, w).expect("neighbour") * theta[w];
            delta += if current.is_negative() { -1 } else { 1 };
        }
        theta[v] = theta[v].flip();
        negatives += delta;
        if negatives < best {
            best = negatives;
            best_theta.copy_from_slice(&theta);
        }
    }
    Ok((best as usize, SwitchingFunction::new(best_theta)))
}

/// Counts `(t+, t-)` of balanced and unbalanced triangles.
pub fn triangle_counts(g: &SignedGraph) -> (usize, usize) {
    let n = g.order();
    let (mut pos, mut neg) = (0, 0);
    for a in 0..n {
        for b in g.neighbors(a).filter(|&b| b > a) {
            let ab = g.entry(a, b);
            for c in g.neighbors(b).filter(|&c| c > b) {
                if g.is_adjacent(a, c) {
                    if ab * g.entry(b, c) * g.entry(a, c) > 0 {
                        pos += 1;
                    } else {
                        neg += 1;
                    }
                }
            }
        }
    }
    (pos, neg)
}

/// Length of a shortest odd cycle of the underlying graph; `None` when the
/// underlying graph is bipartite.
pub fn odd_girth(g: &SignedGraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                } else if dist[w] == dist[u] {
                    // closed odd walk of length 2d+1 through root
                    let len = 2 * dist[u] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_bipartite_underlying(g: &SignedGraph) -> bool {
    odd_girth(g).is_none()
}
