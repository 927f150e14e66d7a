use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// Largest order accepted by [`enumerate_underlying`].
pub const UNDERLYING_CAP: usize = 7;

/// Co-tree edge budget of [`enumerate_switching_classes`].
pub const COTREE_CAP: usize = 30;

/// Upper-triangle adjacency bits of `g` read in the vertex order `perm`
/// (`perm[i]` is the vertex placed at position `i`), most significant first.
fn code(adj: &[Vec<bool>], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut c = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            c = c << 1 | adj[perm[i]][perm[j]] as u64;
        }
    }
    c
}

fn from_code(n: usize, c: u64) -> SignedGraph {
    let mut pairs = Vec::new();
    let mut bit = n * (n.saturating_sub(1)) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if c >> bit & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    SignedGraph::unsigned(n, pairs).expect("valid pairs")
}

/// Visit every arrangement of `cells`, each cell permuted internally, cells
/// kept in order.
fn arrangements(cells: &[Vec<usize>], prefix: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let Some((first, rest)) = cells.split_first() else {
        visit(prefix);
        return;
    };
    let mut cell = first.clone();
    permute(&mut cell, 0, &mut |p| {
        let len = prefix.len();
        prefix.extend_from_slice(p);
        arrangements(rest, prefix, visit);
        prefix.truncate(len);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Canonical adjacency code: the maximum code over vertex orders that sort
/// vertices by (degree, sorted neighbour degrees). Equal for isomorphic
/// graphs since the cell invariant is itself isomorphism-invariant.
pub fn canonical_code(g: &SignedGraph) -> u64 {
    let n = g.order();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.is_adjacent(u, v)).collect()).collect();
    let deg = g.degrees();
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in vertices {
        match cells.last_mut() {
            Some(c) if key(c[0]) == key(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u64;
    arrangements(&cells, &mut Vec::with_capacity(n), &mut |p| best = best.max(code(&adj, p)));
    best
}

/// One all-positive representative per isomorphism class of simple graphs on
/// `n` vertices, relabeled to canonical form and sorted by canonical code.
pub fn enumerate_underlying(n: usize) -> Result<Vec<SignedGraph>> {
    if n > UNDERLYING_CAP {
        return Err(Error::TooLarge {
            what: "underlying graph enumeration",
            n,
            cap: UNDERLYING_CAP,
        });
    }
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    // every graph on k + 1 vertices is a graph on k vertices plus one vertex
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &c in &codes {
            let base = from_code(k, c).with_isolated(1);
            for mask in 0u32..1 << k {
                let mut g = base.clone();
                for v in (0..k).filter(|&v| mask >> v & 1 == 1) {
                    g = g.insert_edge(v, k, Sign::Positive)?;
                }
                next.insert(canonical_code(&g));
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| from_code(n, c)).collect())
}

/// One representative per switching class of signed graphs on the underlying
/// graph of `u`: the canonical spanning forest stays positive and the co-tree
/// edges take every sign pattern. Representative `i` has co-tree edge `j`
/// (in edge order) negative iff bit `j` of `i` is set.
pub fn enumerate_switching_classes(u: &SignedGraph) -> Result<Vec<SignedGraph>> {
    let base = u.underlying();
    let tree: BTreeSet<(usize, usize)> = base.spanning_forest().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let cotree: Vec<(usize, usize)> = base.edges().iter().map(|e| e.pair()).filter(|p| !tree.contains(p)).collect();
    if cotree.len() > COTREE_CAP {
        return Err(Error::TooLarge {
            what: "switching class enumeration (co-tree edges)",
            n: cotree.len(),
            cap: COTREE_CAP,
        });
    }
    let n = base.order();
    (0u64..1 << cotree.len())
        .map(|mask| {
            SignedGraph::from_edge_list(
                n,
                base.edges().iter().map(|e| {
                    let negative = cotree
                        .iter()
                        .position(|&p| p == e.pair())
                        .is_some_and(|j| mask >> j & 1 == 1);
                    (e.u, e.v, if negative { Sign::Negative } else { Sign::Positive })
                }),
            )
        })
        .collect()
}
