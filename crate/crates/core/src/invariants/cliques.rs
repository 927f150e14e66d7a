use std::collections::BTreeMap;

use crate::graph::{Sign, SignedGraph};

/// Balanced clique number, a witness clique, and `c_b(e)` for every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueReport {
    /// Order of the largest balanced clique: 1 for an edgeless graph, 0 for
    /// the graph with no vertices.
    pub omega_b: usize,
    /// Sorted vertex set inducing a balanced clique of order `omega_b`.
    pub witness: Vec<usize>,
    /// Switching signs, aligned with `witness`, that make the witness clique
    /// all-positive.
    pub witness_signs: Vec<Sign>,
    /// Order of the largest balanced clique containing each edge.
    pub per_edge: BTreeMap<(usize, usize), usize>,
}

impl CliqueReport {
    pub fn c_b(&self, u: usize, v: usize) -> Option<usize> {
        self.per_edge.get(&(u.min(v), u.max(v))).copied()
    }
}

/// Auxiliary "signed double cover": vertex `2v` is `v` with sign `+`, `2v+1`
/// is `v` with sign `-`. `(u, a) ~ (w, b)` iff `uw` is an edge with sign
/// `a * b`. Cliques of the cover are exactly balanced cliques together with a
/// balancing switch, so each balanced clique appears twice (once per global
/// sign).
struct Cover {
    adj: Vec<Vec<bool>>,
}

impl Cover {
    fn new(g: &SignedGraph) -> Self {
        let m = 2 * g.order();
        let mut adj = vec![vec![false; m]; m];
        for e in g.edges() {
            for a in [Sign::Positive, Sign::Negative] {
                let b = a * e.sign;
                let (x, y) = (Self::id(e.u, a), Self::id(e.v, b));
                adj[x][y] = true;
                adj[y][x] = true;
            }
        }
        Cover { adj }
    }

    fn id(v: usize, s: Sign) -> usize {
        2 * v + s.is_negative() as usize
    }

    fn vertex(id: usize) -> (usize, Sign) {
        let s = if id % 2 == 1 {
            Sign::Negative
        } else {
            Sign::Positive
        };
        (id / 2, s)
    }

    /// Bron-Kerbosch with Tomita pivoting; `emit` sees every maximal clique.
    fn maximal_cliques(&self, emit: &mut impl FnMut(&[usize])) {
        let all: Vec<usize> = (0..self.adj.len()).collect();
        let mut r = Vec::new();
        self.expand(&mut r, all, Vec::new(), emit);
    }

    fn expand(
        &self,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        emit: &mut impl FnMut(&[usize]),
    ) {
        if p.is_empty() {
            if x.is_empty() {
                emit(r);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| (p.iter().filter(|&&v| self.adj[u][v]).count(), usize::MAX - u))
            .expect("p is non-empty");
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !self.adj[pivot][v]).collect();
        for v in branch {
            let np = p.iter().copied().filter(|&w| self.adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| self.adj[v][w]).collect();
            r.push(v);
            self.expand(r, np, nx, emit);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
}

/// Enumerate balanced cliques by branch-and-bound over maximal cliques of the
/// signed double cover.
pub fn balanced_cliques(g: &SignedGraph) -> CliqueReport {
    let cover = Cover::new(g);
    let mut per_edge: BTreeMap<(usize, usize), usize> =
        g.edges().iter().map(|e| (e.pair(), 0)).collect();
    let mut best: Vec<usize> = Vec::new();

    cover.maximal_cliques(&mut |clique| {
        let q = clique.len();
        if q > best.len() {
            best = clique.to_vec();
        }
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                let (u, v) = (a / 2, b / 2);
                let slot = per_edge.get_mut(&(u.min(v), u.max(v))).expect("cover edge");
                *slot = (*slot).max(q);
            }
        }
    });

    let mut members: Vec<(usize, Sign)> = best.into_iter().map(Cover::vertex).collect();
    members.sort_unstable();
    // report the balancing switch with the smallest witness vertex at +1
    if members.first().is_some_and(|(_, s)| s.is_negative()) {
        members.iter_mut().for_each(|(_, s)| *s = s.flip());
    }
    CliqueReport {
        omega_b: members.len(),
        witness: members.iter().map(|&(v, _)| v).collect(),
        witness_signs: members.iter().map(|&(_, s)| s).collect(),
        per_edge,
    }
}
