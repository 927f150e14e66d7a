//! The signed-graph data model: construction, switching, balance and the
//! canonical representative of a switching class.
//!
//! Vertices are the dense integers `0..n`. Edges are stored once, as `(u, v)`
//! with `u < v`, sorted lexicographically; a dense sign matrix backs O(1)
//! adjacency queries.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    /// Sign of a real number, with zero counted as positive.
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// An edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn pair(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A map `V -> {+1, -1}`. Switching by `theta` replaces the sign of every
/// edge `uv` by `theta(u) * sign(uv) * theta(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchingFunction {
    theta: Vec<Sign>,
}

impl SwitchingFunction {
    pub fn new(theta: Vec<Sign>) -> Self {
        SwitchingFunction { theta }
    }

    pub fn identity(n: usize) -> Self {
        SwitchingFunction {
            theta: vec![Sign::Positive; n],
        }
    }

    /// The switching function that is `-1` exactly on `set`.
    pub fn from_set(n: usize, set: &[usize]) -> Result<Self> {
        let mut theta = vec![Sign::Positive; n];
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            theta[v] = Sign::Negative;
        }
        Ok(SwitchingFunction { theta })
    }

    pub fn len(&self) -> usize {
        self.theta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theta.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.theta[v]
    }

    pub fn as_slice(&self) -> &[Sign] {
        &self.theta
    }

    /// The set `S = { v : theta(v) = -1 }`, ascending.
    pub fn negative_set(&self) -> Vec<usize> {
        (0..self.theta.len())
            .filter(|&v| self.theta[v].is_negative())
            .collect()
    }

    /// Pointwise product; switching by the result equals switching by `self`
    /// then by `other`.
    pub fn compose(&self, other: &SwitchingFunction) -> SwitchingFunction {
        assert_eq!(self.len(), other.len(), "switching functions on different vertex sets");
        SwitchingFunction {
            theta: self
                .theta
                .iter()
                .zip(&other.theta)
                .map(|(&a, &b)| a * b)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceResult {
    pub balanced: bool,
    /// Switches the graph to all-positive; present iff balanced.
    pub witness: Option<SwitchingFunction>,
    /// A cycle, in traversal order, carrying an odd number of negative edges;
    /// present iff unbalanced.
    pub negative_cycle: Option<Vec<usize>>,
}

/// A simple graph on `0..n` whose edges carry signs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    // n*n, entries in {-1, 0, 1}
    signs: Vec<i8>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        write!(f, ")")
    }
}

impl PartialOrd for SignedGraph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedGraph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}

impl SignedGraph {
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            edges: Vec::new(),
            signs: vec![0; n * n],
        }
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut g = SignedGraph::empty(n);
        for (u, v, sign) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let (a, b) = ordered(u, v);
            if g.signs[a * n + b] != 0 {
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
            g.set(a, b, Some(sign));
            g.edges.push(Edge { u: a, v: b, sign });
        }
        g.edges.sort();
        Ok(g)
    }

    /// All-positive graph on the given pairs.
    pub fn unsigned<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edge_list(n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Positive)))
    }

    fn set(&mut self, u: usize, v: usize, sign: Option<Sign>) {
        let x = sign.map_or(0, |s| s.value() as i8);
        self.signs[u * self.n + v] = x;
        self.signs[v * self.n + u] = x;
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sign of `uv`, or `None` when `u` and `v` are not adjacent.
    ///
    /// Panics if either vertex is out of range.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        match self.signs[u * self.n + v] {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    /// Entry of the signed adjacency matrix.
    pub fn entry(&self, u: usize, v: usize) -> i64 {
        self.signs[u * self.n + v] as i64
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.signs[u * self.n + v] != 0
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.signs[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter(|(_, &s)| s != 0)
            .map(|(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Degree of each vertex, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `(N_U(v), d_U(v))`: the neighbours of `v` inside `within`.
    pub fn neighborhood(&self, v: usize, within: &[usize]) -> Result<(Vec<usize>, usize)> {
        self.check_vertex(v)?;
        let mut out = Vec::new();
        for &u in within {
            self.check_vertex(u)?;
            if self.is_adjacent(v, u) {
                out.push(u);
            }
        }
        out.sort_unstable();
        out.dedup();
        let d = out.len();
        Ok((out, d))
    }

    pub fn positive_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.sign == Sign::Positive)
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.sign == Sign::Negative)
    }

    pub fn negative_edge_count(&self) -> usize {
        self.negative_edges().count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Positive)
    }

    /// The underlying graph, with every edge made positive.
    pub fn underlying(&self) -> SignedGraph {
        self.map_signs(|_| Sign::Positive)
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.pair() == b.pair())
    }

    fn map_signs(&self, mut f: impl FnMut(&Edge) -> Sign) -> SignedGraph {
        let mut g = SignedGraph::empty(self.n);
        g.edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        for i in 0..g.edges.len() {
            let e = g.edges[i];
            g.set(e.u, e.v, Some(e.sign));
        }
        g
    }

    /// Switch at `set`: flip every edge with exactly one end in `set`.
    pub fn switch(&self, set: &[usize]) -> Result<SignedGraph> {
        let theta = SwitchingFunction::from_set(self.n, set)?;
        self.switch_by(&theta)
    }

    pub fn switch_by(&self, theta: &SwitchingFunction) -> Result<SignedGraph> {
        if theta.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "switching function on {} vertices applied to a graph on {}",
                theta.len(),
                self.n
            )));
        }
        Ok(self.map_signs(|e| theta.get(e.u) * e.sign * theta.get(e.v)))
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Breadth-first spanning forest rooted at the minimum vertex of each
    /// component, neighbours visited in ascending order. Returns the parent of
    /// every vertex (`None` for roots), the BFS depth, and the switching
    /// function that makes every tree edge positive with roots fixed at `+1`.
    fn canonical_forest(&self) -> (Vec<Option<usize>>, Vec<usize>, SwitchingFunction) {
        let mut parent = vec![None; self.n];
        let mut depth = vec![0; self.n];
        let mut theta = vec![Sign::Positive; self.n];
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(u);
                        depth[w] = depth[u] + 1;
                        theta[w] = theta[u] * self.sign(u, w).expect("neighbour");
                        queue.push_back(w);
                    }
                }
            }
        }
        (parent, depth, SwitchingFunction::new(theta))
    }

    /// Edges of the canonical spanning forest, as sorted pairs.
    pub fn spanning_forest(&self) -> Vec<(usize, usize)> {
        let (parent, _, _) = self.canonical_forest();
        let mut out: Vec<_> = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| ordered(p, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Canonical representative of the switching class on this labelled
    /// underlying graph: every edge of the canonical spanning forest is made
    /// positive, each component root keeping `theta = +1`.
    pub fn canonical_form(&self) -> (SignedGraph, SwitchingFunction) {
        let (_, _, theta) = self.canonical_forest();
        let g = self.switch_by(&theta).expect("theta sized to the graph");
        (g, theta)
    }

    pub fn is_balanced(&self) -> BalanceResult {
        let (parent, depth, theta) = self.canonical_forest();
        let bad = self
            .edges
            .iter()
            .find(|e| (theta.get(e.u) * e.sign * theta.get(e.v)).is_negative());
        match bad {
            None => BalanceResult {
                balanced: true,
                witness: Some(theta),
                negative_cycle: None,
            },
            Some(e) => {
                // tree path u -> lca -> v closes a cycle with the edge vu
                let (mut a, mut b) = (e.u, e.v);
                let mut left = vec![a];
                let mut right = vec![b];
                while depth[a] > depth[b] {
                    a = parent[a].expect("non-root");
                    left.push(a);
                }
                while depth[b] > depth[a] {
                    b = parent[b].expect("non-root");
                    right.push(b);
                }
                while a != b {
                    a = parent[a].expect("non-root");
                    b = parent[b].expect("non-root");
                    left.push(a);
                    right.push(b);
                }
                right.pop();
                left.extend(right.into_iter().rev());
                BalanceResult {
                    balanced: false,
                    witness: None,
                    negative_cycle: Some(left),
                }
            }
        }
    }

    /// Switching equivalence on a common labelled underlying graph; graphs on
    /// different underlying graphs are never equivalent.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> bool {
        self.same_underlying(other) && self.canonical_form().0 == other.canonical_form().0
    }

    /// Subgraph induced by `set`, relabelled order-preservingly onto `0..|set|`.
    pub fn induced(&self, set: &[usize]) -> Result<SignedGraph> {
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            self.check_vertex(v)?;
        }
        let mut g = SignedGraph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if let Some(s) = self.sign(a, b) {
                    g.set(i, j, Some(s));
                    g.edges.push(Edge { u: i, v: j, sign: s });
                }
            }
        }
        Ok(g)
    }

    /// Remove the edges with the given underlying pairs.
    pub fn delete_edges(&self, pairs: &[(usize, usize)]) -> Result<SignedGraph> {
        let mut g = self.clone();
        for &(u, v) in pairs {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            let (a, b) = ordered(u, v);
            if !g.is_adjacent(a, b) {
                return Err(Error::MissingEdge { u: a, v: b });
            }
            g.set(a, b, None);
        }
        g.edges.retain(|e| g.signs[e.u * g.n + e.v] != 0);
        Ok(g)
    }

    pub fn insert_edge(&self, u: usize, v: usize, sign: Sign) -> Result<SignedGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let (a, b) = ordered(u, v);
        if self.is_adjacent(a, b) {
            return Err(Error::EdgeExists { u: a, v: b });
        }
        let mut g = self.clone();
        g.set(a, b, Some(sign));
        let at = g.edges.partition_point(|e| (e.u, e.v) < (a, b));
        g.edges.insert(at, Edge { u: a, v: b, sign });
        Ok(g)
    }

    /// Append `k` isolated vertices.
    pub fn with_isolated(&self, k: usize) -> SignedGraph {
        let pairs = self.edges.iter().map(|e| (e.u, e.v, e.sign));
        SignedGraph::from_edge_list(self.n + k, pairs).expect("valid by construction")
    }

    /// Relabel vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation has the wrong length".into()));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        SignedGraph::from_edge_list(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Negative as N, Positive as P};

    fn cycle(n: usize, negative: &[usize]) -> SignedGraph {
        SignedGraph::from_edge_list(
            n,
            (0..n).map(|i| {
                let s = if negative.contains(&i) { N } else { P };
                (i, (i + 1) % n, s)
            }),
        )
        .unwrap()
    }

    fn k4_one_negative() -> SignedGraph {
        let mut e = vec![];
        for u in 0..4 {
            for v in u + 1..4 {
                e.push((u, v, if (u, v) == (0, 1) { N } else { P }));
            }
        }
        SignedGraph::from_edge_list(4, e).unwrap()
    }

    #[test]
    fn construction_and_errors() {
        let k2 = SignedGraph::from_edge_list(2, [(0, 1, P)]).unwrap();
        assert_eq!(k2.size(), 1);
        assert_eq!(k2.sign(1, 0), Some(P));

        let k4 = k4_one_negative();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4.negative_edge_count(), 1);

        assert_eq!(
            SignedGraph::from_edge_list(3, [(0, 1, P), (0, 1, N)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            SignedGraph::from_edge_list(3, [(1, 0, P), (0, 1, P)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            SignedGraph::from_edge_list(3, [(0, 3, P)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            SignedGraph::from_edge_list(3, [(2, 2, P)]),
            Err(Error::SelfLoop { vertex: 2 })
        );
    }

    #[test]
    fn switching_examples() {
        let g = k4_one_negative();
        assert_eq!(g.switch(&[]).unwrap(), g);
        assert_eq!(g.switch(&[0, 1, 2, 3]).unwrap(), g);

        let c3 = cycle(3, &[0]); // (0,1) negative
        let s = c3.switch(&[0]).unwrap();
        assert_eq!(s.sign(0, 1), Some(P));
        assert_eq!(s.sign(0, 2), Some(N));
        assert_eq!(s.sign(1, 2), Some(P));
        assert!(g.switch(&[4]).is_err());
    }

    #[test]
    fn balance_examples() {
        let c5 = cycle(5, &[]);
        let r = c5.is_balanced();
        assert!(r.balanced);
        assert_eq!(r.witness, Some(SwitchingFunction::identity(5)));

        let c3 = cycle(3, &[1]);
        let r = c3.is_balanced();
        assert!(!r.balanced);
        let mut cyc = r.negative_cycle.unwrap();
        cyc.sort_unstable();
        assert_eq!(cyc, vec![0, 1, 2]);

        let k4 = k4_one_negative();
        // the two triangles through (0,1) are unbalanced
        for t in [[0, 1, 2], [0, 1, 3]] {
            assert!(!k4.induced(&t).unwrap().is_balanced().balanced);
        }
        for t in [[0, 2, 3], [1, 2, 3]] {
            assert!(k4.induced(&t).unwrap().is_balanced().balanced);
        }
        assert!(!k4.is_balanced().balanced);
    }

    #[test]
    fn negative_cycle_is_a_cycle_with_odd_negatives() {
        let g = SignedGraph::from_edge_list(
            6,
            [(0, 1, P), (1, 2, P), (2, 3, P), (3, 4, P), (4, 5, P), (0, 5, N), (1, 4, P)],
        )
        .unwrap();
        let cyc = g.is_balanced().negative_cycle.unwrap();
        let mut negs = 0;
        for i in 0..cyc.len() {
            let s = g.sign(cyc[i], cyc[(i + 1) % cyc.len()]).expect("cycle edge");
            negs += s.is_negative() as usize;
        }
        assert_eq!(negs % 2, 1);
        let mut uniq = cyc.clone();
        uniq.sort_unstable();
        uniq.dedup();
        assert_eq!(uniq.len(), cyc.len());
    }

    #[test]
    fn canonical_forms() {
        let c3 = cycle(3, &[]);
        let (cf, theta) = c3.canonical_form();
        assert_eq!(cf, c3);
        assert_eq!(theta, SwitchingFunction::identity(3));

        // two negative edges on a triangle: balanced, so a different class
        // from the triangle with one negative edge
        let a = SignedGraph::from_edge_list(3, [(0, 1, N), (0, 2, N), (1, 2, P)]).unwrap();
        let b = SignedGraph::from_edge_list(3, [(0, 1, P), (0, 2, P), (1, 2, N)]).unwrap();
        assert!(a.canonical_form().0.is_all_positive());
        assert_ne!(a.canonical_form().0, b.canonical_form().0);
        assert_eq!(b.canonical_form().0.negative_edge_count(), 1);

        let c = SignedGraph::from_edge_list(3, [(0, 1, N), (0, 2, N), (1, 2, N)]).unwrap();
        assert_eq!(c.switch(&[0]).unwrap(), b);
        let (cf, theta) = c.canonical_form();
        assert_eq!(cf, b.canonical_form().0);
        assert_eq!(cf.negative_edge_count(), 1);
        assert_eq!(c.switch_by(&theta).unwrap(), cf);

        let path = SignedGraph::from_edge_list(3, [(0, 1, N), (1, 2, N)]).unwrap();
        assert!(path.canonical_form().0.is_all_positive());
    }

    #[test]
    fn equivalence_examples() {
        let c5 = cycle(5, &[]);
        assert!(c5.switching_equivalent(&cycle(5, &[0, 2])));
        assert!(!c5.switching_equivalent(&cycle(5, &[3])));
        let g = cycle(5, &[1]);
        assert!(g.switching_equivalent(&g.switch(&[0, 3]).unwrap()));
        // different underlying graph
        let p5 = SignedGraph::unsigned(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!p5.switching_equivalent(&c5));
    }

    #[test]
    fn subgraph_operations() {
        let k4 = k4_one_negative();
        let t = k4.induced(&[1, 2, 3]).unwrap();
        assert_eq!(t, SignedGraph::unsigned(3, [(0, 1), (0, 2), (1, 2)]).unwrap());

        assert_eq!(k4.delete_edges(&[]).unwrap(), k4);
        let d = k4.delete_edges(&[(1, 0)]).unwrap();
        assert_eq!(d.size(), 5);
        assert!(d.is_all_positive());
        assert_eq!(
            d.delete_edges(&[(0, 1)]),
            Err(Error::MissingEdge { u: 0, v: 1 })
        );

        let k2 = SignedGraph::from_edge_list(2, [(0, 1, P)]).unwrap();
        assert_eq!(k2.insert_edge(0, 1, N), Err(Error::EdgeExists { u: 0, v: 1 }));
        let back = d.insert_edge(1, 0, N).unwrap();
        assert_eq!(back, k4);
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle(5, &[]).degree_sequence(), vec![2; 5]);
        assert_eq!(k4_one_negative().degree_sequence(), vec![3; 4]);
        let star = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree_sequence(), vec![3, 1, 1, 1]);
        let (nb, d) = star.neighborhood(0, &[1, 3]).unwrap();
        assert_eq!((nb, d), (vec![1, 3], 2));
        let (nb, d) = star.neighborhood(1, &[2, 3]).unwrap();
        assert_eq!((nb, d), (vec![], 0));
    }

    #[test]
    fn components_and_connectivity() {
        let g = SignedGraph::unsigned(5, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4]]);
        assert!(!g.is_connected());
        assert!(cycle(4, &[]).is_connected());
        assert!(!SignedGraph::empty(0).is_connected());
    }
}
