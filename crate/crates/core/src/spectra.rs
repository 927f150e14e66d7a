//! Adjacency, Laplacian and incidence matrices of signed graphs and their
//! spectra.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchingFunction};
use crate::linalg::{eig_sym, Matrix, Spectrum};
use crate::tol::TAU_ZERO;

/// Signed adjacency matrix: `A[u][v] = sign(uv)` on edges, zero elsewhere.
pub fn adjacency_matrix(g: &SignedGraph) -> Matrix<i64> {
    Matrix::from_fn(g.order(), g.order(), |i, j| g.entry(i, j))
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &SignedGraph) -> Matrix<i64> {
    let deg = g.degrees();
    Matrix::from_fn(g.order(), g.order(), |i, j| {
        if i == j {
            deg[i] as i64
        } else {
            -g.entry(i, j)
        }
    })
}

pub fn adjacency_spectrum(g: &SignedGraph) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    eig_sym(&adjacency_matrix(g).to_f64())
}

pub fn laplacian_spectrum(g: &SignedGraph) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    eig_sym(&laplacian_matrix(g).to_f64())
}

/// `rho = max(lambda_1, -lambda_n)`.
pub fn spectral_radius(g: &SignedGraph) -> Result<f64> {
    let s = adjacency_spectrum(g)?;
    Ok(s.largest().max(-s.smallest()))
}

/// Closed-form adjacency spectrum of a signed `n`-cycle with `r` negative
/// edges: `2 cos((2j - [r]) pi / n)`, `j = 1..n`, where `[r]` is the parity
/// of `r`.
pub fn cycle_spectrum(n: usize, r: usize) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    if r > n {
        return Err(Error::InvalidParameter(format!(
            "{r} negative edges on a cycle with {n} edges"
        )));
    }
    let parity = (r % 2) as f64;
    let values = (1..=n)
        .map(|j| 2.0 * ((2.0 * j as f64 - parity) * PI / n as f64).cos())
        .collect();
    Ok(Spectrum::from_values(values))
}

/// A choice of head for every edge of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    head: BTreeMap<(usize, usize), usize>,
}

impl Orientation {
    /// Build from `(u, v) -> head` entries; every head must be an endpoint.
    pub fn new<I>(heads: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), usize)>,
    {
        let mut head = BTreeMap::new();
        for ((u, v), h) in heads {
            let key = (u.min(v), u.max(v));
            if h != u && h != v {
                return Err(Error::Orientation(format!(
                    "head {h} is not an endpoint of {{{u}, {v}}}"
                )));
            }
            if head.insert(key, h).is_some() {
                return Err(Error::Orientation(format!(
                    "edge {{{}, {}}} oriented twice",
                    key.0, key.1
                )));
            }
        }
        Ok(Orientation { head })
    }

    /// Orient every edge of `g` with `pick(u, v)` as head, `u < v`.
    pub fn from_fn(g: &SignedGraph, mut pick: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        Self::new(g.edges().iter().map(|e| ((e.u, e.v), pick(e.u, e.v))))
    }

    /// Every edge headed at its smaller endpoint.
    pub fn lower(g: &SignedGraph) -> Self {
        Self::from_fn(g, |u, _| u).expect("endpoints are valid heads")
    }

    pub fn head(&self, u: usize, v: usize) -> Option<usize> {
        self.head.get(&(u.min(v), u.max(v))).copied()
    }

    fn check_covers(&self, g: &SignedGraph) -> Result<()> {
        for e in g.edges() {
            if !self.head.contains_key(&(e.u, e.v)) {
                return Err(Error::Orientation(format!(
                    "edge {{{}, {}}} has no head",
                    e.u, e.v
                )));
            }
        }
        if self.head.len() != g.size() {
            let extra = self
                .head
                .keys()
                .find(|&&(u, v)| u >= g.order() || v >= g.order() || !g.is_adjacent(u, v))
                .expect("a non-edge is oriented");
            return Err(Error::Orientation(format!(
                "{{{}, {}}} is not an edge",
                extra.0, extra.1
            )));
        }
        Ok(())
    }
}

/// Vertex-edge incidence matrix (`n x m`, columns in `g.edges()` order).
///
/// The head of an edge gets `+1`; its tail gets `-1` on a positive edge and
/// `+1` on a negative one. `P P^T = L` for every orientation.
pub fn incidence_matrix(g: &SignedGraph, orientation: &Orientation) -> Result<Matrix<i64>> {
    orientation.check_covers(g)?;
    let mut p = Matrix::zeros(g.order(), g.size());
    for (j, e) in g.edges().iter().enumerate() {
        let head = orientation.head(e.u, e.v).expect("checked");
        let tail = e.other(head);
        p[(head, j)] = 1;
        p[(tail, j)] = match e.sign {
            Sign::Positive => -1,
            Sign::Negative => 1,
        };
    }
    Ok(p)
}

/// `K = P^T P`, an `m x m` matrix sharing the nonzero spectrum of `L`.
pub fn edge_gram(g: &SignedGraph, orientation: &Orientation) -> Result<Matrix<i64>> {
    let p = incidence_matrix(g, orientation)?;
    Ok(p.transpose().matmul(&p))
}

/// Switch `g` so that its largest adjacency eigenvalue has a non-negative
/// eigenvector.
///
/// Takes the solver's first unit eigenvector `x` for `lambda_1` and switches
/// at `{ i : x_i < -TAU_ZERO }`; the switched graph then has `|x|` as a
/// `lambda_1`-eigenvector.
pub fn nonneg_eigvec_switch(g: &SignedGraph) -> Result<(SignedGraph, SwitchingFunction)> {
    let s = adjacency_spectrum(g)?;
    let x = s.vector(0).expect("eig_sym returns vectors");
    let theta = SwitchingFunction::new(
        x.iter()
            .map(|&xi| {
                if xi < -TAU_ZERO {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect(),
    );
    let switched = g.switch_by(&theta)?;
    Ok((switched, theta))
}
