//! Maximisation of `x^T A x` over the L1 unit sphere, whose optimum is
//! `1 - 1/omega_b`, and the clique-weighted form `F(x) = x^T W x`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::cliques::{balanced_cliques, CliqueReport};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::tol::TAU_ZERO;

const MAX_ASCENT_STEPS: usize = 20_000;
const GAP_TOL: f64 = 1e-13;

/// A real vector with `sum |x_i| = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct L1Vector(Vec<f64>);

impl L1Vector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        let norm: f64 = entries.iter().map(|x| x.abs()).sum();
        if (norm - 1.0).abs() > TAU_ZERO {
            return Err(Error::InvalidParameter(format!("L1 norm is {norm}, not 1")));
        }
        Ok(L1Vector(entries))
    }

    /// Scale a nonzero vector onto the L1 sphere.
    pub fn normalize(mut entries: Vec<f64>) -> Result<Self> {
        let norm: f64 = entries.iter().map(|x| x.abs()).sum();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::InvalidParameter("cannot normalise a zero vector".into()));
        }
        entries.iter_mut().for_each(|x| *x /= norm);
        Ok(L1Vector(entries))
    }

    pub fn entries(&self) -> &[f64] {
        &self.0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0.0).collect()
    }
}

/// `x^T A(g) x`.
pub fn quadratic_form(g: &SignedGraph, x: &[f64]) -> f64 {
    2.0 * g
        .edges()
        .iter()
        .map(|e| e.sign.value() as f64 * x[e.u] * x[e.v])
        .sum::<f64>()
}

/// A random point of the L1 sphere: exponential magnitudes, uniform signs.
pub fn random_l1_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> L1Vector {
    loop {
        let x: Vec<f64> = (0..n)
            .map(|_| {
                let mag = -(1.0 - rng.random::<f64>()).ln();
                if rng.random::<bool>() {
                    mag
                } else {
                    -mag
                }
            })
            .collect();
        if let Ok(v) = L1Vector::normalize(x) {
            return v;
        }
    }
}

/// Pairwise exchange ascent on the L1 sphere.
///
/// With `y = |x|` and fixed signs the objective is a quadratic form on the
/// simplex whose partial derivatives are `2 h_k`, `h_k = sign(x_k) (A x)_k`;
/// a zero coordinate may enter with whichever sign makes `h_k = |(A x)_k|`.
/// Each step moves mass from the support coordinate with the smallest `h` to
/// the coordinate with the largest, by the exact line-search optimum.
fn ascend(g: &SignedGraph, x: &mut [f64]) -> f64 {
    let n = x.len();
    let mut grad = vec![0.0; n];
    for e in g.edges() {
        let s = e.sign.value() as f64;
        grad[e.u] += s * x[e.v];
        grad[e.v] += s * x[e.u];
    }
    for _ in 0..MAX_ASCENT_STEPS {
        let h = |k: usize| {
            if x[k] > 0.0 {
                grad[k]
            } else if x[k] < 0.0 {
                -grad[k]
            } else {
                grad[k].abs()
            }
        };
        let Some(i) = (0..n)
            .filter(|&k| x[k] != 0.0)
            .min_by(|&a, &b| h(a).total_cmp(&h(b)))
        else {
            break;
        };
        let j = (0..n).max_by(|&a, &b| h(a).total_cmp(&h(b))).expect("n > 0");
        let gap = h(j) - h(i);
        if gap <= GAP_TOL || i == j {
            break;
        }
        let si = x[i].signum();
        let sj = if x[j] != 0.0 {
            x[j].signum()
        } else if grad[j] < 0.0 {
            -1.0
        } else {
            1.0
        };
        let (yi, yj) = (x[i].abs(), x[j].abs());
        let b = si * sj * g.entry(i, j) as f64;
        let delta = if b > 0.0 { yi.min(gap / (2.0 * b)) } else { yi };
        x[i] = if delta >= yi { 0.0 } else { si * (yi - delta) };
        x[j] = sj * (yj + delta);
        let (di, dj) = (-si * delta, sj * delta);
        for w in g.neighbors(i) {
            grad[w] += g.entry(w, i) as f64 * di;
        }
        for w in g.neighbors(j) {
            grad[w] += g.entry(w, j) as f64 * dj;
        }
    }
    quadratic_form(g, x)
}

/// Best value of `x^T A x` found over the L1 sphere.
///
/// One deterministic start sits uniformly on a maximum balanced clique, signed
/// by its balancing switch (value `1 - 1/omega_b` exactly); `restarts` further
/// starts are drawn from a ChaCha stream seeded by `seed`. Every start is
/// refined by exchange ascent.
pub fn motzkin_straus_value(
    g: &SignedGraph,
    restarts: usize,
    seed: u64,
) -> Result<(f64, L1Vector)> {
    if restarts == 0 {
        return Err(Error::InvalidParameter("restarts must be at least 1".into()));
    }
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cliques = balanced_cliques(g);
    let r = cliques.omega_b as f64;
    let mut seeded = vec![0.0; n];
    for (&v, s) in cliques.witness.iter().zip(&cliques.witness_signs) {
        seeded[v] = s.value() as f64 / r;
    }
    let mut best_x = seeded.clone();
    let mut best = ascend(g, &mut best_x);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..restarts {
        let mut x = random_l1_vector(n, &mut rng).0;
        let value = ascend(g, &mut x);
        if value > best {
            best = value;
            best_x = x;
        }
    }
    // ascent keeps sum |x| = 1 up to rounding; renormalise the winner
    Ok((best, L1Vector::normalize(best_x)?))
}

/// `F(x) = 2 sum_{ij in E} sign(ij) c_b(ij) / (c_b(ij) - 1) x_i x_j`.
pub fn weighted_form_value(g: &SignedGraph, cliques: &CliqueReport, x: &L1Vector) -> f64 {
    let x = x.entries();
    2.0 * g
        .edges()
        .iter()
        .map(|e| {
            let c = cliques.c_b(e.u, e.v).expect("edge has a clique number") as f64;
            assert!(c >= 2.0, "an edge is a balanced clique of order 2");
            e.sign.value() as f64 * c / (c - 1.0) * x[e.u] * x[e.v]
        })
        .sum::<f64>()
}
