//! Labeled constructions of the named graphs.
//!
//! The `h*` and `fig4_*` graphs share the pentagon `u1..u5 = 0..4` (edges `u_i u_{i+1}` and
//! `u5 u1`) and extra vertices `v = 5`, `w = 6`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Sign::{self, Negative as N, Positive as P};
use crate::graph::SignedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `params`: part sizes. All edges positive.
    CompleteMultipartiteBalanced,
    /// `params`: `s t`. Parts `0..s` and `s..s+t`.
    CompleteBipartite,
    /// `params`: `s t`. `K_{s,t}` with edge `(0, s)` subdivided by vertex `s + t`.
    Sk,
    /// `params`: `n r`. Edges `(i, i+1 mod n)`; the first `r` are negative.
    SignedCycle,
    /// `params`: `n`. `u = 0`, `v = 1`, clique on `2..n`; `uv` negative,
    /// `u 2` positive, `v j` positive for `j >= 3`.
    Gamma1N3,
    H1,
    /// `params`: variant `1` or `2`.
    H2Variant,
    /// `params`: variant `1` or `2`.
    H3Variant,
    Fig4Gamma1,
    Fig4Gamma2,
    /// `K4` with `(0, 1)` negative.
    K4OneNegative,
    /// `params`: `n`. Path `0..n-4` with pendants `n-4, n-3` on `0` and
    /// `n-2, n-1` on `n-5`.
    YN,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::CompleteMultipartiteBalanced,
        Family::CompleteBipartite,
        Family::Sk,
        Family::SignedCycle,
        Family::Gamma1N3,
        Family::H1,
        Family::H2Variant,
        Family::H3Variant,
        Family::Fig4Gamma1,
        Family::Fig4Gamma2,
        Family::K4OneNegative,
        Family::YN,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::CompleteMultipartiteBalanced => "complete_multipartite_balanced",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Sk => "sk",
            Family::SignedCycle => "signed_cycle",
            Family::Gamma1N3 => "gamma_1_n3",
            Family::H1 => "h1",
            Family::H2Variant => "h2_variant",
            Family::H3Variant => "h3_variant",
            Family::Fig4Gamma1 => "fig4_gamma1",
            Family::Fig4Gamma2 => "fig4_gamma2",
            Family::K4OneNegative => "k4_one_negative",
            Family::YN => "y_n",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec {
            family,
            params: params.into(),
        }
    }
}

fn bad(spec: &FamilySpec, why: &str) -> Error {
    Error::InvalidParameter(format!("{} {:?}: {why}", spec.family, spec.params))
}

fn arity(spec: &FamilySpec, k: usize) -> Result<&[usize]> {
    if spec.params.len() != k {
        return Err(bad(spec, &format!("expected {k} parameter(s)")));
    }
    Ok(&spec.params)
}

fn pentagon() -> Vec<(usize, usize, Sign)> {
    (0..5).map(|i| (i, (i + 1) % 5, P)).collect()
}

fn with_pentagon(n: usize, extra: &[(usize, usize, Sign)]) -> Result<SignedGraph> {
    SignedGraph::from_edge_list(n, pentagon().into_iter().chain(extra.iter().copied()))
}

pub fn generate(spec: &FamilySpec) -> Result<SignedGraph> {
    match spec.family {
        Family::CompleteMultipartiteBalanced => {
            if spec.params.is_empty() || spec.params.contains(&0) {
                return Err(bad(spec, "need at least one part, all non-empty"));
            }
            let part: Vec<usize> = spec
                .params
                .iter()
                .enumerate()
                .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
                .collect();
            let n = part.len();
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SignedGraph::unsigned(n, edges.filter(|&(u, v)| part[u] != part[v]))
        }
        Family::CompleteBipartite => {
            let &[s, t] = arity(spec, 2)? else { unreachable!() };
            if s == 0 || t == 0 {
                return Err(bad(spec, "parts must be non-empty"));
            }
            SignedGraph::unsigned(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
        }
        Family::Sk => {
            let &[s, t] = arity(spec, 2)? else { unreachable!() };
            if s == 0 || t == 0 {
                return Err(bad(spec, "parts must be non-empty"));
            }
            let mid = s + t;
            let edges = (0..s)
                .flat_map(|u| (s..s + t).map(move |v| (u, v)))
                .filter(|&e| e != (0, s))
                .chain([(0, mid), (s, mid)]);
            SignedGraph::unsigned(s + t + 1, edges)
        }
        Family::SignedCycle => {
            let &[n, r] = arity(spec, 2)? else { unreachable!() };
            if n < 3 || r > n {
                return Err(bad(spec, "need n >= 3 and r <= n"));
            }
            SignedGraph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n, if i < r { N } else { P })))
        }
        Family::Gamma1N3 => {
            let &[n] = arity(spec, 1)? else { unreachable!() };
            if n < 4 {
                return Err(bad(spec, "need n >= 4"));
            }
            let mut e = vec![(0, 1, N), (0, 2, P)];
            e.extend((3..n).map(|j| (1, j, P)));
            e.extend((2..n).flat_map(|a| (a + 1..n).map(move |b| (a, b, P))));
            SignedGraph::from_edge_list(n, e)
        }
        Family::H1 => {
            arity(spec, 0)?;
            with_pentagon(6, &[(0, 5, P)])
        }
        Family::H2Variant => {
            let &[k] = arity(spec, 1)? else { unreachable!() };
            let w_u5 = match k {
                1 => P,
                2 => N,
                _ => return Err(bad(spec, "variant must be 1 or 2")),
            };
            with_pentagon(7, &[(0, 5, N), (3, 5, P), (2, 6, P), (4, 6, w_u5)])
        }
        Family::H3Variant => {
            let &[k] = arity(spec, 1)? else { unreachable!() };
            let w_u1 = match k {
                1 => N,
                2 => P,
                _ => return Err(bad(spec, "variant must be 1 or 2")),
            };
            with_pentagon(7, &[(0, 5, N), (3, 5, P), (2, 6, P), (0, 6, w_u1)])
        }
        Family::Fig4Gamma1 => {
            arity(spec, 0)?;
            with_pentagon(6, &[(0, 5, P), (3, 5, P)])
        }
        Family::Fig4Gamma2 => {
            arity(spec, 0)?;
            with_pentagon(6, &[(0, 5, P), (3, 5, N)])
        }
        Family::K4OneNegative => {
            arity(spec, 0)?;
            let e = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v, if (u, v) == (0, 1) { N } else { P })));
            SignedGraph::from_edge_list(4, e)
        }
        Family::YN => {
            let &[n] = arity(spec, 1)? else { unreachable!() };
            if n < 6 {
                return Err(bad(spec, "need n >= 6"));
            }
            let end = n - 5;
            let edges = (0..end)
                .map(|i| (i, i + 1))
                .chain([(0, n - 4), (0, n - 3), (end, n - 2), (end, n - 1)]);
            SignedGraph::unsigned(n, edges)
        }
    }
}
