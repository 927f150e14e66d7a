use serde_json::{json, Map};

use super::{classify, fold, SubCheck, TheoremId, TheoremReport};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::linalg::{det_exact, Matrix, Spectrum};
use crate::spectra::{laplacian_matrix, laplacian_spectrum};

/// Exact test that the integer `t` is a Laplacian eigenvalue of `g`.
fn is_laplacian_eigenvalue(g: &SignedGraph, t: i64) -> bool {
    let l = laplacian_matrix(g);
    let shifted = Matrix::from_fn(l.rows(), l.cols(), |i, j| l[(i, j)] - if i == j { t } else { 0 });
    det_exact(&shifted).is_ok_and(|d| d == 0)
}

fn sorted_degrees(g: &SignedGraph) -> Vec<usize> {
    g.degree_sequence()
}

/// `sum_{i<=k} mu_i > sum_{i<=k} d_i` for every `1 <= k <= n - 1`, connected
/// `g`. Strict, so ties are never certified.
pub fn check_laplacian_degree_sums(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::LapDegreeSums;
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Ok(TheoremReport::hypothesis_fail(id, "not connected with n >= 2"));
    }
    let mu = laplacian_spectrum(g)?;
    let d = sorted_degrees(g);
    let subs = (1..n)
        .map(|k| {
            let lhs = mu.top_sum(k);
            let rhs: usize = d[..k].iter().sum();
            let rhs = rhs as f64;
            sub(json!({ "k": k }), lhs, rhs, lhs - rhs, false)
        })
        .collect();
    Ok(fold(id, subs, Map::new()))
}

fn sub(key: serde_json::Value, lhs: f64, rhs: f64, margin: f64, certified: bool) -> SubCheck {
    SubCheck {
        key,
        lhs,
        rhs,
        margin,
        verdict: classify(margin, certified),
    }
}

/// Why `r_set` falls outside the hypotheses, or the number of induced edges.
fn lp1_admissible(g: &SignedGraph, r_set: &[usize]) -> std::result::Result<usize, &'static str> {
    if r_set.is_empty() {
        return Err("R is empty");
    }
    let mut matched = 0;
    for (i, &u) in r_set.iter().enumerate() {
        let inside = r_set.iter().filter(|&&w| w != u && g.is_adjacent(u, w)).count();
        if inside > 1 {
            return Err("edges induced by R are not a matching");
        }
        if inside == 1 {
            if g.degree(u) < 2 {
                return Err("matched vertex of degree 1");
            }
            matched += r_set[i + 1..].iter().filter(|&&w| g.is_adjacent(u, w)).count();
        }
    }
    Ok(matched)
}

fn lp1_sub(g: &SignedGraph, mu: &Spectrum, r_set: &[usize], r: usize) -> SubCheck {
    let k = r_set.len();
    let lhs = mu.top_sum(k);
    let rhs_int = r_set.iter().map(|&u| g.degree(u)).sum::<usize>() + k - r;
    let rhs = rhs_int as f64;
    let margin = lhs - rhs;
    // for k = 1 a tie means rhs is itself the top eigenvalue
    let certified = k == 1 && margin.abs() < 1e-6 && is_laplacian_eigenvalue(g, rhs_int as i64);
    sub(json!({ "r_set": r_set, "r": r }), lhs, rhs, margin, certified)
}

fn lp1_graph_hypothesis(g: &SignedGraph) -> Option<&'static str> {
    if g.order() <= 2 {
        Some("n <= 2")
    } else if !g.is_connected() {
        Some("not connected")
    } else {
        None
    }
}

/// `sum_{i<=k} mu_i >= sum_{u in R} d(u) + k - r` for a vertex set `R` of
/// size `k` inducing `r` disjoint edges.
pub fn check_lp1(g: &SignedGraph, r_set: &[usize]) -> Result<TheoremReport> {
    let id = TheoremId::Lp1;
    let n = g.order();
    if let Some(&v) = r_set.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut r_set = r_set.to_vec();
    r_set.sort_unstable();
    r_set.dedup();
    if let Some(reason) = lp1_graph_hypothesis(g) {
        return Ok(TheoremReport::hypothesis_fail(id, reason));
    }
    let r = match lp1_admissible(g, &r_set) {
        Ok(r) => r,
        Err(reason) => return Ok(TheoremReport::hypothesis_fail(id, reason)),
    };
    let mu = laplacian_spectrum(g)?;
    let s = lp1_sub(g, &mu, &r_set, r);
    Ok(TheoremReport {
        theorem_id: id,
        verdict: s.verdict,
        lhs: s.lhs,
        rhs: s.rhs,
        margin: s.margin,
        detail: json!({ "r_set": r_set, "k": r_set.len(), "r": r }),
    })
}

/// [`check_lp1`] over every admissible `R` with `1 <= |R| <= n - 1`.
pub fn scan_lp1(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::Lp1;
    if let Some(reason) = lp1_graph_hypothesis(g) {
        return Ok(TheoremReport::hypothesis_fail(id, reason));
    }
    let n = g.order();
    if n >= 31 {
        return Err(Error::TooLarge {
            what: "subset scan",
            n,
            cap: 30,
        });
    }
    let mu = laplacian_spectrum(g)?;
    let mut subs = Vec::new();
    let mut skipped = 0usize;
    for mask in 1u32..(1 << n) - 1 {
        let r_set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        match lp1_admissible(g, &r_set) {
            Ok(r) => subs.push(lp1_sub(g, &mu, &r_set, r)),
            Err(_) => skipped += 1,
        }
    }
    let mut detail = Map::new();
    detail.insert("admissible".into(), subs.len().into());
    detail.insert("skipped".into(), skipped.into());
    Ok(fold(id, subs, detail))
}

/// `mu_1 >= d_1 + 1` for `g` with at least one edge.
pub fn check_corollary_mu1(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::CorollaryMu1;
    if g.size() == 0 {
        return Ok(TheoremReport::hypothesis_fail(id, "no edges"));
    }
    let lhs = laplacian_spectrum(g)?.largest();
    let rhs_int = sorted_degrees(g)[0] + 1;
    let rhs = rhs_int as f64;
    let margin = lhs - rhs;
    let certified = margin.abs() < 1e-6 && is_laplacian_eigenvalue(g, rhs_int as i64);
    Ok(TheoremReport::new(id, lhs, rhs, margin, certified, json!({ "d1": rhs_int - 1 })))
}

/// `mu_1 + mu_2 >= d_1 + d_2 + 1`, or `+ 2` when some two nonadjacent
/// vertices have degrees `d_1` and `d_2`; `g` connected with `n > 2`.
pub fn check_corollary_mu1mu2(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::CorollaryMu1mu2;
    if let Some(reason) = lp1_graph_hypothesis(g) {
        return Ok(TheoremReport::hypothesis_fail(id, reason));
    }
    let d = sorted_degrees(g);
    let (d1, d2) = (d[0], d[1]);
    let n = g.order();
    let nonadjacent = (0..n).any(|u| {
        g.degree(u) == d1 && (0..n).any(|w| w != u && g.degree(w) == d2 && !g.is_adjacent(u, w))
    });
    let lhs = laplacian_spectrum(g)?.top_sum(2);
    let rhs = (d1 + d2 + if nonadjacent { 2 } else { 1 }) as f64;
    Ok(TheoremReport::new(
        id,
        lhs,
        rhs,
        lhs - rhs,
        false,
        json!({ "d1": d1, "d2": d2, "nonadjacent": nonadjacent }),
    ))
}

/// Both degree corollaries, in order `[mu1, mu1mu2]`.
pub fn check_corollaries(g: &SignedGraph) -> Result<[TheoremReport; 2]> {
    Ok([check_corollary_mu1(g)?, check_corollary_mu1mu2(g)?])
}

/// `sum_{i<=k} mu_i >= t_k + sum_{i<=k} d_i` for balanced connected `g`, with
/// vertices ordered by degree (ties by label) and `t_k` the number of
/// components induced on the first `k`.
pub fn check_grone(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::Grone;
    let n = g.order();
    if n < 2 || !g.is_connected() {
        return Ok(TheoremReport::hypothesis_fail(id, "not connected with n >= 2"));
    }
    if !g.is_balanced().balanced {
        return Ok(TheoremReport::hypothesis_fail(id, "unbalanced"));
    }
    let (h, _) = g.canonical_form();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mu = laplacian_spectrum(&h)?;
    let mut subs = Vec::with_capacity(n - 1);
    for k in 1..n {
        let prefix = &order[..k];
        let t_k = h.induced(prefix)?.components().len();
        let deg_sum: usize = prefix.iter().map(|&v| h.degree(v)).sum();
        let lhs = mu.top_sum(k);
        let rhs_int = t_k + deg_sum;
        let rhs = rhs_int as f64;
        let margin = lhs - rhs;
        let certified = k == 1 && margin.abs() < 1e-6 && is_laplacian_eigenvalue(&h, rhs_int as i64);
        subs.push(sub(json!({ "k": k, "t_k": t_k }), lhs, rhs, margin, certified));
    }
    let mut detail = Map::new();
    detail.insert("order".into(), json!(order));
    Ok(fold(id, subs, detail))
}
