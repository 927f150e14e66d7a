use serde_json::json;

use super::{TheoremId, TheoremReport, Verdict};
use crate::error::Result;
use crate::graph::{SignedGraph, SwitchingFunction};
use crate::invariants::{
    balanced_cliques, frustration_index, is_bipartite_underlying, odd_girth, triangle_counts,
    CliqueReport,
};
use crate::spectra::{adjacency_spectrum, nonneg_eigvec_switch};
use crate::tol::TAU_THM;

/// The clique-weighted bound and the switching it was computed from.
struct Ad1 {
    rhs: f64,
    cliques: CliqueReport,
    /// `g` switched so the first eigenvector is non-negative.
    switched: SignedGraph,
    /// Switching taking `g` to `switched`.
    theta: SwitchingFunction,
}

impl Ad1 {
    fn compute(g: &SignedGraph, cliques: CliqueReport) -> Result<Self> {
        // start from the canonical representative so the result does not
        // depend on which member of the switching class was passed in
        let (canon, to_canon) = g.canonical_form();
        let (switched, theta) = nonneg_eigvec_switch(&canon)?;
        let sum: f64 = switched
            .positive_edges()
            .map(|e| {
                let c = cliques.c_b(e.u, e.v).expect("every edge has c_b") as f64;
                (c - 1.0) / c
            })
            .sum();
        Ok(Ad1 {
            rhs: (2.0 * sum).sqrt(),
            cliques,
            switched,
            theta: to_canon.compose(&theta),
        })
    }

    fn positive_count(&self) -> usize {
        self.switched.size() - self.switched.negative_edge_count()
    }
}

/// Structural equality case: `g` balanced and, ignoring isolated vertices,
/// complete bipartite (`omega_b = 2`) or complete multipartite with
/// `omega_b` parts of equal size.
pub fn ad1_certificate(g: &SignedGraph, omega_b: usize) -> bool {
    if omega_b < 2 || !g.is_balanced().balanced {
        return false;
    }
    let active: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    // complete multipartite iff non-adjacency is an equivalence relation
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for &v in &active {
        match parts.iter_mut().find(|p| !g.is_adjacent(p[0], v)) {
            Some(p) => p.push(v),
            None => parts.push(vec![v]),
        }
    }
    let multipartite = parts.iter().enumerate().all(|(i, p)| {
        p.iter().enumerate().all(|(a, &x)| p[a + 1..].iter().all(|&y| !g.is_adjacent(x, y)))
            && parts[i + 1..]
                .iter()
                .all(|q| p.iter().all(|&x| q.iter().all(|&y| g.is_adjacent(x, y))))
    });
    if !multipartite || parts.len() != omega_b {
        return false;
    }
    omega_b == 2 || parts.iter().all(|p| p.len() == parts[0].len())
}

/// `lambda_1(g) <= sqrt(2 sum_{e in E+(g')} (c_b(e) - 1) / c_b(e))` with `g'`
/// a switching of `g` whose first eigenvector is non-negative.
pub fn bound_ad1(g: &SignedGraph) -> Result<TheoremReport> {
    let cliques = balanced_cliques(g);
    if cliques.omega_b < 2 {
        return Ok(TheoremReport::hypothesis_fail(TheoremId::Ad1, "omega_b < 2"));
    }
    let omega = cliques.omega_b;
    let lhs = adjacency_spectrum(g)?.largest();
    let ad1 = Ad1::compute(g, cliques)?;
    let certified = ad1_certificate(g, omega);
    let detail = json!({
        "omega_b": omega,
        "switching": ad1.theta.negative_set(),
        "positive_edges": ad1.positive_count(),
        "certificate": certified,
    });
    Ok(TheoremReport::new(TheoremId::Ad1, lhs, ad1.rhs, ad1.rhs - lhs, certified, detail))
}

/// Chain `rhs_AD1 <= rhs_Kan <= rhs_Sun`, plus agreement with the unsigned
/// clique bound on all-positive graphs.
///
/// `lhs = rhs_AD1`, `rhs = rhs_Kan`; the other two relations are exact
/// guards that only ever force a violation.
pub fn bound_comparison(g: &SignedGraph) -> Result<TheoremReport> {
    let cliques = balanced_cliques(g);
    if cliques.omega_b < 2 {
        return Ok(TheoremReport::hypothesis_fail(TheoremId::BoundComparison, "omega_b < 2"));
    }
    let omega = cliques.omega_b;
    let w = omega as f64;
    let m = g.size();
    let (eps, _) = frustration_index(g)?;
    let ad1 = Ad1::compute(g, cliques)?;
    let kan = (2.0 * (m - eps) as f64 * (w - 1.0) / w).sqrt();
    let sun = (2.0 * m as f64 * (w - 1.0) / w).sqrt();

    // rhs_AD1 = rhs_Kan exactly when every positive edge of g' lies in a
    // maximum balanced clique and g' has only eps negative edges
    let positive = ad1.positive_count();
    let certified = positive == m - eps
        && ad1
            .switched
            .positive_edges()
            .all(|e| ad1.cliques.c_b(e.u, e.v) == Some(omega));

    let liu_ning = if g.is_all_positive() {
        let c = balanced_cliques(&g.underlying());
        let sum: f64 = g
            .edges()
            .iter()
            .map(|e| {
                let c = c.c_b(e.u, e.v).expect("edge") as f64;
                (c - 1.0) / c
            })
            .sum();
        Some((2.0 * sum).sqrt())
    } else {
        None
    };

    let mut report = TheoremReport::new(
        TheoremId::BoundComparison,
        ad1.rhs,
        kan,
        kan - ad1.rhs,
        certified,
        json!({
            "omega_b": omega,
            "frustration": eps,
            "rhs_ad1": ad1.rhs,
            "rhs_kan": kan,
            "rhs_sun": sun,
            "rhs_liu_ning": liu_ning,
            "certificate": certified,
        }),
    );
    let mut guards = vec![sun - kan];
    if let Some(ln) = liu_ning {
        guards.push(-(ln - ad1.rhs).abs());
    }
    if let Some(&bad) = guards.iter().find(|&&x| x < -TAU_THM) {
        report.verdict = Verdict::Violation;
        report.margin = report.margin.min(bad);
    }
    Ok(report)
}

/// Non-bipartite `g` with `lambda_1 >= sqrt(m - 1)` and `lambda_1 >= |lambda_n|`
/// has a balanced triangle, unless it switches to `(C5, +)` plus isolated
/// vertices.
///
/// `lhs = sqrt(m - 1)`, `rhs = lambda_1`.
pub fn check_ad2(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::Ad2;
    if g.size() == 0 || is_bipartite_underlying(g) {
        return Ok(TheoremReport::hypothesis_fail(id, "underlying graph is bipartite"));
    }
    let s = adjacency_spectrum(g)?;
    let (l1, ln) = (s.largest(), s.smallest());
    let lhs = ((g.size() - 1) as f64).sqrt();
    if l1 < lhs - TAU_THM {
        return Ok(TheoremReport::hypothesis_fail(id, "lambda_1 < sqrt(m - 1)"));
    }
    if l1 < ln.abs() - TAU_THM {
        return Ok(TheoremReport::hypothesis_fail(id, "lambda_1 < |lambda_n|"));
    }
    let (t_pos, t_neg) = triangle_counts(g);
    let margin = l1 - lhs;
    let verdict = if t_pos >= 1 {
        Verdict::Holds
    } else if is_pentagon_class(g) {
        Verdict::Exceptional
    } else {
        Verdict::Violation
    };
    Ok(TheoremReport {
        theorem_id: id,
        verdict,
        lhs,
        rhs: l1,
        margin,
        detail: json!({
            "balanced_triangles": t_pos,
            "unbalanced_triangles": t_neg,
            "lambda_n": ln,
        }),
    })
}

/// `g ~ (C5, +)` plus isolated vertices.
fn is_pentagon_class(g: &SignedGraph) -> bool {
    let mut degrees = g.degree_sequence();
    degrees.retain(|&d| d > 0);
    if degrees != [2, 2, 2, 2, 2] || odd_girth(g) != Some(5) || !g.is_balanced().balanced {
        return false;
    }
    g.switching_equivalent(&g.underlying())
}

/// `lambda_1^2 + lambda_2^2 <= m` for `n >= 3`, no balanced triangle and
/// `lambda_1 >= |lambda_n|`.
pub fn check_kan_lemma(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::KanLemma;
    if g.order() < 3 {
        return Ok(TheoremReport::hypothesis_fail(id, "n < 3"));
    }
    let (t_pos, _) = triangle_counts(g);
    if t_pos > 0 {
        return Ok(TheoremReport::hypothesis_fail(id, "has a balanced triangle"));
    }
    let s = adjacency_spectrum(g)?;
    if s.largest() < s.smallest().abs() - TAU_THM {
        return Ok(TheoremReport::hypothesis_fail(id, "lambda_1 < |lambda_n|"));
    }
    let (l1, l2) = (s.values[0], s.values[1]);
    let lhs = l1 * l1 + l2 * l2;
    let rhs = g.size() as f64;
    Ok(TheoremReport::new(
        id,
        lhs,
        rhs,
        rhs - lhs,
        false,
        json!({ "lambda_1": l1, "lambda_2": l2 }),
    ))
}

/// Deleting the negative edges `S` of the non-negative-eigenvector switching
/// of an unbalanced `g` strictly increases `lambda_1`.
///
/// `lhs = lambda_1(g)`, `rhs = lambda_1(g - S)`.
pub fn check_balancing_deletion(g: &SignedGraph) -> Result<TheoremReport> {
    let id = TheoremId::BalancingDeletion;
    if g.is_balanced().balanced {
        return Ok(TheoremReport::hypothesis_fail(id, "balanced"));
    }
    let (canon, _) = g.canonical_form();
    let (switched, _) = nonneg_eigvec_switch(&canon)?;
    let s: Vec<(usize, usize)> = switched.negative_edges().map(|e| e.pair()).collect();
    let reduced = switched.delete_edges(&s)?;
    let lhs = adjacency_spectrum(g)?.largest();
    let rhs = adjacency_spectrum(&reduced)?.largest();
    Ok(TheoremReport::new(
        id,
        lhs,
        rhs,
        rhs - lhs,
        false,
        json!({ "deleted": s, "reduced_balanced": reduced.is_balanced().balanced }),
    ))
}
