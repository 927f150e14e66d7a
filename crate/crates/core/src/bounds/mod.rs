//! Checkers for the spectral bounds and inequalities on signed graphs.
//!
//! Every checker returns a [`TheoremReport`]. `margin` is the slack of the
//! inequality: positive when it holds with room to spare, negative when it
//! fails. Verdicts follow one rule everywhere:
//!
//! * `margin < -TAU_THM` is a violation;
//! * `margin < TAU_TIE` is a tie, reported as `equality` only when the checker
//!   has an exact (combinatorial or integer) certificate for it and as
//!   `near_tie` otherwise;
//! * anything larger holds.

mod adjacency;
mod laplacian;

pub use adjacency::{
    ad1_certificate, bound_ad1, bound_comparison, check_ad2, check_balancing_deletion,
    check_kan_lemma,
};
pub use laplacian::{
    check_corollaries, check_corollary_mu1, check_corollary_mu1mu2, check_grone,
    check_laplacian_degree_sums, check_lp1, scan_lp1,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::sgr::to_sgr;
use crate::tol::{TAU_THM, TAU_TIE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    Ad1,
    Ad2,
    KanLemma,
    LapDegreeSums,
    Lp1,
    Grone,
    BalancingDeletion,
    BoundComparison,
    CorollaryMu1,
    CorollaryMu1mu2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Ad1,
        TheoremId::Ad2,
        TheoremId::KanLemma,
        TheoremId::LapDegreeSums,
        TheoremId::Lp1,
        TheoremId::Grone,
        TheoremId::BalancingDeletion,
        TheoremId::BoundComparison,
        TheoremId::CorollaryMu1,
        TheoremId::CorollaryMu1mu2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Ad1 => "ad1",
            TheoremId::Ad2 => "ad2",
            TheoremId::KanLemma => "kan_lemma",
            TheoremId::LapDegreeSums => "lap_degree_sums",
            TheoremId::Lp1 => "lp1",
            TheoremId::Grone => "grone",
            TheoremId::BalancingDeletion => "balancing_deletion",
            TheoremId::BoundComparison => "bound_comparison",
            TheoremId::CorollaryMu1 => "corollary_mu1",
            TheoremId::CorollaryMu1mu2 => "corollary_mu1mu2",
        }
    }

    /// Run the checker for this statement. `lp1` scans every admissible
    /// vertex subset.
    pub fn check(self, g: &SignedGraph) -> Result<TheoremReport> {
        match self {
            TheoremId::Ad1 => bound_ad1(g),
            TheoremId::Ad2 => check_ad2(g),
            TheoremId::KanLemma => check_kan_lemma(g),
            TheoremId::LapDegreeSums => check_laplacian_degree_sums(g),
            TheoremId::Lp1 => scan_lp1(g),
            TheoremId::Grone => check_grone(g),
            TheoremId::BalancingDeletion => check_balancing_deletion(g),
            TheoremId::BoundComparison => bound_comparison(g),
            TheoremId::CorollaryMu1 => check_corollary_mu1(g),
            TheoremId::CorollaryMu1mu2 => check_corollary_mu1mu2(g),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    /// Accepts the snake_case ids and their kebab-case spellings.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Equality,
    Exceptional,
    HypothesisFail,
    Violation,
    NearTie,
}

impl Verdict {
    pub const ALL: [Verdict; 6] = [
        Verdict::Holds,
        Verdict::Equality,
        Verdict::Exceptional,
        Verdict::HypothesisFail,
        Verdict::Violation,
        Verdict::NearTie,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Exceptional => "exceptional",
            Verdict::HypothesisFail => "hypothesis_fail",
            Verdict::Violation => "violation",
            Verdict::NearTie => "near_tie",
        }
    }

    /// Rank used when several sub-checks fold into one verdict.
    fn severity(self) -> u8 {
        match self {
            Verdict::HypothesisFail => 0,
            Verdict::Holds => 1,
            Verdict::Exceptional => 2,
            Verdict::Equality => 3,
            Verdict::NearTie => 4,
            Verdict::Violation => 5,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classify a slack value; `certified` says an exact equality certificate
/// applies to this instance.
pub fn classify(margin: f64, certified: bool) -> Verdict {
    if margin < -TAU_THM {
        Verdict::Violation
    } else if margin < TAU_TIE {
        if certified {
            Verdict::Equality
        } else {
            Verdict::NearTie
        }
    } else {
        Verdict::Holds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub verdict: Verdict,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub detail: Value,
}

impl TheoremReport {
    pub fn new(theorem_id: TheoremId, lhs: f64, rhs: f64, margin: f64, certified: bool, detail: Value) -> Self {
        TheoremReport {
            theorem_id,
            verdict: classify(margin, certified),
            lhs,
            rhs,
            margin,
            detail,
        }
    }

    /// A report for an input outside the statement's hypotheses. Numeric
    /// fields are NaN (serialized as `null`).
    pub fn hypothesis_fail(theorem_id: TheoremId, reason: &str) -> Self {
        TheoremReport {
            theorem_id,
            verdict: Verdict::HypothesisFail,
            lhs: f64::NAN,
            rhs: f64::NAN,
            margin: f64::NAN,
            detail: serde_json::json!({ "reason": reason }),
        }
    }

    /// The stable JSON record for this report on `g`.
    pub fn to_record(&self, g: &SignedGraph) -> Record<'_> {
        Record {
            theorem_id: self.theorem_id,
            graph: to_sgr(g),
            verdict: self.verdict,
            lhs: self.lhs,
            rhs: self.rhs,
            margin: self.margin,
            detail: &self.detail,
        }
    }
}

/// Serialized form of a verdict: `{theorem_id, graph, verdict, lhs, rhs,
/// margin, detail}`, with the graph as `.sgr` text.
#[derive(Clone, Debug, Serialize)]
pub struct Record<'a> {
    pub theorem_id: TheoremId,
    pub graph: String,
    pub verdict: Verdict,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub detail: &'a Value,
}

/// One inequality inside a multi-part check (one `k`, one vertex set, ...).
#[derive(Clone, Debug, Serialize)]
struct SubCheck {
    #[serde(flatten)]
    key: Value,
    lhs: f64,
    rhs: f64,
    margin: f64,
    verdict: Verdict,
}

/// Fold sub-checks: the most severe verdict wins, numbers come from the
/// sub-check with the smallest margin.
fn fold(theorem_id: TheoremId, subs: Vec<SubCheck>, mut detail: serde_json::Map<String, Value>) -> TheoremReport {
    let worst = subs
        .iter()
        .min_by(|a, b| a.margin.total_cmp(&b.margin))
        .expect("at least one sub-check");
    let verdict = subs
        .iter()
        .map(|s| s.verdict)
        .max_by_key(|v| v.severity())
        .expect("at least one sub-check");
    let (lhs, rhs, margin) = (worst.lhs, worst.rhs, worst.margin);
    detail.insert("worst".into(), worst.key.clone());
    detail.insert(
        "checks".into(),
        serde_json::to_value(&subs).expect("plain data serializes"),
    );
    TheoremReport {
        theorem_id,
        verdict,
        lhs,
        rhs,
        margin,
        detail: Value::Object(detail),
    }
}
