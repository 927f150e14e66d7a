use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_switching_classes, enumerate_underlying};
use crate::bounds::{TheoremId, TheoremReport, Verdict};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::invariants::is_bipartite_underlying;

/// Largest `n_max` scanned without [`ScanOptions::allow_n7`].
pub const DEFAULT_SCAN_CAP: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanFilters {
    pub connected_only: bool,
    pub unbalanced_only: bool,
    pub nonbipartite_only: bool,
}

impl ScanFilters {
    fn keeps_underlying(&self, u: &SignedGraph) -> bool {
        (!self.connected_only || u.is_connected()) && (!self.nonbipartite_only || !is_bipartite_underlying(u))
    }

    fn keeps(&self, g: &SignedGraph) -> bool {
        !self.unbalanced_only || !g.is_balanced().balanced
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    pub filters: ScanFilters,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
    /// Permit `n_max = 7`.
    pub allow_n7: bool,
}

/// Per-underlying-graph result: graphs checked, non-holds records, verdict counts.
type Part = (usize, Vec<ScanRecord>, BTreeMap<Verdict, usize>);

#[derive(Clone, Debug)]
pub struct ScanRecord {
    pub graph: SignedGraph,
    pub report: TheoremReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub theorem_id: TheoremId,
    pub n_max: usize,
    pub filters: ScanFilters,
    /// Signed graphs checked.
    pub graphs: usize,
    /// Count per verdict, every verdict listed.
    pub counts: BTreeMap<Verdict, usize>,
}

impl ScanSummary {
    pub fn count(&self, v: Verdict) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct ScanOutput {
    /// Every record whose verdict is not `holds`, in enumeration order.
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanOutput {
    /// JSON lines: one per record, then `{"summary": ...}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(&r.report.to_record(&r.graph)).expect("serializable"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": &self.summary });
        out.push_str(&serde_json::to_string(&summary).expect("serializable"));
        out.push('\n');
        out
    }
}

/// Run `theorem` on one representative of every switching class of every
/// underlying graph with `1 <= n <= n_max`, subject to `filters`.
///
/// Graphs are visited by order, then canonical underlying code, then sign
/// pattern; output is independent of the number of workers. `progress`
/// receives `(done, total)` underlying graphs as they finish, possibly out of
/// order.
pub fn scan(
    theorem: TheoremId,
    n_max: usize,
    options: &ScanOptions,
    progress: Option<&(dyn Fn(usize, usize) + Sync)>,
) -> Result<ScanOutput> {
    let cap = if options.allow_n7 { 7 } else { DEFAULT_SCAN_CAP };
    if n_max > cap {
        return Err(Error::TooLarge {
            what: "exhaustive scan",
            n: n_max,
            cap,
        });
    }
    let filters = options.filters;
    let mut underlying = Vec::new();
    for n in 1..=n_max {
        underlying.extend(enumerate_underlying(n)?.into_iter().filter(|u| filters.keeps_underlying(u)));
    }
    let total = underlying.len();
    let done = std::sync::atomic::AtomicUsize::new(0);

    let work = || -> Result<Vec<Part>> {
        underlying
            .par_iter()
            .map(|u| {
                let classes = enumerate_switching_classes(u)?;
                let results: Vec<ScanRecord> = classes
                    .into_par_iter()
                    .filter(|g| filters.keeps(g))
                    .map(|g| {
                        let report = theorem.check(&g)?;
                        Ok(ScanRecord { graph: g, report })
                    })
                    .collect::<Result<_>>()?;
                let mut counts = BTreeMap::new();
                let mut kept = Vec::new();
                let checked = results.len();
                for r in results {
                    *counts.entry(r.report.verdict).or_insert(0) += 1;
                    if r.report.verdict != Verdict::Holds {
                        kept.push(r);
                    }
                }
                if let Some(p) = progress {
                    p(done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1, total);
                }
                Ok((checked, kept, counts))
            })
            .collect()
    };
    let parts = if options.jobs == 0 {
        work()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(work)?
    };

    let mut counts: BTreeMap<Verdict, usize> = Verdict::ALL.into_iter().map(|v| (v, 0)).collect();
    let mut records = Vec::new();
    let mut graphs = 0;
    for (checked, kept, c) in parts {
        graphs += checked;
        records.extend(kept);
        for (v, k) in c {
            *counts.entry(v).or_insert(0) += k;
        }
    }
    Ok(ScanOutput {
        records,
        summary: ScanSummary {
            theorem_id: theorem,
            n_max,
            filters,
            graphs,
            counts,
        },
    })
}
