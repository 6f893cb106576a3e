//! Claim verification over graph6 streams.
//!
//! Graphs are checked independently, so the stream fans out across a worker
//! pool; records are re-sequenced to input order and the summary merge is
//! order-independent, which makes the output byte-identical for any worker
//! count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::claims::{run_checks, ClaimId, ClaimReport, Verdict};
use crate::io::parse_graph6;

/// One output line per input line: a report, or a parse diagnostic.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum StreamRecord {
    Report {
        index: usize,
        graph6: String,
        reports: Vec<ClaimReport>,
    },
    ParseError {
        index: usize,
        line: usize,
        error: String,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub hypotheses_not_met: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct StreamSummary {
    pub graphs: usize,
    pub parse_errors: usize,
    /// Per-claim verdict counts, keyed by claim name (sorted).
    pub claims: BTreeMap<String, VerdictCounts>,
}

impl StreamSummary {
    pub fn any_fail(&self) -> bool {
        self.claims.values().any(|c| c.fail > 0)
    }
}

/// Runs `checks` on every graph6 line. `lines` carries 1-based line numbers
/// so diagnostics point at the right spot; unparseable lines are skipped and
/// counted. Output order matches input order regardless of `workers`.
pub fn verify_lines(
    lines: &[(usize, String)],
    checks: &[ClaimId],
    workers: usize,
) -> (Vec<StreamRecord>, StreamSummary) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("worker pool");
    let records: Vec<StreamRecord> = pool.install(|| {
        lines
            .par_iter()
            .enumerate()
            .map(|(index, (line_no, text))| match parse_graph6(text) {
                Ok(graph) => StreamRecord::Report {
                    index,
                    graph6: text.trim().to_owned(),
                    reports: run_checks(&graph, checks),
                },
                Err(err) => StreamRecord::ParseError {
                    index,
                    line: *line_no,
                    error: err.to_string(),
                },
            })
            .collect()
    });
    let summary = summarize(&records);
    (records, summary)
}

fn summarize(records: &[StreamRecord]) -> StreamSummary {
    let mut summary = StreamSummary::default();
    for record in records {
        match record {
            StreamRecord::ParseError { .. } => summary.parse_errors += 1,
            StreamRecord::Report { reports, .. } => {
                summary.graphs += 1;
                for report in reports {
                    let counts = summary.claims.entry(report.claim.name().to_owned()).or_default();
                    match report.verdict {
                        Verdict::Pass => counts.pass += 1,
                        Verdict::Fail => counts.fail += 1,
                        Verdict::HypothesesNotMet => counts.hypotheses_not_met += 1,
                    }
                }
            }
        }
    }
    summary
}
