use std::io::BufRead;

use anyhow::Context;
use serde::{Deserialize, Serialize};

use tough_closure::graph6::parse_graph6;
use tough_closure::Limits;

use crate::record::{ExperimentRecord, Verdict};
use crate::task::{evaluate, Task};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCheck {
    pub records: u64,
    pub reproduced: u64,
    /// Records whose instance could not be produced in the first place.
    pub skipped: u64,
    /// `(line, reason)` for each record that did not reproduce.
    pub mismatches: Vec<(usize, String)>,
}

/// Re-runs every record from its graph6 and stored task, comparing the
/// verdict and detail. ERROR records (timeouts, caps) are re-run too but only
/// need to error again.
pub fn check_records(reader: impl BufRead, limits: &Limits) -> anyhow::Result<CorpusCheck> {
    let mut out = CorpusCheck::default();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let lineno = k + 1;
        let record: ExperimentRecord =
            serde_json::from_str(&line).with_context(|| format!("line {lineno}: not an experiment record"))?;
        out.records += 1;
        if record.instance.is_empty() {
            out.skipped += 1;
            continue;
        }
        let task: Task = serde_json::from_value(record.parameters["task"].clone())
            .with_context(|| format!("line {lineno}: no task in parameters"))?;
        let g = parse_graph6(&record.instance).with_context(|| format!("line {lineno}"))?;
        let eval = evaluate(&task, &g, limits);
        let ok = if record.verdict == Verdict::Error {
            eval.verdict == Verdict::Error
        } else {
            eval.verdict == record.verdict && eval.detail == record.detail
        };
        if ok {
            out.reproduced += 1;
        } else {
            out.mismatches.push((lineno, format!("stored {} but re-ran to {}", record.verdict, eval.verdict)));
        }
    }
    Ok(out)
}
