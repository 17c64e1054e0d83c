use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use tough_closure::graph6::encode_graph6;
use tough_closure::Limits;

use crate::plan::{Source, SweepPlan, EXHAUSTIVE_MAX_N};
use crate::record::{now_utc, ExperimentRecord, Summary, Verdict, SCHEMA_VERSION};
use crate::task::{evaluate, Task};

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);
const CHUNK: u64 = 4096;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Size caps; any deadline here is ignored in favour of `timeout`.
    pub limits: Limits,
    pub timeout: Option<Duration>,
    pub exhaustive_max_n: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { limits: Limits::default(), timeout: Some(DEFAULT_TIMEOUT), exhaustive_max_n: EXHAUSTIVE_MAX_N }
    }
}

impl SweepConfig {
    /// Defaults, with size caps taken from `TOUGH_CLOSURE_MAX_N` when set.
    pub fn from_env() -> anyhow::Result<Self> {
        let mut config = SweepConfig::default();
        if let Ok(v) = std::env::var("TOUGH_CLOSURE_MAX_N") {
            let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("TOUGH_CLOSURE_MAX_N={v:?} is not a number"))?;
            config.limits.toughness_max_n = n;
            config.limits.solver_max_n = n;
        }
        Ok(config)
    }

    fn instance_limits(&self) -> Limits {
        let limits = Limits { deadline: None, ..self.limits.clone() };
        match self.timeout {
            Some(t) => limits.with_timeout(t),
            None => limits,
        }
    }

    fn parameters(&self, plan: &SweepPlan, task: &Task) -> Value {
        json!({
            "task": task,
            "plan": plan,
            "caps": {
                "toughness_max_n": self.limits.toughness_max_n,
                "solver_max_n": self.limits.solver_max_n,
                "timeout_ms": self.timeout.map(|t| t.as_millis() as u64),
            },
        })
    }
}

enum Item {
    Filtered,
    Done(ExperimentRecord, Vec<&'static str>),
}

/// Runs `task` over every instance of `plan`, handing records to `sink` in
/// instance order. Work is spread over the rayon pool chunk by chunk.
pub fn run_sweep(
    plan: &SweepPlan,
    task: &Task,
    config: &SweepConfig,
    sink: &mut dyn FnMut(&ExperimentRecord) -> anyhow::Result<()>,
) -> anyhow::Result<Summary> {
    let source = Source::open(&plan.family, config.exhaustive_max_n)?;
    let parameters = config.parameters(plan, task);
    let experiment_id = task.id();
    let mut summary = Summary::default();
    let total = source.len();
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let items: Vec<Item> = (start..end)
            .into_par_iter()
            .map(|k| run_one(&source, k, plan, task, config, &experiment_id, &parameters))
            .collect();
        for item in items {
            match item {
                Item::Filtered => summary.filtered_out += 1,
                Item::Done(record, tags) => {
                    summary.add(record.verdict);
                    for tag in tags {
                        summary.tag(tag);
                    }
                    sink(&record)?;
                }
            }
        }
        start = end;
    }
    Ok(summary)
}

fn run_one(
    source: &Source,
    k: u64,
    plan: &SweepPlan,
    task: &Task,
    config: &SweepConfig,
    experiment_id: &str,
    parameters: &Value,
) -> Item {
    let clock = Instant::now();
    let record = |instance: String, verdict: Verdict, detail: Value| ExperimentRecord {
        schema: SCHEMA_VERSION,
        experiment_id: experiment_id.to_string(),
        timestamp: now_utc(),
        instance,
        index: k,
        parameters: parameters.clone(),
        verdict,
        detail,
        runtime_ms: clock.elapsed().as_millis() as u64,
    };
    let g = match source.get(k, &config.limits) {
        Ok(g) => g,
        Err(e) => return Item::Done(record(String::new(), Verdict::Error, json!({ "error": e })), Vec::new()),
    };
    let instance = encode_graph6(&g);
    let limits = config.instance_limits();
    for f in &plan.filters {
        match f.admits(&g, &limits) {
            Ok(true) => {}
            Ok(false) => return Item::Filtered,
            Err(e) => {
                let detail = json!({ "error": e.to_string(), "filter": f });
                return Item::Done(record(instance, Verdict::Error, detail), Vec::new());
            }
        }
    }
    let eval = evaluate(task, &g, &limits);
    Item::Done(record(instance, eval.verdict, eval.detail), eval.tags)
}

/// Runs a sweep keeping only the summary and the counterexample records.
pub fn run_collecting(
    plan: &SweepPlan,
    task: &Task,
    config: &SweepConfig,
) -> anyhow::Result<(Summary, Vec<ExperimentRecord>)> {
    let mut bad = Vec::new();
    let summary = run_sweep(plan, task, config, &mut |r| {
        if r.verdict == Verdict::Counterexample {
            bad.push(r.clone());
        }
        Ok(())
    })?;
    Ok((summary, bad))
}

/// Four-tough Hamiltonicity sweep: 4-toughness and P(4) gates, solver plus the
/// closure-and-clique construction on every gated instance.
pub fn run_verify_theorem6(plan: &SweepPlan, config: &SweepConfig) -> anyhow::Result<(Summary, Vec<ExperimentRecord>)> {
    run_collecting(plan, &Task::Theorem6, config)
}

/// Closure equivalence at threshold `n - t`.
pub fn run_verify_closure(
    plan: &SweepPlan,
    t: u32,
    config: &SweepConfig,
) -> anyhow::Result<(Summary, Vec<ExperimentRecord>)> {
    let task = if t == 0 { Task::Bc } else { Task::Closure { t } };
    run_collecting(plan, &task, config)
}

pub fn run_rotation_properties(
    plan: &SweepPlan,
    config: &SweepConfig,
) -> anyhow::Result<(Summary, Vec<ExperimentRecord>)> {
    run_collecting(plan, &Task::Rotations, config)
}
