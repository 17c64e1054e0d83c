//! Verification sweeps over graph families with JSONL output.

pub mod corpus;
pub mod plan;
pub mod record;
pub mod sweep;
pub mod task;
pub mod tightness;

pub use plan::{Density, Family, Filter, SweepPlan};
pub use record::{ExperimentRecord, Summary, Verdict};
pub use sweep::{
    run_collecting, run_rotation_properties, run_sweep, run_verify_closure, run_verify_theorem6, SweepConfig,
};
pub use task::{evaluate, Evaluation, Task};
pub use tightness::{recheck_finding, run_tightness_search, Finding, TightnessReport};
