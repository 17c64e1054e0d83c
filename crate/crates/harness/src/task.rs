//! Per-instance verification targets. Each evaluation is a pure function of
//! the task, the graph and the size caps, so stored records can be replayed.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use tough_closure::closure::{LemmaContext, LemmaVerdict, Outcome, SingleEdgeVariant};
use tough_closure::closure::t_closure;
use tough_closure::degree::{assemble_cycle_via_clique_with, chvatal_condition, predicate_pt, universal_cliques, CliqueAssembly};
use tough_closure::hamiltonicity::{
    apply_rotation, compute_proof_sets_with, find_hamiltonian_cycle_with, find_hamiltonian_path_with,
    find_segment_gap, gap_pairs, scan_rotations, HamPath, SegmentGap, SegmentRule,
};
use tough_closure::rational::{as_string, integer};
use tough_closure::toughness::toughness_with;
use tough_closure::{Error, Graph, Limits, Rational};

use crate::record::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "target", rename_all = "snake_case")]
pub enum Task {
    /// `Hamiltonian(G) <=> Hamiltonian(closure(G))`, no hypotheses.
    Bc,
    /// Closure equivalence at threshold `n - t` with the matching toughness gate.
    Closure { t: u32 },
    L7,
    L8 {
        #[serde(with = "as_string")]
        eps: Rational,
        allow_quarter: bool,
    },
    L9 { t: u32, strict: bool },
    L11 { t: u32 },
    Corollary {
        #[serde(with = "as_string")]
        t_prime: Rational,
    },
    Theorem6,
    Rotations,
    Identities { rule: SegmentRule },
    Chvatal,
}

impl Task {
    pub fn id(&self) -> String {
        match self {
            Task::Bc => "bc".into(),
            Task::Closure { t } => format!("closure-t{t}"),
            Task::L7 => "l7".into(),
            Task::L8 { eps, .. } => format!("l8-eps{eps}"),
            Task::L9 { t, strict } => format!("l9-t{t}{}", if *strict { "-strict" } else { "" }),
            Task::L11 { t } => format!("l11-t{t}"),
            Task::Corollary { t_prime } => format!("corollary-t{t_prime}"),
            Task::Theorem6 => "theorem6".into(),
            Task::Rotations => "rotations".into(),
            Task::Identities { .. } => "identities".into(),
            Task::Chvatal => "chvatal".into(),
        }
    }
}

/// Verdict, a JSON detail object, and tags counted into the sweep summary.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub verdict: Verdict,
    pub detail: Value,
    pub tags: Vec<&'static str>,
}

impl Evaluation {
    fn new(verdict: Verdict, detail: Value) -> Self {
        Evaluation { verdict, detail, tags: Vec::new() }
    }

    fn error(e: &Error) -> Self {
        Evaluation::new(Verdict::Error, json!({ "error": e.to_string() }))
    }
}

pub fn evaluate(task: &Task, g: &Graph, limits: &Limits) -> Evaluation {
    let result = match task {
        Task::Bc => lemma(g, limits, |ctx| ctx.closure_equivalence(0)),
        Task::Closure { t } => lemma(g, limits, |ctx| ctx.closure_equivalence(*t)),
        Task::L11 { t } => lemma(g, limits, |ctx| ctx.t_closure_lemma(*t)),
        Task::L7 => single_edge(g, limits, |ctx, x, y| ctx.single_edge(x, y, SingleEdgeVariant::L7)),
        Task::L8 { eps, allow_quarter } => single_edge(g, limits, |ctx, x, y| {
            ctx.single_edge(x, y, SingleEdgeVariant::L8 { eps: *eps, allow_quarter: *allow_quarter })
        }),
        Task::L9 { t, strict } => {
            single_edge(g, limits, |ctx, x, y| ctx.single_edge(x, y, SingleEdgeVariant::L9 { t: *t, strict: *strict }))
        }
        Task::Corollary { t_prime } => single_edge(g, limits, |ctx, x, y| ctx.corollary(x, y, *t_prime)),
        Task::Theorem6 => theorem6(g, limits),
        Task::Rotations => rotations(g, limits),
        Task::Identities { rule } => identities(g, limits, *rule),
        Task::Chvatal => chvatal(g, limits),
    };
    result.unwrap_or_else(|e| Evaluation::error(&e))
}

fn verdict_json(v: &LemmaVerdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn lemma(
    g: &Graph,
    limits: &Limits,
    run: impl FnOnce(&mut LemmaContext) -> tough_closure::Result<LemmaVerdict>,
) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let mut ctx = LemmaContext::new(g, limits);
    let v = run(&mut ctx)?;
    Ok(Evaluation::new(v.outcome.into(), verdict_json(&v)))
}

/// Runs the lemma on every nonadjacent pair. The instance verdict is the
/// first counterexample if any, else PASS if some pair passed, else
/// NOT_APPLICABLE.
fn single_edge(
    g: &Graph,
    limits: &Limits,
    mut run: impl FnMut(&mut LemmaContext, usize, usize) -> tough_closure::Result<LemmaVerdict>,
) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let mut ctx = LemmaContext::new(g, limits);
    let mut passed = 0u64;
    let mut pairs = 0u64;
    let mut first_pass = None;
    for (x, y) in g.non_edges() {
        pairs += 1;
        let v = run(&mut ctx, x, y)?;
        match v.outcome {
            Outcome::Counterexample => {
                return Ok(Evaluation::new(
                    Verdict::Counterexample,
                    json!({ "x": x, "y": y, "pairs_checked": pairs, "verdict": verdict_json(&v) }),
                ));
            }
            Outcome::Pass => {
                passed += 1;
                first_pass.get_or_insert((x, y, v));
            }
            Outcome::NotApplicable => {}
        }
    }
    let toughness = ctx.toughness()?.value;
    let hamiltonian = ctx.hamiltonicity()?.is_hamiltonian();
    Ok(match first_pass {
        Some((x, y, v)) => Evaluation::new(
            Verdict::Pass,
            json!({ "pairs": pairs, "pairs_passed": passed, "x": x, "y": y, "verdict": verdict_json(&v) }),
        ),
        None => Evaluation::new(
            Verdict::NotApplicable,
            json!({ "pairs": pairs, "toughness": toughness.to_string(), "hamiltonian": hamiltonian }),
        ),
    })
}

fn theorem6(g: &Graph, limits: &Limits) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let report = toughness_with(g, limits)?;
    let tough = report.value.at_least(integer(4));
    let pt = predicate_pt(&g.degree_sequence(), 4);
    if !tough || !pt.holds() {
        return Ok(Evaluation::new(
            Verdict::NotApplicable,
            json!({
                "four_tough": tough,
                "toughness": report.value.to_string(),
                "cutset": report.witness,
                "p4": pt,
            }),
        ));
    }
    let cert = find_hamiltonian_cycle_with(g, limits)?;
    let closure = t_closure(g, 3);
    let omega = universal_cliques(&closure.closed).omega;
    let assembly = assemble_cycle_via_clique_with(&closure.closed, omega, limits)?;
    let constructive = matches!(assembly, CliqueAssembly::Cycle { .. });
    let verdict = if cert.is_hamiltonian() { Verdict::Pass } else { Verdict::Counterexample };
    let mut eval = Evaluation::new(
        verdict,
        json!({
            "toughness": report.value.to_string(),
            "solver": cert,
            "closure_edges_added": closure.trace.len(),
            "omega": omega,
            "assembly": assembly,
            "routes": {
                "solver": cert.is_hamiltonian(),
                "closure_clique": constructive,
            },
        }),
    );
    if cert.is_hamiltonian() {
        eval.tags.push("route_solver");
    }
    if constructive {
        eval.tags.push("route_closure_clique");
    }
    Ok(eval)
}

/// The lexicographically first nonadjacent pair joined by a Hamiltonian path.
fn first_path(g: &Graph, limits: &Limits) -> tough_closure::Result<Option<HamPath>> {
    for (x, y) in g.non_edges() {
        if let Some(p) = find_hamiltonian_path_with(g, x, y, limits)?.path {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn rotations(g: &Graph, limits: &Limits) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let Some(p) = first_path(g, limits)? else {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "no Hamiltonian path between nonadjacent vertices" })));
    };
    let cert = find_hamiltonian_cycle_with(g, limits)?;
    let found = scan_rotations(g, &p)?;
    let mut violations = Vec::new();
    if cert.is_hamiltonian() {
        for cfg in &found {
            if let Err(e) = apply_rotation(g, &p, cfg) {
                violations.push(json!({ "rotation": cfg, "error": e.to_string() }));
            }
        }
    } else {
        if !found.is_empty() {
            violations.push(json!({ "rotations_on_non_hamiltonian": found }));
        }
        for (a, b) in gap_pairs(g, &p) {
            if let SegmentGap::Counterexample(why) = find_segment_gap(g, &p, a, b)? {
                violations.push(json!({ "a": a, "b": b, "gap": why }));
            }
        }
    }
    let verdict = if violations.is_empty() { Verdict::Pass } else { Verdict::Counterexample };
    let mut eval = Evaluation::new(
        verdict,
        json!({
            "path": p.order,
            "hamiltonian": cert.is_hamiltonian(),
            "rotations": found.len(),
            "violations": violations,
        }),
    );
    eval.tags.push(if cert.is_hamiltonian() { "hamiltonian" } else { "non_hamiltonian" });
    Ok(eval)
}

fn identities(g: &Graph, limits: &Limits, rule: SegmentRule) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let Some(p) = first_path(g, limits)? else {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "no Hamiltonian path between nonadjacent vertices" })));
    };
    let sets = compute_proof_sets_with(g, &p, rule)?;
    let ids = sets.identities(g, &p);
    let mut eval = Evaluation::new(
        if ids.all() { Verdict::Pass } else { Verdict::Counterexample },
        json!({ "path": p.order, "identities": ids, "sets": sets }),
    );
    for (name, holds) in [
        ("degree_sum_failed", ids.degree_sum),
        ("d2_twice_s0_failed", ids.d2_twice_s0),
        ("dx_dy_balance_failed", ids.dx_dy_balance),
        ("segment_count_failed", ids.segment_count),
    ] {
        if !holds {
            eval.tags.push(name);
        }
    }
    Ok(eval)
}

fn chvatal(g: &Graph, limits: &Limits) -> tough_closure::Result<Evaluation> {
    if g.order() < 3 {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "reason": "n < 3" })));
    }
    let condition = chvatal_condition(&g.degree_sequence());
    if !condition.holds() {
        return Ok(Evaluation::new(Verdict::NotApplicable, json!({ "condition": condition })));
    }
    let cert = find_hamiltonian_cycle_with(g, limits)?;
    let verdict = if cert.is_hamiltonian() { Verdict::Pass } else { Verdict::Counterexample };
    Ok(Evaluation::new(verdict, json!({ "condition": condition, "solver": cert })))
}
