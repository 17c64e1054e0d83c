//! Search for graphs showing the toughness hypothesis of the single-edge
//! lemmas cannot be dropped: `x, y` nonadjacent with `d(x) + d(y) >= n - t`,
//! `G + xy` Hamiltonian and `G` not. The best toughness found is a lower
//! bound on where the hypothesis is needed; nothing is claimed about
//! optimality.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use tough_closure::generators::random_graph;
use tough_closure::graph6::{encode_graph6, parse_graph6};
use tough_closure::hamiltonicity::find_hamiltonian_cycle_with;
use tough_closure::rational::{closure_toughness_bound, integer, rational};
use tough_closure::toughness::{toughness_with, Toughness};
use tough_closure::{Graph, Limits, Rational};

pub const KEEP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub instance: String,
    pub x: usize,
    pub y: usize,
    pub degree_sum: usize,
    pub toughness: Toughness,
    /// The toughness reaches the bound under which the lemma forbids this.
    pub contradiction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub t: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub budget: u64,
    pub seed: u64,
    pub examined: u64,
    /// Instances that had at least one qualifying pair.
    pub hits: u64,
    /// Best findings, highest toughness first.
    pub findings: Vec<Finding>,
    pub contradiction: bool,
}

impl TightnessReport {
    pub fn max_toughness(&self) -> Option<Toughness> {
        self.findings.first().map(|f| f.toughness)
    }
}

/// Toughness at which a finding would contradict a lemma: anything for the
/// classical closure, 2 for `n - 1`, `(3t - 1)/2` from `t = 2` on.
pub fn contradiction_bound(t: u32) -> Rational {
    match t {
        0 => integer(0),
        1 => integer(2),
        _ => closure_toughness_bound(t),
    }
}

pub fn run_tightness_search(
    n: RangeInclusive<usize>,
    t: u32,
    budget: u64,
    seed: u64,
    limits: &Limits,
) -> anyhow::Result<TightnessReport> {
    let (n_min, n_max) = (*n.start(), *n.end());
    if n_min < 3 || n_min > n_max {
        anyhow::bail!("tightness search needs 3 <= n_min <= n_max, got {n_min}..={n_max}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = TightnessReport {
        t,
        n_min,
        n_max,
        budget,
        seed,
        examined: 0,
        hits: 0,
        findings: Vec::new(),
        contradiction: false,
    };
    let bound = contradiction_bound(t);
    for _ in 0..budget {
        let g = if !report.findings.is_empty() && rng.gen_bool(0.5) {
            let pick = rng.gen_range(0..report.findings.len());
            let mut g = parse_graph6(&report.findings[pick].instance)?;
            let flips = rng.gen_range(1..=2);
            for _ in 0..flips {
                let u = rng.gen_range(0..g.order());
                let v = rng.gen_range(0..g.order());
                if u != v {
                    if g.has_edge(u, v) {
                        g.remove_edge(u, v);
                    } else {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        } else {
            let n = rng.gen_range(n_min..=n_max);
            let p = rational(rng.gen_range(3..=9), 10);
            random_graph(n, p, rng.gen())?
        };
        report.examined += 1;
        if let Some(finding) = examine(&g, t, bound, limits)? {
            report.hits += 1;
            report.contradiction |= finding.contradiction;
            insert(&mut report.findings, finding);
        }
    }
    Ok(report)
}

fn threshold_met(g: &Graph, x: usize, y: usize, t: u32) -> bool {
    (g.degree(x) + g.degree(y)) as i64 >= g.order() as i64 - i64::from(t)
}

/// The first qualifying pair of `g`, if any, with the toughness of `g`.
fn examine(g: &Graph, t: u32, bound: Rational, limits: &Limits) -> anyhow::Result<Option<Finding>> {
    let pairs: Vec<_> = g.non_edges().filter(|&(x, y)| threshold_met(g, x, y, t)).collect();
    if pairs.is_empty() || find_hamiltonian_cycle_with(g, limits)?.is_hamiltonian() {
        return Ok(None);
    }
    for (x, y) in pairs {
        if find_hamiltonian_cycle_with(&g.with_edge(x, y), limits)?.is_hamiltonian() {
            let toughness = toughness_with(g, limits)?.value;
            return Ok(Some(Finding {
                instance: encode_graph6(g),
                x,
                y,
                degree_sum: g.degree(x) + g.degree(y),
                toughness,
                contradiction: toughness.at_least(bound),
            }));
        }
    }
    Ok(None)
}

fn insert(findings: &mut Vec<Finding>, f: Finding) {
    if findings.iter().any(|g| g.instance == f.instance) {
        return;
    }
    findings.push(f);
    findings.sort_by(|a, b| b.toughness.cmp(&a.toughness).then_with(|| a.instance.cmp(&b.instance)));
    findings.truncate(KEEP);
}

/// The four defining properties of a finding, recomputed from its graph6.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindingCheck {
    pub nonadjacent: bool,
    pub degree_sum_ok: bool,
    pub augmented_hamiltonian: bool,
    pub non_hamiltonian: bool,
    pub toughness_matches: bool,
}

impl FindingCheck {
    pub fn all(&self) -> bool {
        self.nonadjacent && self.degree_sum_ok && self.augmented_hamiltonian && self.non_hamiltonian && self.toughness_matches
    }
}

pub fn recheck_finding(f: &Finding, t: u32, limits: &Limits) -> anyhow::Result<FindingCheck> {
    let g = parse_graph6(&f.instance)?;
    let nonadjacent = f.x != f.y && f.x < g.order() && f.y < g.order() && !g.has_edge(f.x, f.y);
    if !nonadjacent {
        return Ok(FindingCheck {
            nonadjacent,
            degree_sum_ok: false,
            augmented_hamiltonian: false,
            non_hamiltonian: false,
            toughness_matches: false,
        });
    }
    Ok(FindingCheck {
        nonadjacent,
        degree_sum_ok: threshold_met(&g, f.x, f.y, t) && g.degree(f.x) + g.degree(f.y) == f.degree_sum,
        augmented_hamiltonian: find_hamiltonian_cycle_with(&g.with_edge(f.x, f.y), limits)?.is_hamiltonian(),
        non_hamiltonian: !find_hamiltonian_cycle_with(&g, limits)?.is_hamiltonian(),
        toughness_matches: toughness_with(&g, limits)?.value == f.toughness,
    })
}
