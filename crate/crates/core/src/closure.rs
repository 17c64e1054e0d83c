//! Bondy–Chvátal closure, the t-closure, and checkers for the edge-addition
//! lemmas built on them.
//!
//! A lemma check computes every hypothesis clause and the conclusion
//! `Hamiltonian(G) <=> Hamiltonian(G')` independently, then buckets the
//! result: any failed clause gives `NotApplicable`, all clauses true and a
//! false conclusion gives `Counterexample`, otherwise `Pass`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hamiltonicity::{find_hamiltonian_cycle_with, HamCycle, HamiltonicityCertificate};
use crate::limits::Limits;
use crate::rational::{closure_toughness_bound, integer, rational, Rational};
use crate::toughness::{toughness_with, Toughness, ToughnessReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub u: usize,
    pub v: usize,
    /// `d(u) + d(v)` just before the edge was added.
    pub degree_sum: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureResult {
    pub closed: Graph,
    pub trace: Vec<TraceEntry>,
}

/// Closure with threshold `n`.
pub fn bc_closure(g: &Graph) -> ClosureResult {
    t_closure(g, 0)
}

/// Closure with threshold `n - t`: keep joining the lexicographically
/// smallest nonadjacent pair whose degree sum reaches the threshold.
pub fn t_closure(g: &Graph, t: u32) -> ClosureResult {
    let threshold = threshold(g, t);
    let mut closed = g.clone();
    let mut trace = Vec::new();
    loop {
        let Some((u, v, sum)) = eligible_pairs(&closed, threshold).next() else {
            break;
        };
        closed.add_edge(u, v);
        trace.push(TraceEntry { u, v, degree_sum: sum });
    }
    ClosureResult { closed, trace }
}

fn threshold(g: &Graph, t: u32) -> i64 {
    g.order() as i64 - i64::from(t)
}

fn eligible_pairs(g: &Graph, threshold: i64) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    g.non_edges().filter_map(move |(u, v)| {
        let sum = g.degree(u) + g.degree(v);
        (sum as i64 >= threshold).then_some((u, v, sum))
    })
}

/// Whether `g` has no nonadjacent pair meeting the `n - t` threshold.
pub fn is_t_closed(g: &Graph, t: u32) -> bool {
    eligible_pairs(g, threshold(g, t)).next().is_none()
}

/// Closure built by picking a uniformly random eligible pair at each step.
pub fn t_closure_random_order(g: &Graph, t: u32, seed: u64) -> ClosureResult {
    let threshold = threshold(g, t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut closed = g.clone();
    let mut trace = Vec::new();
    loop {
        let pairs: Vec<_> = eligible_pairs(&closed, threshold).collect();
        let Some(&(u, v, sum)) = pairs.choose(&mut rng) else {
            break;
        };
        closed.add_edge(u, v);
        trace.push(TraceEntry { u, v, degree_sum: sum });
    }
    ClosureResult { closed, trace }
}

/// True iff every seeded random order reaches the canonical closure.
pub fn closure_order_invariance(g: &Graph, t: u32, seeds: &[u64]) -> bool {
    let canonical = t_closure(g, t).closed;
    seeds.iter().all(|&s| t_closure_random_order(g, t, s).closed == canonical)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    NotApplicable,
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
}

/// Which edge-addition lemma to check for a single pair `x, y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "lemma", rename_all = "snake_case")]
pub enum SingleEdgeVariant {
    /// 2-tough and `d(x) + d(y) >= n - 1`.
    L7,
    /// `(2 + eps)`-tough with `eps > 1/4` and `d(x) + d(y) >= n - 2`.
    L8 {
        #[serde(with = "crate::rational::as_string")]
        eps: Rational,
        /// Also accept `eps = 1/4`.
        allow_quarter: bool,
    },
    /// `(3t - 1)/2`-tough with `d(x) + d(y) = n - t`. Without `strict`, larger
    /// sums are routed to the weakest variant that covers them.
    L9 { t: u32, strict: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma: String,
    pub outcome: Outcome,
    pub hypotheses: Vec<Clause>,
    /// `Hamiltonian(g) <=> Hamiltonian(g')`.
    pub conclusion_holds: bool,
    pub g_hamiltonian: bool,
    pub augmented_hamiltonian: bool,
    /// Edges in `g'` but not `g`.
    pub added_edges: Vec<(usize, usize)>,
    pub toughness: Toughness,
    /// Minimum-ratio cut-set of `g`, when it has one.
    pub cutset: Option<VertexSet>,
    pub cycle: Option<HamCycle>,
    pub augmented_cycle: Option<HamCycle>,
    pub solver_nodes: u64,
    /// For non-strict L9: the variant actually applied.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dispatched: Option<String>,
}

impl LemmaVerdict {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.holds)
    }

    pub fn failed_clauses(&self) -> impl Iterator<Item = &str> {
        self.hypotheses.iter().filter(|c| !c.holds).map(|c| c.name.as_str())
    }
}

/// Shared state for checking several lemmas on one graph: toughness is
/// computed at most once.
pub struct LemmaContext<'a> {
    g: &'a Graph,
    limits: &'a Limits,
    toughness: Option<ToughnessReport>,
    hamiltonian: Option<HamiltonicityCertificate>,
}

impl<'a> LemmaContext<'a> {
    pub fn new(g: &'a Graph, limits: &'a Limits) -> Self {
        LemmaContext { g, limits, toughness: None, hamiltonian: None }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn toughness(&mut self) -> Result<&ToughnessReport> {
        if self.toughness.is_none() {
            self.toughness = Some(toughness_with(self.g, self.limits)?);
        }
        Ok(self.toughness.as_ref().expect("just set"))
    }

    pub fn hamiltonicity(&mut self) -> Result<&HamiltonicityCertificate> {
        if self.hamiltonian.is_none() {
            self.hamiltonian = Some(find_hamiltonian_cycle_with(self.g, self.limits)?);
        }
        Ok(self.hamiltonian.as_ref().expect("just set"))
    }

    pub fn single_edge(&mut self, x: usize, y: usize, variant: SingleEdgeVariant) -> Result<LemmaVerdict> {
        check_pair(self.g, x, y)?;
        let n = self.g.order() as i64;
        let sum = (self.g.degree(x) + self.g.degree(y)) as i64;
        let tough = self.toughness()?.value;
        let mut dispatched = None;
        let (lemma, hypotheses) = match variant {
            SingleEdgeVariant::L7 => (
                "l7",
                vec![clause("toughness >= 2", tough.at_least(integer(2))), clause("d(x)+d(y) >= n-1", sum >= n - 1)],
            ),
            SingleEdgeVariant::L8 { eps, allow_quarter } => {
                let quarter = rational(1, 4);
                let eps_ok = eps > quarter || (allow_quarter && eps == quarter);
                (
                    "l8",
                    vec![
                        clause("eps > 1/4", eps_ok),
                        clause("toughness >= 2+eps", tough.at_least(integer(2) + eps)),
                        clause("d(x)+d(y) >= n-2", sum >= n - 2),
                    ],
                )
            }
            SingleEdgeVariant::L9 { t, strict } => {
                let t_ok = t >= 2;
                let mut clauses = vec![clause("t >= 2", t_ok)];
                if strict || sum < n - i64::from(t) {
                    clauses.push(clause(
                        "toughness >= (3t-1)/2",
                        tough.at_least(closure_toughness_bound(t)),
                    ));
                    clauses.push(if strict {
                        clause("d(x)+d(y) = n-t", sum == n - i64::from(t))
                    } else {
                        clause("d(x)+d(y) >= n-t", false)
                    });
                } else {
                    // the sum is n - t' for some t' <= t; the weakest lemma
                    // covering it needs no more toughness than (3t-1)/2
                    let t_actual = n - sum;
                    let (name, need) = match t_actual {
                        i64::MIN..=0 => ("closure", None),
                        1 => ("l7", Some(integer(2))),
                        k => ("l9", Some(closure_toughness_bound(k as u32))),
                    };
                    dispatched = Some(if name == "l9" { format!("l9(t={t_actual})") } else { name.to_string() });
                    clauses.push(clause(
                        "toughness >= (3t-1)/2",
                        tough.at_least(closure_toughness_bound(t)),
                    ));
                    if let Some(need) = need {
                        clauses.push(clause("toughness meets dispatched variant", tough.at_least(need)));
                    }
                    clauses.push(clause("d(x)+d(y) >= n-t", true));
                }
                ("l9", clauses)
            }
        };
        let augmented = self.g.with_edge(x, y);
        let mut verdict = self.compare(lemma, hypotheses, &augmented)?;
        verdict.dispatched = dispatched;
        Ok(verdict)
    }

    pub fn t_closure_lemma(&mut self, t: u32) -> Result<LemmaVerdict> {
        check_order(self.g)?;
        let tough = self.toughness()?.value;
        let hypotheses = vec![
            clause("t >= 2", t >= 2),
            clause("toughness >= (3t-1)/2", tough.at_least(closure_toughness_bound(t))),
        ];
        let closed = t_closure(self.g, t).closed;
        self.compare("l11", hypotheses, &closed)
    }

    /// The classical closure equivalence; it has no hypotheses.
    pub fn bc_closure_lemma(&mut self) -> Result<LemmaVerdict> {
        check_order(self.g)?;
        let closed = bc_closure(self.g).closed;
        self.compare("bc", Vec::new(), &closed)
    }

    /// `Hamiltonian(g) <=> Hamiltonian(t_closure(g, t))` under the toughness
    /// gate that fits `t`: none at 0, 2-tough at 1, `(3t-1)/2`-tough from 2.
    pub fn closure_equivalence(&mut self, t: u32) -> Result<LemmaVerdict> {
        match t {
            0 => self.bc_closure_lemma(),
            1 => {
                check_order(self.g)?;
                let tough = self.toughness()?.value;
                let hypotheses = vec![clause("toughness >= 2", tough.at_least(integer(2)))];
                let closed = t_closure(self.g, 1).closed;
                self.compare("closure_t1", hypotheses, &closed)
            }
            _ => self.t_closure_lemma(t),
        }
    }

    pub fn corollary(&mut self, x: usize, y: usize, t_prime: Rational) -> Result<LemmaVerdict> {
        check_pair(self.g, x, y)?;
        let n = integer(self.g.order() as i64);
        let sum = integer((self.g.degree(x) + self.g.degree(y)) as i64);
        let tough = self.toughness()?.value;
        let slack = (integer(2) * t_prime + integer(1)) / integer(3);
        let hypotheses = vec![
            clause("t' >= 5/2", t_prime >= rational(5, 2)),
            clause("toughness >= t'", tough.at_least(t_prime)),
            clause("d(x)+d(y) >= n-(2t'+1)/3", sum >= n - slack),
        ];
        let augmented = self.g.with_edge(x, y);
        self.compare("corollary", hypotheses, &augmented)
    }

    fn compare(&mut self, lemma: &str, hypotheses: Vec<Clause>, augmented: &Graph) -> Result<LemmaVerdict> {
        let added_edges: Vec<_> = augmented.edges().filter(|&(u, v)| !self.g.has_edge(u, v)).collect();
        let mut nodes = 0;
        let aug_cert = if added_edges.is_empty() {
            self.hamiltonicity()?.clone()
        } else {
            find_hamiltonian_cycle_with(augmented, self.limits)?
        };
        nodes += aug_cert.nodes();
        let cert = self.hamiltonicity()?.clone();
        if !added_edges.is_empty() {
            nodes += cert.nodes();
        }
        let conclusion_holds = cert.is_hamiltonian() == aug_cert.is_hamiltonian();
        let report = self.toughness()?.clone();
        let hypotheses_hold = hypotheses.iter().all(|c| c.holds);
        let outcome = match (hypotheses_hold, conclusion_holds) {
            (false, _) => Outcome::NotApplicable,
            (true, true) => Outcome::Pass,
            (true, false) => Outcome::Counterexample,
        };
        Ok(LemmaVerdict {
            lemma: lemma.to_string(),
            outcome,
            hypotheses,
            conclusion_holds,
            g_hamiltonian: cert.is_hamiltonian(),
            augmented_hamiltonian: aug_cert.is_hamiltonian(),
            added_edges,
            toughness: report.value,
            cutset: report.witness,
            cycle: cert.cycle().cloned(),
            augmented_cycle: aug_cert.cycle().cloned(),
            solver_nodes: nodes,
            dispatched: None,
        })
    }
}

fn clause(name: &str, holds: bool) -> Clause {
    Clause { name: name.to_string(), holds }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() < 3 {
        return Err(Error::contract(format!("lemma checks need n >= 3, got {}", g.order())));
    }
    Ok(())
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<()> {
    check_order(g)?;
    if x >= g.order() || y >= g.order() || x == y {
        return Err(Error::contract(format!("({x}, {y}) is not a pair of distinct vertices")));
    }
    if g.has_edge(x, y) {
        return Err(Error::contract(format!("x = {x} and y = {y} are adjacent")));
    }
    Ok(())
}

pub fn verify_single_edge_lemma(g: &Graph, x: usize, y: usize, variant: SingleEdgeVariant) -> Result<LemmaVerdict> {
    LemmaContext::new(g, &Limits::default()).single_edge(x, y, variant)
}

pub fn verify_t_closure_lemma(g: &Graph, t: u32) -> Result<LemmaVerdict> {
    LemmaContext::new(g, &Limits::default()).t_closure_lemma(t)
}

pub fn verify_corollary(g: &Graph, x: usize, y: usize, t_prime: Rational) -> Result<LemmaVerdict> {
    LemmaContext::new(g, &Limits::default()).corollary(x, y, t_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn classic_examples() {
        let c5 = named::cycle(5);
        assert_eq!(bc_closure(&c5).closed, c5);
        let mut k5e = named::complete(5);
        k5e.remove_edge(1, 3);
        let r = bc_closure(&k5e);
        assert_eq!(r.closed, named::complete(5));
        assert_eq!(r.trace, vec![TraceEntry { u: 1, v: 3, degree_sum: 6 }]);
        assert!(bc_closure(&named::complete(4)).trace.is_empty());
    }

    #[test]
    fn t_closure_examples() {
        let r = t_closure(&named::cycle(5), 2);
        assert_eq!(r.closed, named::complete(5));
        assert_eq!(r.trace[0], TraceEntry { u: 0, v: 2, degree_sum: 4 });
        assert!(r.trace.iter().all(|e| e.degree_sum >= 3));
        assert_eq!(t_closure(&named::cycle(6), 1).closed, named::cycle(6));
        assert!(is_t_closed(&t_closure(&named::petersen(), 3).closed, 3));
    }

    #[test]
    fn random_orders_agree() {
        assert!(closure_order_invariance(&named::cycle(5), 2, &(0..20).collect::<Vec<_>>()));
        assert!(closure_order_invariance(&named::complete(6), 1, &[1, 2, 3]));
        let r = t_closure_random_order(&named::cycle(5), 2, 7);
        assert_eq!(r.closed, named::complete(5));
    }

    #[test]
    fn hamiltonian_graph_passes_trivially() {
        let g = named::cycle(6);
        let v = verify_single_edge_lemma(&g, 0, 3, SingleEdgeVariant::L7).unwrap();
        assert!(v.conclusion_holds);
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert_eq!(v.failed_clauses().collect::<Vec<_>>(), vec!["toughness >= 2", "d(x)+d(y) >= n-1"]);
    }

    #[test]
    fn failed_clause_is_named() {
        // K_{2,3}: two leaves of the 3-side have sum 2+2 = n-1
        let v = verify_single_edge_lemma(&named::complete_bipartite(2, 3), 2, 3, SingleEdgeVariant::L7).unwrap();
        assert_eq!(v.failed_clauses().collect::<Vec<_>>(), vec!["toughness >= 2"]);
        // the conclusion fails, which is fine: the toughness gate is closed
        assert!(!v.conclusion_holds);
        assert_eq!(v.outcome, Outcome::NotApplicable);
        let v = verify_single_edge_lemma(&named::path(5), 0, 4, SingleEdgeVariant::L7).unwrap();
        assert_eq!(v.failed_clauses().collect::<Vec<_>>(), vec!["toughness >= 2", "d(x)+d(y) >= n-1"]);
        let v = verify_single_edge_lemma(&named::complete_bipartite(3, 3), 0, 1, SingleEdgeVariant::L7).unwrap();
        assert_eq!(v.failed_clauses().collect::<Vec<_>>(), vec!["toughness >= 2"]);
    }

    #[test]
    fn epsilon_boundary() {
        let g = named::complete_bipartite(3, 3);
        let strict = SingleEdgeVariant::L8 { eps: rational(1, 4), allow_quarter: false };
        let loose = SingleEdgeVariant::L8 { eps: rational(1, 4), allow_quarter: true };
        let a = verify_single_edge_lemma(&g, 0, 1, strict).unwrap();
        let b = verify_single_edge_lemma(&g, 0, 1, loose).unwrap();
        assert!(!a.hypotheses[0].holds);
        assert!(b.hypotheses[0].holds);
    }

    #[test]
    fn l9_dispatch() {
        // octahedron minus nothing: K_{2,2,2}, x=0,y=1 non-adjacent, sum 8 >= 6-2
        let mut g = named::complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v);
        }
        let v = verify_single_edge_lemma(&g, 0, 1, SingleEdgeVariant::L9 { t: 2, strict: false }).unwrap();
        assert_eq!(v.dispatched.as_deref(), Some("closure"));
        let v = verify_single_edge_lemma(&g, 0, 1, SingleEdgeVariant::L9 { t: 2, strict: true }).unwrap();
        assert!(v.failed_clauses().any(|c| c == "d(x)+d(y) = n-t"));
        assert!(v.conclusion_holds);
    }

    #[test]
    fn t_closure_lemma_gate() {
        let v = verify_t_closure_lemma(&named::cycle(6), 2).unwrap();
        assert_eq!(v.outcome, Outcome::NotApplicable);
        assert!(v.cutset.is_some());
        let v = verify_t_closure_lemma(&named::complete(6), 2).unwrap();
        assert_eq!(v.outcome, Outcome::Pass);
    }

    #[test]
    fn corollary_thresholds() {
        let g = named::complete_bipartite(3, 3);
        let v = verify_corollary(&g, 0, 1, rational(5, 2)).unwrap();
        // (2 * 5/2 + 1) / 3 = 2, and 3 + 3 >= 6 - 2
        assert!(v.hypotheses[2].holds);
        assert!(!v.hypotheses[1].holds);
        assert!(verify_corollary(&g, 0, 3, rational(5, 2)).is_err());
    }
}
