//! Degree-sequence conditions and cycle assembly around universal vertices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::closure::is_t_closed;
use crate::error::{Error, Result};
use crate::graph::{DegreeProfile, Graph, VertexSet};
use crate::hamiltonicity::{find_spanning_path_with, HamCycle};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DegreeVerdict {
    Holds,
    /// Smallest 1-based `i` for which the implication fails.
    Violated { i: usize },
}

impl DegreeVerdict {
    pub fn holds(self) -> bool {
        self == DegreeVerdict::Holds
    }
}

/// `d_i <= i < n/2` implies `d_{n-i} >= n - i`.
pub fn chvatal_condition(profile: &DegreeProfile) -> DegreeVerdict {
    predicate_pt(profile, 0)
}

/// For all `i < n/2`: `d_i <= i` implies `d_{n-i+t} >= n - i`.
///
/// When `n - i + t > n` the consequent is taken to hold.
pub fn predicate_pt(profile: &DegreeProfile, t: usize) -> DegreeVerdict {
    let n = profile.len();
    for i in (1..).take_while(|&i| 2 * i < n) {
        if profile.d(i) > i {
            continue;
        }
        let idx = n - i + t;
        if idx <= n && profile.d(idx) < n - i {
            return DegreeVerdict::Violated { i };
        }
    }
    DegreeVerdict::Holds
}

/// Whether `a` dominates `b` position by position.
pub fn degree_majorizes(a: &DegreeProfile, b: &DegreeProfile) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidParameter(format!(
            "profiles have different lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.seq.iter().zip(&b.seq).all(|(x, y)| x >= y))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalCliqueReport {
    /// All vertices of degree `n - 1`.
    pub omega: VertexSet,
    /// `alpha -> {x_j : d_j >= n - alpha}` for every `alpha < n/2`.
    pub u_alpha: BTreeMap<usize, VertexSet>,
}

pub fn universal_cliques(g: &Graph) -> UniversalCliqueReport {
    let n = g.order();
    let omega = g.vertices().iter().filter(|&v| g.degree(v) + 1 == n).collect();
    let u_alpha = (0..)
        .take_while(|&a| 2 * a < n)
        .map(|a| {
            let set = g.vertices().iter().filter(|&v| g.degree(v) + a >= n).collect();
            (a, set)
        })
        .collect();
    UniversalCliqueReport { omega, u_alpha }
}

/// True iff every pair with degree sum at least `n - 3` is adjacent.
pub fn closed_neighborhood_edge_rule(g: &Graph) -> bool {
    is_t_closed(g, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CliqueAssembly {
    Cycle { cycle: HamCycle },
    NotApplicable { reason: String },
}

impl CliqueAssembly {
    pub fn cycle(&self) -> Option<&HamCycle> {
        match self {
            CliqueAssembly::Cycle { cycle } => Some(cycle),
            CliqueAssembly::NotApplicable { .. } => None,
        }
    }
}

pub fn assemble_cycle_via_clique(g: &Graph, omega: VertexSet) -> Result<CliqueAssembly> {
    assemble_cycle_via_clique_with(g, omega, &Limits::default())
}

/// Threads a Hamiltonian path of each component of `G - omega` between
/// consecutive clique vertices: `w_0, P^1, w_1, P^2, ..., P^l`, then the
/// unused clique vertices, closing back at `w_0`.
///
/// Components go in order of smallest vertex; clique vertices are used from
/// the highest degree-profile position down.
pub fn assemble_cycle_via_clique_with(g: &Graph, omega: VertexSet, limits: &Limits) -> Result<CliqueAssembly> {
    let n = g.order();
    if let Some(v) = omega.iter().find(|&v| v >= n || g.degree(v) + 1 != n) {
        return Err(Error::contract(format!("vertex {v} is not universal")));
    }
    let not_applicable = |reason: String| Ok(CliqueAssembly::NotApplicable { reason });
    if n < 3 {
        return not_applicable(format!("n = {n} is too small for a cycle"));
    }
    let components = g.components(omega);
    if omega.len() < components.len() {
        return not_applicable(format!(
            "{} components but only {} clique vertices",
            components.len(),
            omega.len()
        ));
    }
    let profile = g.degree_sequence();
    let mut clique = omega.to_vec();
    clique.sort_by_key(|&v| std::cmp::Reverse(profile.position_of(v)));

    let mut order = Vec::with_capacity(n);
    for (k, comp) in components.iter().enumerate() {
        let Some(path) = component_path(g, *comp, limits)? else {
            return not_applicable(format!("component containing {} has no Hamiltonian path", comp.first().unwrap()));
        };
        order.push(clique[k]);
        order.extend(path);
    }
    order.extend(&clique[components.len()..]);
    let cycle = HamCycle::new(order);
    cycle.validate(g)?;
    Ok(CliqueAssembly::Cycle { cycle })
}

fn component_path(g: &Graph, comp: VertexSet, limits: &Limits) -> Result<Option<Vec<usize>>> {
    if let Some(path) = low_degree_path(g, comp) {
        return Ok(Some(path));
    }
    let (sub, map) = g.induced(comp);
    let found = find_spanning_path_with(&sub, limits)?;
    Ok(found.path.map(|p| p.order.iter().map(|&i| map[i]).collect()))
}

/// Walks a connected component whose induced degrees are all at most 2.
fn low_degree_path(g: &Graph, comp: VertexSet) -> Option<Vec<usize>> {
    let inner = |v: usize| g.neighbors(v).intersection(comp);
    if comp.iter().any(|v| inner(v).len() > 2) {
        return None;
    }
    let start = comp.iter().find(|&v| inner(v).len() <= 1).or(comp.first())?;
    let mut path = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut cur = start;
    while let Some(next) = inner(cur).difference(seen).first() {
        path.push(next);
        seen.insert(next);
        cur = next;
    }
    (path.len() == comp.len()).then_some(path)
}
