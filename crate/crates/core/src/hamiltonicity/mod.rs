//! Hamiltonian cycles and paths: an exact solver, the path-rotation
//! constructions, and the path decomposition sets used in closure arguments.
//!
//! Positions along a Hamiltonian path are 1-based (`v_1 = x`, `v_n = y`)
//! wherever they appear in [`RotationConfig`], [`SegmentGap`] or
//! [`ProofSets`] segments; vertex ids stay 0-based.

mod proof_sets;
mod rotation;
mod solver;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use proof_sets::{compute_proof_sets, compute_proof_sets_with, ProofSetIdentities, ProofSets, SegmentRule};
pub use rotation::{
    apply_rotation, find_segment_gap, gap_pairs, scan_rotations, GapViolation, RotationConfig, RotationKind, SegmentGap,
};
pub use solver::{
    find_hamiltonian_cycle, find_hamiltonian_cycle_with, find_hamiltonian_path, find_hamiltonian_path_with,
    find_spanning_path, find_spanning_path_with, is_hamiltonian, PathSearch,
};

/// A Hamiltonian path `v_1, ..., v_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HamPath {
    pub order: Vec<usize>,
}

impl HamPath {
    pub fn new(order: Vec<usize>) -> Self {
        HamPath { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `v_1`.
    pub fn x(&self) -> usize {
        self.order[0]
    }

    /// `v_n`.
    pub fn y(&self) -> usize {
        self.order[self.order.len() - 1]
    }

    /// Vertex at 1-based position `i`.
    pub fn v(&self, i: usize) -> usize {
        self.order[i - 1]
    }

    /// Checks that the order is a permutation of `0..n` along edges of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        validate_order(g, &self.order, false)
    }
}

/// A Hamiltonian cycle, listed from an arbitrary starting vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HamCycle {
    pub order: Vec<usize>,
}

impl HamCycle {
    pub fn new(order: Vec<usize>) -> Self {
        HamCycle { order }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.order.len() < 3 {
            return Err(Error::contract("a cycle needs at least three vertices"));
        }
        validate_order(g, &self.order, true)
    }
}

fn validate_order(g: &Graph, order: &[usize], closed: bool) -> Result<()> {
    if order.len() != g.order() {
        return Err(Error::contract(format!(
            "order has {} vertices, graph has {}",
            order.len(),
            g.order()
        )));
    }
    let mut seen = VertexSet::EMPTY;
    for &v in order {
        if v >= g.order() || seen.contains(v) {
            return Err(Error::contract(format!("vertex {v} out of range or repeated")));
        }
        seen.insert(v);
    }
    for w in order.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::contract(format!("missing edge ({}, {})", w[0], w[1])));
        }
    }
    if closed {
        let (first, last) = (order[0], order[order.len() - 1]);
        if !g.has_edge(last, first) {
            return Err(Error::contract(format!("missing closing edge ({last}, {first})")));
        }
    }
    Ok(())
}

/// Outcome of an exhaustive Hamiltonian cycle search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HamiltonicityCertificate {
    Cycle { cycle: HamCycle, nodes: u64 },
    /// The search tree was exhausted without finding a cycle.
    NonHamiltonian { nodes: u64 },
}

impl HamiltonicityCertificate {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, HamiltonicityCertificate::Cycle { .. })
    }

    pub fn cycle(&self) -> Option<&HamCycle> {
        match self {
            HamiltonicityCertificate::Cycle { cycle, .. } => Some(cycle),
            HamiltonicityCertificate::NonHamiltonian { .. } => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            HamiltonicityCertificate::Cycle { nodes, .. } | HamiltonicityCertificate::NonHamiltonian { nodes } => {
                *nodes
            }
        }
    }
}
