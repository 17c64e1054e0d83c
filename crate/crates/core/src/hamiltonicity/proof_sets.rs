//! Partition of a Hamiltonian path's interior by adjacency to its endpoints.
//!
//! For a path `x = v_1, ..., v_n = y` with `xy` not an edge:
//!
//! * `S`  = interior vertices adjacent to neither `x` nor `y`
//! * `S*` = `v_i in S` with `v_{i-1} y` and `v_{i+1} x`
//! * `S0` = `v_i in S` with `v_{i-1} x` and `v_{i+1} y`
//! * `S2` = `v_i in S` with `v_{i-1}` or `v_{i+1}` also in `S`
//! * `D0` = vertices adjacent to both `x` and `y`
//! * `D1` = pairs `v_i, v_{i+1}` outside `D0` with `v_i x` and `v_{i+1} y`
//! * `D2` = pairs `v_i, v_{i+2}` outside `D0` with `v_{i+1} in S`, `v_i x`, `v_{i+2} y`
//! * `Dx`, `Dy` = members of `D0 ∪ D1 ∪ D2` adjacent to `x`, resp. `y`
//!
//! A segment is a pair of positions `a < b` with `v_a in Dy`, `v_b in Dx`
//! and no member of `Dx ∪ Dy` strictly between them.

use serde::{Deserialize, Serialize};

use super::HamPath;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which landmarks delimit segments.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentRule {
    /// From a `Dy` vertex to the next `Dx` vertex.
    #[default]
    DyToDx,
    /// Between consecutive common neighbours of `x` and `y` (`D0`).
    CommonNeighbours,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofSets {
    pub s: VertexSet,
    pub s_star: VertexSet,
    pub s0: VertexSet,
    pub s2: VertexSet,
    pub d0: VertexSet,
    pub d1: VertexSet,
    pub d2: VertexSet,
    pub dx: VertexSet,
    pub dy: VertexSet,
    /// 1-based `(a, b)` path positions.
    pub segments: Vec<(usize, usize)>,
    pub rule: SegmentRule,
}

/// Which counting identities hold for a given `(g, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofSetIdentities {
    /// `d(x) + d(y) = n - |S| + |D0| - 2`
    pub degree_sum: bool,
    /// `|D2| = 2 |S0|`
    pub d2_twice_s0: bool,
    /// `|Dx| = |Dy| = |D0| + |D1|/2 + |D2|/2`
    pub dx_dy_balance: bool,
    /// `#segments = |Dx| - 1` (vacuous when `Dx` is empty)
    pub segment_count: bool,
}

impl ProofSetIdentities {
    pub fn all(&self) -> bool {
        self.degree_sum && self.d2_twice_s0 && self.dx_dy_balance && self.segment_count
    }
}

impl ProofSets {
    pub fn identities(&self, g: &Graph, p: &HamPath) -> ProofSetIdentities {
        let n = g.order() as i64;
        let degree_sum = (g.degree(p.x()) + g.degree(p.y())) as i64;
        let balance = self.d0.len() * 2 + self.d1.len() + self.d2.len();
        ProofSetIdentities {
            degree_sum: degree_sum == n - self.s.len() as i64 + self.d0.len() as i64 - 2,
            d2_twice_s0: self.d2.len() == 2 * self.s0.len(),
            dx_dy_balance: self.dx.len() == self.dy.len()
                && balance.is_multiple_of(2)
                && 2 * self.dx.len() == balance,
            segment_count: self.dx.is_empty() || self.segments.len() + 1 == self.dx.len(),
        }
    }
}

pub fn compute_proof_sets(g: &Graph, p: &HamPath) -> Result<ProofSets> {
    compute_proof_sets_with(g, p, SegmentRule::default())
}

pub fn compute_proof_sets_with(g: &Graph, p: &HamPath, rule: SegmentRule) -> Result<ProofSets> {
    p.validate(g)?;
    let n = g.order();
    if n < 3 {
        return Err(Error::contract("proof sets need n >= 3"));
    }
    let (x, y) = (p.x(), p.y());
    if g.has_edge(x, y) {
        return Err(Error::contract("path endpoints must be nonadjacent"));
    }
    let nx = g.neighbors(x);
    let ny = g.neighbors(y);
    let at = |i: usize| p.v(i);
    let to_x = |i: usize| (1..=n).contains(&i) && nx.contains(at(i));
    let to_y = |i: usize| (1..=n).contains(&i) && ny.contains(at(i));

    let interior = 2..n;
    let in_s = |i: usize| interior.contains(&i) && !to_x(i) && !to_y(i);
    let in_d0 = |i: usize| to_x(i) && to_y(i);

    let mut sets = ProofSets {
        s: VertexSet::EMPTY,
        s_star: VertexSet::EMPTY,
        s0: VertexSet::EMPTY,
        s2: VertexSet::EMPTY,
        d0: VertexSet::EMPTY,
        d1: VertexSet::EMPTY,
        d2: VertexSet::EMPTY,
        dx: VertexSet::EMPTY,
        dy: VertexSet::EMPTY,
        segments: Vec::new(),
        rule,
    };
    for i in 1..=n {
        if in_d0(i) {
            sets.d0.insert(at(i));
        }
        if !in_s(i) {
            continue;
        }
        sets.s.insert(at(i));
        if to_y(i - 1) && to_x(i + 1) {
            sets.s_star.insert(at(i));
        }
        if to_x(i - 1) && to_y(i + 1) {
            sets.s0.insert(at(i));
        }
        if in_s(i - 1) || in_s(i + 1) {
            sets.s2.insert(at(i));
        }
    }
    for i in 1..n {
        if !in_d0(i) && !in_d0(i + 1) && to_x(i) && to_y(i + 1) {
            sets.d1.insert(at(i));
            sets.d1.insert(at(i + 1));
        }
        if i + 2 <= n && !in_d0(i) && !in_d0(i + 2) && in_s(i + 1) && to_x(i) && to_y(i + 2) {
            sets.d2.insert(at(i));
            sets.d2.insert(at(i + 2));
        }
    }
    let d = sets.d0.union(sets.d1).union(sets.d2);
    sets.dx = d.intersection(nx);
    sets.dy = d.intersection(ny);

    sets.segments = match rule {
        SegmentRule::DyToDx => {
            let landmarks: Vec<usize> = (1..=n).filter(|&i| sets.dx.union(sets.dy).contains(at(i))).collect();
            // consecutive landmarks (a, b) with a in Dy and b in Dx
            landmarks
                .windows(2)
                .filter(|w| sets.dy.contains(at(w[0])) && sets.dx.contains(at(w[1])))
                .map(|w| (w[0], w[1]))
                .collect()
        }
        SegmentRule::CommonNeighbours => {
            let marks: Vec<usize> = (1..=n).filter(|&i| sets.d0.contains(at(i))).collect();
            marks.windows(2).map(|w| (w[0], w[1])).collect()
        }
    };
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    fn identity_path(n: usize) -> HamPath {
        HamPath::new((0..n).collect())
    }

    #[test]
    fn bare_p4() {
        let g = named::path(4);
        let p = identity_path(4);
        let sets = compute_proof_sets(&g, &p).unwrap();
        // v_2 is adjacent to x and v_3 to y, so S is empty and D1 = {v_2, v_3}
        assert!(sets.s.is_empty());
        assert!(sets.d0.is_empty());
        assert_eq!(sets.d1.to_vec(), vec![1, 2]);
        assert!(sets.d2.is_empty());
        // d(x) + d(y) = 2 = 4 - 0 + 0 - 2
        assert!(sets.identities(&g, &p).all());
    }

    #[test]
    fn common_neighbour_lands_in_d0() {
        // path 0..5 with v_2 = 1 joined to y = 4
        let mut g = named::path(5);
        g.add_edge(1, 4);
        let p = identity_path(5);
        let sets = compute_proof_sets(&g, &p).unwrap();
        assert_eq!(sets.d0.to_vec(), vec![1]);
        assert!(sets.dx.contains(1) && sets.dy.contains(1));
        assert_eq!(sets.s.to_vec(), vec![2]);
        let ids = sets.identities(&g, &p);
        assert!(ids.degree_sum && ids.dx_dy_balance && ids.segment_count);
    }

    #[test]
    fn segments_between_blocks() {
        // n = 9, x = 0, y = 8; D0 = {v_3, v_7}
        let mut g = named::path(9);
        for v in [2, 6] {
            g.add_edge(0, v);
            g.add_edge(8, v);
        }
        let p = identity_path(9);
        let sets = compute_proof_sets(&g, &p).unwrap();
        assert_eq!(sets.d0.to_vec(), vec![2, 6]);
        // landmarks: v_2 (x side of D1 with v_3? no: v_3 in D0), v_3, v_7, v_8 (y side)
        assert!(sets.identities(&g, &p).all());
        assert_eq!(sets.segments.len() + 1, sets.dx.len());
        let common = compute_proof_sets_with(&g, &p, SegmentRule::CommonNeighbours).unwrap();
        assert_eq!(common.segments, vec![(3, 7)]);
    }

    #[test]
    fn s0_next_to_d0_breaks_the_pair_count() {
        // path 2, 4, 1, 0, 3: S0 = {v_3} but its x-side neighbour v_2 is in D0
        let g = Graph::from_edges(5, [(0, 1), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        let p = HamPath::new(vec![2, 4, 1, 0, 3]);
        let sets = compute_proof_sets(&g, &p).unwrap();
        assert_eq!(sets.s0.to_vec(), vec![1]);
        assert_eq!(sets.d0.to_vec(), vec![4]);
        assert!(sets.d2.is_empty());
        let ids = sets.identities(&g, &p);
        assert!(!ids.d2_twice_s0);
        assert!(ids.degree_sum && ids.dx_dy_balance && ids.segment_count);
    }

    #[test]
    fn adjacent_endpoints_rejected() {
        let g = named::cycle(5);
        assert!(compute_proof_sets(&g, &identity_path(5)).is_err());
    }
}
