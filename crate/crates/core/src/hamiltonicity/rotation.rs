//! Turning a Hamiltonian path `x = v_1, ..., v_n = y` with `xy` missing into
//! a Hamiltonian cycle by rerouting through chords.
//!
//! Each [`RotationKind`] names one chord pattern and the vertex sequence that
//! closes the cycle. In a non-Hamiltonian graph none of the patterns can
//! occur, which is what makes them useful as forbidden-edge rules.

use serde::{Deserialize, Serialize};

use super::{HamCycle, HamPath};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RotationKind {
    /// `v_i x` and `v_{i-1} y`.
    Claim1,
    /// chord `v_i v_j` (`i + 1 < j`) with `v_{i+1} x` and `v_{j-1} y`.
    Claim2a,
    /// chord `v_i v_j` (`i + 1 < j`) with `v_{i+1} y` and `v_{j-1} x`.
    Claim2b,
    /// chord `v_i v_j` (`i < j`) with `v_{i+1} y` and `v_{j+1} x`.
    Claim3a,
    /// chord `v_i v_j` (`i < j`) with `v_{i-1} y` and `v_{j-1} x`.
    Claim3b,
}

/// A matched chord pattern. Indices are 1-based path positions; `j` is
/// absent for [`RotationKind::Claim1`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RotationConfig {
    pub kind: RotationKind,
    pub i: usize,
    pub j: Option<usize>,
}

/// 1-based view of a path with bounds-checked adjacency tests.
struct PathView<'a> {
    g: &'a Graph,
    p: &'a HamPath,
    n: usize,
}

impl PathView<'_> {
    fn adj(&self, a: usize, b: usize) -> bool {
        (1..=self.n).contains(&a) && (1..=self.n).contains(&b) && self.g.has_edge(self.p.v(a), self.p.v(b))
    }

    fn to_x(&self, a: usize) -> bool {
        self.adj(a, 1)
    }

    fn to_y(&self, a: usize) -> bool {
        self.adj(a, self.n)
    }

    fn matches(&self, cfg: &RotationConfig) -> bool {
        let n = self.n;
        let i = cfg.i;
        match (cfg.kind, cfg.j) {
            (RotationKind::Claim1, None) => (2..=n).contains(&i) && self.to_x(i) && self.to_y(i - 1),
            (RotationKind::Claim2a, Some(j)) => {
                i >= 1 && i + 1 < j && j <= n && self.adj(i, j) && self.to_x(i + 1) && self.to_y(j - 1)
            }
            (RotationKind::Claim2b, Some(j)) => {
                i >= 1 && i + 1 < j && j <= n && self.adj(i, j) && self.to_y(i + 1) && self.to_x(j - 1)
            }
            (RotationKind::Claim3a, Some(j)) => {
                i >= 1 && i < j && j < n && self.adj(i, j) && self.to_y(i + 1) && self.to_x(j + 1)
            }
            (RotationKind::Claim3b, Some(j)) => {
                i >= 2 && i < j && j <= n && self.adj(i, j) && self.to_y(i - 1) && self.to_x(j - 1)
            }
            _ => false,
        }
    }

    /// Path positions of the closing cycle, in cycle order.
    fn positions(&self, cfg: &RotationConfig) -> Vec<usize> {
        let n = self.n;
        let i = cfg.i;
        let mut seq = Vec::with_capacity(n);
        match cfg.kind {
            RotationKind::Claim1 => {
                seq.extend(1..i);
                seq.extend((i..=n).rev());
            }
            RotationKind::Claim2a => {
                let j = cfg.j.expect("pair pattern");
                seq.extend(1..=i);
                seq.extend(j..=n);
                seq.extend((i + 1..j).rev());
            }
            RotationKind::Claim2b => {
                let j = cfg.j.expect("pair pattern");
                seq.extend(1..=i);
                seq.extend(j..=n);
                seq.extend(i + 1..j);
            }
            RotationKind::Claim3a => {
                let j = cfg.j.expect("pair pattern");
                seq.extend(1..=i);
                seq.extend((i + 1..=j).rev());
                seq.extend((j + 1..=n).rev());
            }
            RotationKind::Claim3b => {
                let j = cfg.j.expect("pair pattern");
                seq.extend(1..i);
                seq.extend((j..=n).rev());
                seq.extend(i..j);
            }
        }
        seq
    }
}

fn view<'a>(g: &'a Graph, p: &'a HamPath) -> Result<PathView<'a>> {
    p.validate(g)?;
    if g.order() < 3 {
        return Err(Error::contract("rotations need n >= 3"));
    }
    if g.has_edge(p.x(), p.y()) {
        return Err(Error::contract("path endpoints must be nonadjacent"));
    }
    Ok(PathView { g, p, n: g.order() })
}

/// Every chord pattern present for the path `p`, sorted by kind then indices.
pub fn scan_rotations(g: &Graph, p: &HamPath) -> Result<Vec<RotationConfig>> {
    let view = view(g, p)?;
    let n = view.n;
    let mut found = Vec::new();
    for i in 2..=n {
        let cfg = RotationConfig { kind: RotationKind::Claim1, i, j: None };
        if view.matches(&cfg) {
            found.push(cfg);
        }
    }
    let pair_kinds = [RotationKind::Claim2a, RotationKind::Claim2b, RotationKind::Claim3a, RotationKind::Claim3b];
    for kind in pair_kinds {
        for i in 1..=n {
            for j in i + 1..=n {
                let cfg = RotationConfig { kind, i, j: Some(j) };
                if view.matches(&cfg) {
                    found.push(cfg);
                }
            }
        }
    }
    Ok(found)
}

/// Builds the Hamiltonian cycle prescribed by `cfg`.
pub fn apply_rotation(g: &Graph, p: &HamPath, cfg: &RotationConfig) -> Result<HamCycle> {
    let view = view(g, p)?;
    if !view.matches(cfg) {
        return Err(Error::contract(format!("{cfg:?} does not match the graph and path")));
    }
    let cycle = HamCycle::new(view.positions(cfg).into_iter().map(|k| p.v(k)).collect());
    cycle.validate(g)?;
    Ok(cycle)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum GapViolation {
    /// No position strictly between `a` and `b` avoids both endpoints.
    NoGap,
    /// The gap `s` is unique but `v_{s-1} y` or `v_{s+1} x` is missing.
    UniqueGapWithoutFlanks { s: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SegmentGap {
    /// `s` is the smallest qualifying position; `all` lists every one.
    Found { s: usize, all: Vec<usize> },
    /// The gap statement failed. On a non-Hamiltonian graph this is a
    /// counterexample and must be surfaced.
    Counterexample(GapViolation),
}

/// For `a < b` with `v_a y` and `v_b x` edges, finds positions `a < s < b`
/// whose vertex is adjacent to neither endpoint. When exactly one exists,
/// also checks that `v_{s-1} y` and `v_{s+1} x` are edges.
///
/// The statement is only guaranteed for non-Hamiltonian `g`; the caller is
/// responsible for that precondition.
pub fn find_segment_gap(g: &Graph, p: &HamPath, a: usize, b: usize) -> Result<SegmentGap> {
    let view = view(g, p)?;
    if !(1 <= a && a < b && b <= view.n) {
        return Err(Error::contract(format!("need 1 <= a < b <= n, got a = {a}, b = {b}")));
    }
    if !view.to_y(a) || !view.to_x(b) {
        return Err(Error::contract(format!("need v_{a} y and v_{b} x to be edges")));
    }
    let all: Vec<usize> = (a + 1..b).filter(|&s| !view.to_x(s) && !view.to_y(s)).collect();
    Ok(match all.as_slice() {
        [] => SegmentGap::Counterexample(GapViolation::NoGap),
        &[s] if !(view.to_y(s - 1) && view.to_x(s + 1)) => {
            SegmentGap::Counterexample(GapViolation::UniqueGapWithoutFlanks { s })
        }
        _ => SegmentGap::Found { s: all[0], all },
    })
}

/// All `(a, b)` pairs satisfying the gap precondition.
pub fn gap_pairs(g: &Graph, p: &HamPath) -> Vec<(usize, usize)> {
    let n = g.order();
    let (x, y) = (p.x(), p.y());
    let mut out = Vec::new();
    for a in 1..=n {
        if !g.has_edge(p.v(a), y) {
            continue;
        }
        for b in a + 1..=n {
            if g.has_edge(p.v(b), x) {
                out.push((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::hamiltonicity::find_hamiltonian_cycle;

    fn identity_path(n: usize) -> HamPath {
        HamPath::new((0..n).collect())
    }

    #[test]
    fn claim1_on_chorded_p4() {
        // x = 0, v_2 = 1, v_3 = 2, y = 3; chords x v_3 and y v_2
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 2), (3, 1)]).unwrap();
        let p = identity_path(4);
        let found = scan_rotations(&g, &p).unwrap();
        let cfg = RotationConfig { kind: RotationKind::Claim1, i: 3, j: None };
        assert!(found.contains(&cfg));
        let cycle = apply_rotation(&g, &p, &cfg).unwrap();
        assert_eq!(cycle.order, vec![0, 1, 3, 2]);
    }

    #[test]
    fn bare_path_has_no_rotations() {
        for n in 3..9 {
            assert!(scan_rotations(&named::path(n), &identity_path(n)).unwrap().is_empty());
        }
    }

    #[test]
    fn every_kind_constructs_a_cycle() {
        let n = 8;
        let p = identity_path(n);
        // (kind, i, j) with the three edges each pattern needs, 1-based
        let cases = [
            (RotationKind::Claim2a, 3, 6, [(3, 6), (4, 1), (5, 8)]),
            (RotationKind::Claim2b, 2, 6, [(2, 6), (3, 8), (5, 1)]),
            (RotationKind::Claim3a, 2, 5, [(2, 5), (3, 8), (6, 1)]),
            (RotationKind::Claim3b, 3, 6, [(3, 6), (2, 8), (5, 1)]),
        ];
        for (kind, i, j, chords) in cases {
            let mut g = named::path(n);
            for (a, b) in chords {
                g.add_edge(a - 1, b - 1);
            }
            let cfg = RotationConfig { kind, i, j: Some(j) };
            assert!(scan_rotations(&g, &p).unwrap().contains(&cfg), "{kind:?}");
            apply_rotation(&g, &p, &cfg).unwrap().validate(&g).unwrap();
        }
    }

    #[test]
    fn rotation_reassembles_a_cycle() {
        // C_n with the edge (x, y) dropped, plus one chord pattern
        for n in 5..10 {
            let mut g = named::path(n);
            g.add_edge(0, 2);
            g.add_edge(1, n - 1);
            let p = identity_path(n);
            let rots = scan_rotations(&g, &p).unwrap();
            assert!(!rots.is_empty());
            for cfg in &rots {
                apply_rotation(&g, &p, cfg).unwrap().validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn mismatched_config_is_rejected() {
        let g = named::path(5);
        let cfg = RotationConfig { kind: RotationKind::Claim1, i: 3, j: None };
        assert!(matches!(apply_rotation(&g, &identity_path(5), &cfg), Err(Error::Contract(_))));
        let bad_pair = RotationConfig { kind: RotationKind::Claim2a, i: 1, j: None };
        assert!(apply_rotation(&g, &identity_path(5), &bad_pair).is_err());
        let c5 = named::cycle(5);
        assert!(scan_rotations(&c5, &identity_path(5)).is_err());
    }

    #[test]
    fn segment_gap_in_k23() {
        // path 1..5 plus v_2 y and v_4 x: this is K_{2,3}
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (3, 0)]).unwrap();
        assert!(!find_hamiltonian_cycle(&g).unwrap().is_hamiltonian());
        let p = identity_path(5);
        assert_eq!(gap_pairs(&g, &p), vec![(2, 4)]);
        assert_eq!(find_segment_gap(&g, &p, 2, 4).unwrap(), SegmentGap::Found { s: 3, all: vec![3] });
        assert!(find_segment_gap(&g, &p, 1, 4).is_err());
    }

    #[test]
    fn gap_failure_on_hamiltonian_graph_is_reported() {
        // v_2 y and v_3 x with nothing between them; the graph is Hamiltonian
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (2, 0)]).unwrap();
        assert!(find_hamiltonian_cycle(&g).unwrap().is_hamiltonian());
        let r = find_segment_gap(&g, &identity_path(5), 2, 3).unwrap();
        assert_eq!(r, SegmentGap::Counterexample(GapViolation::NoGap));
    }
}
