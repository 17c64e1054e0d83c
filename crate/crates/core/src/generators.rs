//! Graph generators: named families, seeded Erdős–Rényi samples, rejection
//! sampling of tough graphs, and exhaustive labeled enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::rational::Rational;
use crate::toughness::{is_t_tough_with, Toughness};

pub mod named {
    use crate::graph::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Hub 0 joined to a rim cycle on `1..=rim`.
    pub fn wheel(rim: usize) -> Graph {
        let mut g = Graph::empty(rim + 1);
        for v in 1..=rim {
            g.add_edge(0, v);
            g.add_edge(v, if v == rim { 1 } else { v + 1 });
        }
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    /// Disjoint union, relabelling `b` after `a`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.order();
        let mut g = Graph::empty(shift + b.order());
        for (u, v) in a.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in b.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }
}

/// Erdős–Rényi `G(n, p)`: each pair `(u, v)`, in lexicographic order, is an
/// edge with probability exactly `p` (one uniform draw in `0..den` per pair).
pub fn random_graph(n: usize, p: Rational, seed: u64) -> Result<Graph> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::InvalidParameter(format!("order {n} out of range 1..=64")));
    }
    if *p.numer() < 0 || p > Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_graph_from(n, p, &mut rng))
}

pub(crate) fn random_graph_from(n: usize, p: Rational, rng: &mut impl Rng) -> Graph {
    let (num, den) = (*p.numer(), *p.denom());
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Rejection sampler output: the graph, how many trials it took, and the
/// toughness it was accepted with.
#[derive(Clone, Debug)]
pub struct ToughSample {
    pub graph: Graph,
    pub trials: u64,
    pub toughness: Toughness,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    #[error("no non-complete {t}-tough graph on {n} vertices after {trials} trials")]
    Exhausted { n: usize, t: Rational, trials: u64 },
    #[error(transparent)]
    Core(#[from] Error),
}

/// Edge densities tried in turn: 10/20, 11/20, ..., 19/20.
const DENSITY_STEPS: i64 = 10;

/// Samples a non-complete graph with toughness at least `t` by rejection
/// from `G(n, p)`, with `p` sweeping upward from 1/2 and wrapping around.
///
/// Complete graphs are rejected: their toughness is infinite, so they
/// would satisfy every hypothesis vacuously.
pub fn sample_t_tough_graph(
    n: usize,
    t: Rational,
    max_trials: u64,
    seed: u64,
) -> std::result::Result<ToughSample, SampleError> {
    sample_t_tough_graph_with(n, t, max_trials, seed, &Limits::default())
}

pub fn sample_t_tough_graph_with(
    n: usize,
    t: Rational,
    max_trials: u64,
    seed: u64,
    limits: &Limits,
) -> std::result::Result<ToughSample, SampleError> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("tough sampling needs n >= 3, got {n}")).into());
    }
    if *t.numer() < 0 {
        return Err(Error::InvalidParameter(format!("toughness target {t} is negative")).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..max_trials {
        let step = (trial % DENSITY_STEPS as u64) as i64;
        let p = Rational::new(DENSITY_STEPS + step, 2 * DENSITY_STEPS);
        let g = random_graph_from(n, p, &mut rng);
        if g.is_complete() {
            continue;
        }
        let verdict = is_t_tough_with(&g, t, limits)?;
        if verdict.holds {
            return Ok(ToughSample { graph: g, trials: trial + 1, toughness: verdict.report.value });
        }
    }
    Err(SampleError::Exhausted { n, t, trials: max_trials })
}

/// Number of labeled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge set is given by `mask`: bit `k` selects the
/// `k`-th pair in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`.
pub fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..labeled_graph_count(n)).map(move |mask| graph_from_edge_mask(n, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, rational};
    use crate::toughness::is_t_tough;

    #[test]
    fn extreme_densities() {
        assert_eq!(random_graph(5, integer(0), 7).unwrap().edge_count(), 0);
        assert!(random_graph(5, integer(1), 7).unwrap().is_complete());
        assert!(random_graph(5, rational(3, 2), 7).is_err());
        assert!(random_graph(0, integer(1), 7).is_err());
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = random_graph(20, rational(1, 3), 99).unwrap();
        let b = random_graph(20, rational(1, 3), 99).unwrap();
        assert_eq!(a, b);
        let c = random_graph(20, rational(1, 3), 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn samples_one_tough_graph_on_twelve() {
        let s = sample_t_tough_graph(12, integer(1), 1000, 5).unwrap();
        assert!(!s.graph.is_complete());
        assert!(is_t_tough(&s.graph, integer(1)).unwrap().holds);
    }

    #[test]
    fn infeasible_targets_exhaust() {
        // non-complete 5/2-tough graphs need min degree >= 5 > n - 1
        let err = sample_t_tough_graph(4, rational(5, 2), 200, 1).unwrap_err();
        assert_eq!(err, SampleError::Exhausted { n: 4, t: rational(5, 2), trials: 200 });
    }

    #[test]
    fn three_vertices() {
        // K_3 is the only 1-tough graph on three vertices and it is excluded
        assert!(sample_t_tough_graph(3, integer(1), 500, 3).is_err());
        let s = sample_t_tough_graph(3, rational(1, 2), 500, 3).unwrap();
        assert_eq!(s.graph.edge_count(), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(labeled_graph_count(4), 64);
        assert_eq!(all_labeled_graphs(3).count(), 8);
        assert_eq!(graph_from_edge_mask(4, 0b111111), named::complete(4));
        assert_eq!(graph_from_edge_mask(3, 0b001).edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(graph_from_edge_mask(3, 0b100).edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn named_shapes() {
        assert_eq!(named::petersen().degrees(), vec![3; 10]);
        assert_eq!(named::wheel(5).degree(0), 5);
        assert_eq!(named::complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(named::cycle(6).edge_count(), 6);
    }
}
