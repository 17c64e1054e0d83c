//! Exact graph toughness by exhaustive cut-set enumeration.
//!
//! Toughness is `min |C| / c(G - C)` over cut-sets `C`, i.e. vertex sets
//! whose removal leaves at least two components. Conventions:
//!
//! * a complete graph has no cut-set and its toughness is [`Toughness::Infinite`];
//! * a disconnected graph has toughness 0, witnessed by the empty set.
//!
//! Subsets are swept by increasing size. The sweep stops at the first size
//! `k` with `k / (n - k) > best`: removing `k` vertices leaves at most
//! `n - k` components, so every larger cut-set has ratio at least
//! `k / (n - k)`, which only grows with `k`. The inequality is strict so that
//! ties are still visited and the lexicographically smallest witness wins.
//! No other pruning is applied.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::rational::Rational;

/// Toughness value; `Infinite` orders above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn at_least(self, t: Rational) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(v) => v >= t,
        }
    }

    pub fn finite(self) -> Option<Rational> {
        match self {
            Toughness::Finite(v) => Some(v),
            Toughness::Infinite => None,
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Finite(v) => write!(f, "{v}"),
            Toughness::Infinite => write!(f, "Infinite"),
        }
    }
}

impl Serialize for Toughness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Toughness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "Infinite" {
            return Ok(Toughness::Infinite);
        }
        crate::rational::parse_rational(&text)
            .map(Toughness::Finite)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessReport {
    pub value: Toughness,
    /// Minimising cut-set; `None` only for complete graphs.
    pub witness: Option<VertexSet>,
    /// `c(G - witness)`.
    pub witness_components: usize,
    pub subsets_examined: u64,
}

pub fn toughness(g: &Graph) -> Result<ToughnessReport> {
    toughness_with(g, &Limits::default())
}

pub fn toughness_with(g: &Graph, limits: &Limits) -> Result<ToughnessReport> {
    let n = g.order();
    if n > limits.toughness_max_n {
        return Err(Error::InstanceTooLarge { operation: "toughness", n, cap: limits.toughness_max_n });
    }
    if g.is_complete() {
        return Ok(ToughnessReport {
            value: Toughness::Infinite,
            witness: None,
            witness_components: 1.min(n),
            subsets_examined: 0,
        });
    }
    let base = g.component_count(VertexSet::EMPTY);
    if base >= 2 {
        return Ok(ToughnessReport {
            value: Toughness::Finite(Rational::from_integer(0)),
            witness: Some(VertexSet::EMPTY),
            witness_components: base,
            subsets_examined: 1,
        });
    }

    // best = (|C|, c(G - C), C)
    let mut best: Option<(usize, usize, u64)> = None;
    let mut examined = 0u64;
    let limit = 1u64 << n;
    for k in 1..=n - 2 {
        if let Some((bk, bc, _)) = best {
            if k * bc > bk * (n - k) {
                break;
            }
        }
        let mut subset = (1u64 << k) - 1;
        while subset < limit {
            examined += 1;
            if examined & 0xfff == 0 {
                limits.check_deadline("toughness")?;
            }
            let c = g.component_count(VertexSet::from_bits(subset));
            if c >= 2 {
                let better = match best {
                    None => true,
                    Some((bk, bc, bw)) => match (k * bc).cmp(&(bk * c)) {
                        Ordering::Less => true,
                        Ordering::Equal => lex_less(subset, bw),
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((k, c, subset));
                }
            }
            subset = next_same_popcount(subset);
        }
    }
    let (k, c, w) = best.expect("a connected non-complete graph has a cut-set");
    Ok(ToughnessReport {
        value: Toughness::Finite(Rational::new(k as i64, c as i64)),
        witness: Some(VertexSet::from_bits(w)),
        witness_components: c,
        subsets_examined: examined,
    })
}

/// Gosper's hack: next larger integer with the same number of set bits.
fn next_same_popcount(x: u64) -> u64 {
    let low = x & x.wrapping_neg();
    let ripple = x.wrapping_add(low);
    if ripple == 0 {
        return u64::MAX;
    }
    (((ripple ^ x) >> 2) / low) | ripple
}

/// Lexicographic order on the ascending member lists of two sets.
fn lex_less(a: u64, b: u64) -> bool {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return false,
            (true, false) => return true,
            (false, true) => return false,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x < y;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TToughVerdict {
    pub holds: bool,
    /// A cut-set `C` with `t * c(G - C) > |C|` when `holds` is false.
    pub violating: Option<VertexSet>,
    pub report: ToughnessReport,
}

/// Whether `t * c(G - C) <= |C|` for every cut-set `C`.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<TToughVerdict> {
    is_t_tough_with(g, t, &Limits::default())
}

pub fn is_t_tough_with(g: &Graph, t: Rational, limits: &Limits) -> Result<TToughVerdict> {
    if *t.numer() < 0 {
        return Err(Error::InvalidParameter(format!("toughness threshold {t} is negative")));
    }
    let report = toughness_with(g, limits)?;
    let holds = report.value.at_least(t);
    Ok(TToughVerdict {
        holds,
        violating: if holds { None } else { report.witness },
        report,
    })
}

/// Smallest degree a non-complete `t`-tough graph must have: `ceil(2t)`.
pub fn min_degree_bound(t: Rational) -> usize {
    let twice = t * Rational::from_integer(2);
    twice.ceil().to_integer().max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::rational::{integer, rational};

    fn value(g: &Graph) -> Toughness {
        toughness(g).unwrap().value
    }

    #[test]
    fn c5_is_one_tough() {
        let r = toughness(&named::cycle(5)).unwrap();
        assert_eq!(r.value, Toughness::Finite(integer(1)));
        assert_eq!(r.witness.unwrap().to_vec(), vec![0, 2]);
        assert_eq!(r.witness_components, 2);
    }

    #[test]
    fn spot_values() {
        assert_eq!(value(&named::complete(5)), Toughness::Infinite);
        assert_eq!(value(&named::petersen()), Toughness::Finite(rational(4, 3)));
        let p3 = toughness(&named::path(3)).unwrap();
        assert_eq!(p3.value, Toughness::Finite(rational(1, 2)));
        assert_eq!(p3.witness.unwrap().to_vec(), vec![1]);
        let two_triangles = named::disjoint_union(&named::complete(3), &named::complete(3));
        let r = toughness(&two_triangles).unwrap();
        assert_eq!(r.value, Toughness::Finite(integer(0)));
        assert_eq!(r.witness, Some(VertexSet::EMPTY));
        assert_eq!(value(&named::complete_bipartite(2, 3)), Toughness::Finite(rational(2, 3)));
        assert_eq!(value(&named::star(4)), Toughness::Finite(rational(1, 4)));
        assert_eq!(value(&Graph::empty(1)), Toughness::Infinite);
        assert_eq!(value(&Graph::empty(2)), Toughness::Finite(integer(0)));
    }

    #[test]
    fn t_tough_predicate() {
        let c5 = named::cycle(5);
        assert!(is_t_tough(&c5, integer(1)).unwrap().holds);
        let v = is_t_tough(&c5, rational(3, 2)).unwrap();
        assert!(!v.holds);
        let w = v.violating.unwrap();
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|a| w.iter().all(|b| a == b || !c5.has_edge(a, b))));
        assert!(is_t_tough(&named::complete(6), integer(1000)).unwrap().holds);
        assert!(is_t_tough(&named::path(3), integer(0)).unwrap().holds);
        assert!(is_t_tough(&c5, rational(-1, 2)).is_err());
    }

    #[test]
    fn size_cap() {
        let g = named::cycle(25);
        assert!(matches!(toughness(&g), Err(Error::InstanceTooLarge { n: 25, cap: 24, .. })));
        assert!(toughness_with(&g, &Limits::with_max_n(25)).is_ok());
    }

    #[test]
    fn gosper_walks_all_k_subsets() {
        let mut x = 0b111u64;
        let mut count = 0;
        while x < 1 << 6 {
            assert_eq!(x.count_ones(), 3);
            count += 1;
            x = next_same_popcount(x);
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn lexicographic_witness_order() {
        // {0,1,2} < {0,2} < {1}
        assert!(lex_less(0b111, 0b101));
        assert!(lex_less(0b101, 0b010));
        assert!(!lex_less(0b010, 0b010));
        assert!(lex_less(0b001, 0b011));
    }

    #[test]
    fn min_degree_bounds() {
        assert_eq!(min_degree_bound(integer(4)), 8);
        assert_eq!(min_degree_bound(rational(5, 4)), 3);
        assert_eq!(min_degree_bound(rational(5, 2)), 5);
    }
}
