use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use tough_closure::degree::{chvatal_condition, predicate_pt};
use tough_closure::generators::{graph_from_edge_mask, labeled_graph_count, random_graph, sample_t_tough_graph_with};
use tough_closure::graph6::parse_graph6_lines;
use tough_closure::rational::as_string;
use tough_closure::toughness::toughness_with;
use tough_closure::{Graph, Limits, Rational};

/// Largest `n` enumerated exhaustively unless the caller raises it.
pub const EXHAUSTIVE_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// Every labeled graph on `n` vertices, by edge mask.
    Exhaustive { n: usize },
    /// `count` draws from `G(n, p)`; `n` cycles through the range.
    Random {
        n_min: usize,
        n_max: usize,
        p: Density,
        count: u64,
        seed: u64,
    },
    /// `count` rejection samples with toughness at least `t`.
    ToughSampled {
        n_min: usize,
        n_max: usize,
        #[serde(with = "as_string")]
        t: Rational,
        count: u64,
        seed: u64,
        max_trials: u64,
    },
    Corpus { path: PathBuf },
}

impl Family {
    pub fn random(n: RangeInclusive<usize>, p: Density, count: u64, seed: u64) -> Self {
        Family::Random { n_min: *n.start(), n_max: *n.end(), p, count, seed }
    }

    pub fn tough_sampled(n: RangeInclusive<usize>, t: Rational, count: u64, seed: u64) -> Self {
        Family::ToughSampled { n_min: *n.start(), n_max: *n.end(), t, count, seed, max_trials: 100_000 }
    }
}

/// Edge probability of a random family: fixed, or cycling through
/// 1/10, 2/10, ..., 9/10 by instance index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Density {
    Fixed(Rational),
    Sweep,
}

impl Density {
    pub fn at(self, k: u64) -> Rational {
        match self {
            Density::Fixed(p) => p,
            Density::Sweep => Rational::new(1 + (k % 9) as i64, 10),
        }
    }
}

impl std::str::FromStr for Density {
    type Err = tough_closure::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "sweep" {
            return Ok(Density::Sweep);
        }
        tough_closure::rational::parse_rational(s).map(Density::Fixed)
    }
}

impl Serialize for Density {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Density::Fixed(p) => s.collect_str(p),
            Density::Sweep => s.serialize_str("sweep"),
        }
    }
}

impl<'de> Deserialize<'de> for Density {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Gates applied before the target; failures count as filtered out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "gate", rename_all = "snake_case")]
pub enum Filter {
    MinToughness {
        #[serde(with = "as_string")]
        tau: Rational,
    },
    Pt { t: usize },
    Chvatal,
    /// Graphs with at least one nonadjacent pair.
    NotComplete,
}

impl Filter {
    pub fn admits(&self, g: &Graph, limits: &Limits) -> tough_closure::Result<bool> {
        Ok(match self {
            Filter::MinToughness { tau } => toughness_with(g, limits)?.value.at_least(*tau),
            Filter::Pt { t } => predicate_pt(&g.degree_sequence(), *t).holds(),
            Filter::Chvatal => chvatal_condition(&g.degree_sequence()).holds(),
            Filter::NotComplete => !g.is_complete(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPlan {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub filters: Vec<Filter>,
}

impl SweepPlan {
    pub fn new(family: Family) -> Self {
        SweepPlan { family, filters: Vec::new() }
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }
}

/// Random access to the instances of a family.
pub(crate) enum Source {
    Exhaustive { n: usize, count: u64 },
    Random { n_min: usize, span: u64, p: Density, count: u64, seed: u64 },
    Tough { n_min: usize, span: u64, t: Rational, count: u64, seed: u64, max_trials: u64 },
    Corpus(Vec<Graph>),
}

impl Source {
    pub(crate) fn open(family: &Family, exhaustive_max_n: usize) -> anyhow::Result<Self> {
        Ok(match family {
            &Family::Exhaustive { n } => {
                if n > exhaustive_max_n {
                    bail!("exhaustive enumeration capped at n = {exhaustive_max_n}, asked for {n}");
                }
                Source::Exhaustive { n, count: labeled_graph_count(n) }
            }
            &Family::Random { n_min, n_max, p, count, seed } => {
                check_range(n_min, n_max)?;
                Source::Random { n_min, span: (n_max - n_min + 1) as u64, p, count, seed }
            }
            &Family::ToughSampled { n_min, n_max, t, count, seed, max_trials } => {
                check_range(n_min, n_max)?;
                Source::Tough { n_min, span: (n_max - n_min + 1) as u64, t, count, seed, max_trials }
            }
            Family::Corpus { path } => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let graphs = parse_graph6_lines(&text)
                    .map_err(|(line, e)| anyhow::anyhow!("{}:{line}: {e}", path.display()))?;
                Source::Corpus(graphs)
            }
        })
    }

    pub(crate) fn len(&self) -> u64 {
        match self {
            Source::Exhaustive { count, .. } | Source::Random { count, .. } | Source::Tough { count, .. } => *count,
            Source::Corpus(gs) => gs.len() as u64,
        }
    }

    pub(crate) fn get(&self, k: u64, limits: &Limits) -> Result<Graph, String> {
        match self {
            Source::Exhaustive { n, .. } => Ok(graph_from_edge_mask(*n, k)),
            Source::Random { n_min, span, p, seed, .. } => {
                let n = n_min + (k % span) as usize;
                random_graph(n, p.at(k), derive_seed(*seed, k)).map_err(|e| e.to_string())
            }
            Source::Tough { n_min, span, t, seed, max_trials, .. } => {
                let n = n_min + (k % span) as usize;
                sample_t_tough_graph_with(n, *t, *max_trials, derive_seed(*seed, k), limits)
                    .map(|s| s.graph)
                    .map_err(|e| e.to_string())
            }
            Source::Corpus(gs) => Ok(gs[k as usize].clone()),
        }
    }
}

fn check_range(lo: usize, hi: usize) -> anyhow::Result<()> {
    if lo == 0 || lo > hi {
        bail!("bad vertex-count range {lo}..={hi}");
    }
    Ok(())
}

/// SplitMix64 step, so neighbouring instance seeds are decorrelated.
pub fn derive_seed(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add(k.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
