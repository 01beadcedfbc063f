//! Per-diagram statistics and their exact distributions over a filtered
//! enumeration.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigUint, One};

use crate::diagram::{classify, ChordDiagram, PairKind};
use crate::enumerate::{self, ChordFilter};
use crate::error::{Error, Result};

/// A statistic evaluated on a single diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Statistic {
    /// Number of chords of length exactly `length`.
    ShortChords { length: u32 },
    /// Number of indices i where i is a startpoint and i+1 an endpoint.
    LrPairs,
}

impl Statistic {
    /// Parses `sc` (length 1), `scK`, or `lr`.
    pub fn parse(spec: &str) -> Result<Self> {
        match spec {
            "lr" => Ok(Statistic::LrPairs),
            "sc" => Ok(Statistic::ShortChords { length: 1 }),
            _ => {
                if let Some(k) = spec.strip_prefix("sc") {
                    let length: u32 = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad statistic length {k:?}")))?;
                    if length < 1 {
                        return Err(Error::Parse("statistic length must be at least 1".into()));
                    }
                    return Ok(Statistic::ShortChords { length });
                }
                Err(Error::Unknown {
                    what: "statistic",
                    name: spec.into(),
                    expected: "sc, scK, lr",
                })
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Statistic::ShortChords { length } => format!("sc({length})"),
            Statistic::LrPairs => "lr".into(),
        }
    }

    pub fn eval(&self, d: &ChordDiagram) -> u32 {
        eval_partner(*self, d.partner_slice())
    }
}

/// Evaluates a statistic on a raw partner buffer (1-based, slot 0 unused).
pub(crate) fn eval_partner(stat: Statistic, partner: &[u32]) -> u32 {
    let points = (partner.len() - 1) as u32;
    match stat {
        Statistic::ShortChords { length } => (1..=points)
            .filter(|&p| partner[p as usize] > p && partner[p as usize] - p == length)
            .count() as u32,
        Statistic::LrPairs => (1..points)
            .filter(|&i| partner[i as usize] > i && partner[i as usize + 1] < i + 1)
            .count() as u32,
    }
}

/// Number of chords of length exactly k.
pub fn short_chords(d: &ChordDiagram, k: u32) -> u32 {
    Statistic::ShortChords { length: k }.eval(d)
}

/// Number of LR pairs: indices i with i a startpoint and i+1 an endpoint,
/// possibly of different chords. Single O(n) pass over the point roles.
pub fn lr_pairs(d: &ChordDiagram) -> u32 {
    Statistic::LrPairs.eval(d)
}

fn pair_count(d: &ChordDiagram, kind: PairKind) -> u32 {
    let chords = d.chords();
    let mut count = 0;
    for (i, &a) in chords.iter().enumerate() {
        for &b in &chords[i + 1..] {
            if classify(a, b).expect("chords of one diagram are disjoint") == kind {
                count += 1;
            }
        }
    }
    count
}

/// Number of crossing chord pairs.
pub fn crossing_count(d: &ChordDiagram) -> u32 {
    pair_count(d, PairKind::Crossing)
}

/// Number of nesting chord pairs.
pub fn nesting_count(d: &ChordDiagram) -> u32 {
    pair_count(d, PairKind::Nesting)
}

/// Minimum chord length; errors on the empty diagram.
pub fn min_chord_length(d: &ChordDiagram) -> Result<u32> {
    d.chords()
        .iter()
        .map(|c| c.length())
        .min()
        .ok_or(Error::EmptyDiagram)
}

/// Exact distribution of a statistic over a filtered enumeration.
///
/// Keys with zero count are not stored; dense renderings fill in explicit
/// zeros. The sum of all counts equals `enumerate::count(n, filter)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatisticHistogram {
    pub n: usize,
    pub filter: String,
    pub statistic: String,
    counts: BTreeMap<u32, BigUint>,
}

impl StatisticHistogram {
    fn new(n: usize, filter: &dyn ChordFilter, stat: Statistic) -> Self {
        StatisticHistogram {
            n,
            filter: filter.name(),
            statistic: stat.name(),
            counts: BTreeMap::new(),
        }
    }

    fn bump(&mut self, value: u32) {
        *self.counts.entry(value).or_default() += BigUint::one();
    }

    fn absorb(&mut self, other: StatisticHistogram) {
        for (value, count) in other.counts {
            *self.counts.entry(value).or_default() += count;
        }
    }

    /// Count for one statistic value (zero if absent).
    pub fn get(&self, value: u32) -> BigUint {
        self.counts.get(&value).cloned().unwrap_or_default()
    }

    pub fn counts(&self) -> &BTreeMap<u32, BigUint> {
        &self.counts
    }

    /// Total mass, which must equal the filtered count.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Values 0..len-1 with explicit zeros, e.g. the coefficient list of the
    /// distribution polynomial.
    pub fn dense(&self, len: usize) -> Vec<BigUint> {
        (0..len as u32).map(|v| self.get(v)).collect()
    }

    /// Largest statistic value with nonzero count.
    pub fn max_value(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let counts: serde_json::Map<String, serde_json::Value> = self
            .counts
            .iter()
            .map(|(v, c)| (v.to_string(), crate::json_uint(c)))
            .collect();
        serde_json::json!({
            "n": self.n,
            "filter": self.filter,
            "statistic": self.statistic,
            "counts": counts,
        })
    }
}

/// Full-enumeration distribution of `stat` over the diagrams passing `filter`.
pub fn histogram(n: usize, filter: &Arc<dyn ChordFilter>, stat: Statistic) -> StatisticHistogram {
    histogram_threads(n, filter, stat, 1)
}

/// Same distribution, fanned out over split streams. Partial maps merge by
/// addition, so the result is identical for every thread count.
pub fn histogram_threads(
    n: usize,
    filter: &Arc<dyn ChordFilter>,
    stat: Statistic,
    threads: usize,
) -> StatisticHistogram {
    let parts = enumerate::map_split(n, filter, threads, |stream| {
        let mut h = StatisticHistogram::new(n, filter.as_ref(), stat);
        stream.for_each_raw(|partner| h.bump(eval_partner(stat, partner)));
        h
    });
    let mut merged = StatisticHistogram::new(n, filter.as_ref(), stat);
    for part in parts {
        merged.absorb(part);
    }
    merged
}
