//! The chord-diagram value type: a perfect matching on the points 1..=2n.
//!
//! Points are 1-based in every interface. The canonical text form lists the
//! chords sorted by startpoint, e.g. `(1,6)(2,5)(3,4)`; the JSON form is an
//! array of 2-element arrays. The empty diagram (n = 0) prints as the empty
//! string and `[]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An arc connecting two distinct points, stored with `start < end`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    start: u32,
    end: u32,
}

impl Chord {
    /// Builds a chord from two distinct endpoints in either order.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::DuplicatePoint { point: a });
        }
        Ok(Chord {
            start: a.min(b),
            end: a.max(b),
        })
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn end(&self) -> u32 {
        self.end
    }

    /// end - start; 1 for a short chord.
    pub fn length(&self) -> u32 {
        self.end - self.start
    }

    pub fn contains(&self, point: u32) -> bool {
        self.start == point || self.end == point
    }

    fn as_tuple(&self) -> (u32, u32) {
        (self.start, self.end)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// Relative position of two disjoint chords. Exactly one case holds per pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// a1 < a2 < b1 < b2 after ordering by startpoint.
    Crossing,
    /// a1 < a2 < b2 < b1: the second chord sits inside the first.
    Nesting,
    /// a1 < b1 < a2 < b2: side by side.
    Sequential,
}

/// Classifies a disjoint chord pair after ordering by startpoint.
pub fn classify(c1: Chord, c2: Chord) -> Result<PairKind> {
    for p in [c2.start, c2.end] {
        if c1.contains(p) {
            return Err(Error::OverlappingChords {
                a: c1.as_tuple(),
                b: c2.as_tuple(),
                point: p,
            });
        }
    }
    let (first, second) = if c1.start < c2.start {
        (c1, c2)
    } else {
        (c2, c1)
    };
    Ok(if first.end < second.start {
        PairKind::Sequential
    } else if first.end < second.end {
        PairKind::Crossing
    } else {
        PairKind::Nesting
    })
}

pub fn crossing(c1: Chord, c2: Chord) -> Result<bool> {
    Ok(classify(c1, c2)? == PairKind::Crossing)
}

pub fn nesting(c1: Chord, c2: Chord) -> Result<bool> {
    Ok(classify(c1, c2)? == PairKind::Nesting)
}

/// A perfect matching on [2n], stored as its partner involution.
///
/// `partner[p]` is the point matched with `p` for p in 1..=2n (slot 0 is an
/// unused sentinel so that indices read 1-based). Two diagrams are equal iff
/// their partner sequences are equal; ordering and hashing follow the same
/// sequence, so diagrams can key maps and sort deterministically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordDiagram {
    partner: Box<[u32]>,
}

impl ChordDiagram {
    /// The unique diagram with no chords.
    pub fn empty() -> Self {
        ChordDiagram {
            partner: vec![0].into_boxed_slice(),
        }
    }

    /// Builds a diagram from `n` chord pairs covering 1..=2n exactly once.
    pub fn from_chords(pairs: &[(u32, u32)], n: usize) -> Result<Self> {
        if pairs.len() != n {
            return Err(Error::WrongChordCount {
                expected: n,
                got: pairs.len(),
            });
        }
        let points = 2 * n as u32;
        let mut partner = vec![0u32; 2 * n + 1];
        for &(a, b) in pairs {
            for p in [a, b] {
                if p < 1 || p > points {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        max: points,
                    });
                }
            }
            if a == b {
                return Err(Error::DuplicatePoint { point: a });
            }
            for p in [a, b] {
                if partner[p as usize] != 0 {
                    return Err(Error::DuplicatePoint { point: p });
                }
            }
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        // 2n distinct in-range points fill every slot, so the involution is total.
        Ok(ChordDiagram {
            partner: partner.into_boxed_slice(),
        })
    }

    /// Wraps a partner buffer produced by the enumerator. The buffer uses the
    /// same convention as `self.partner` and must already be a fixed-point-free
    /// involution.
    pub(crate) fn from_partner_unchecked(partner: Box<[u32]>) -> Self {
        let d = ChordDiagram { partner };
        debug_assert!(d.check_involution().is_ok());
        d
    }

    fn check_involution(&self) -> Result<()> {
        let points = self.points();
        for p in 1..=points {
            let q = self.partner[p as usize];
            if q < 1 || q > points {
                return Err(Error::PointOutOfRange {
                    point: q,
                    max: points,
                });
            }
            if q == p || self.partner[q as usize] != p {
                return Err(Error::DuplicatePoint { point: p });
            }
        }
        Ok(())
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        (self.partner.len() - 1) / 2
    }

    /// Number of points, 2n.
    pub fn points(&self) -> u32 {
        (self.partner.len() - 1) as u32
    }

    /// The point matched with `p`. Panics if `p` is not in 1..=2n.
    pub fn partner(&self, p: u32) -> u32 {
        assert!(p >= 1 && p <= self.points(), "point {p} out of range");
        self.partner[p as usize]
    }

    /// Whether `p` is the startpoint (smaller end) of its chord.
    pub fn is_startpoint(&self, p: u32) -> bool {
        self.partner(p) > p
    }

    /// The chord containing `p`.
    pub fn chord_at(&self, p: u32) -> Chord {
        Chord::new(p, self.partner(p)).expect("involution has no fixed point")
    }

    /// All chords sorted by startpoint; startpoints are strictly increasing
    /// and the endpoints partition 1..=2n.
    pub fn chords(&self) -> Vec<Chord> {
        (1..=self.points())
            .filter(|&p| self.is_startpoint(p))
            .map(|p| self.chord_at(p))
            .collect()
    }

    pub(crate) fn partner_slice(&self) -> &[u32] {
        &self.partner
    }

    /// JSON form: array of `[start, end]` pairs sorted by startpoint.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.chords()
                .iter()
                .map(|c| serde_json::json!([c.start(), c.end()]))
                .collect(),
        )
    }

    /// Parses the JSON form, validating the matching.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of chord pairs".into()))?;
        let mut pairs = Vec::with_capacity(arr.len());
        for item in arr {
            let pair = item
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("expected a 2-element array".into()))?;
            let a = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("chord endpoint is not an integer".into()))?;
            let b = pair[1]
                .as_u64()
                .ok_or_else(|| Error::Parse("chord endpoint is not an integer".into()))?;
            let a = u32::try_from(a).map_err(|_| Error::Parse("endpoint too large".into()))?;
            let b = u32::try_from(b).map_err(|_| Error::Parse("endpoint too large".into()))?;
            pairs.push((a, b));
        }
        let n = pairs.len();
        ChordDiagram::from_chords(&pairs, n)
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.chords() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChordDiagram[{self}]")
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    /// Parses the text form `(a,b)(c,d)...`; the empty string is the empty
    /// diagram. Whitespace around and between chords is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' at {rest:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse("missing ')'".into()))?;
            let body = &rest[1..close];
            let (a, b) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected 'a,b' in {body:?}")))?;
            let a: u32 = a
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad point {a:?}")))?;
            let b: u32 = b
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad point {b:?}")))?;
            pairs.push((a, b));
            rest = rest[close + 1..].trim_start();
        }
        let n = pairs.len();
        ChordDiagram::from_chords(&pairs, n)
    }
}

impl FromStr for Chord {
    type Err = Error;

    /// Parses `(a,b)`; the endpoints may be in either order.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected '(a,b)', got {s:?}")))?;
        let (a, b) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected 'a,b' in {body:?}")))?;
        let a: u32 = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad point {a:?}")))?;
        let b: u32 = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad point {b:?}")))?;
        Chord::new(a, b)
    }
}
