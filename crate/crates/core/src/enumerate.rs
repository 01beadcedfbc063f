//! Deterministic, splittable generation of all linear chord diagrams of a
//! given size, with pruning filters.
//!
//! Yield order: at each step the smallest unmatched point is paired with each
//! larger unmatched point in increasing order, depth-first. Filters prune
//! inside the recursion (a partial matching that already violates the target
//! predicate is abandoned), which keeps Catalan-sized enumerations feasible
//! well past n = 10. The practical bound for the unfiltered stream is n <= 10.

use std::sync::{Arc, Mutex};

use num::BigUint;

use crate::diagram::{classify, Chord, ChordDiagram, PairKind};
use crate::error::{Error, Result};
use crate::numbers::{catalan, odd_double_factorial};

/// A pruning strategy selecting which diagrams a stream yields.
///
/// `admits` is called with the chords placed so far (in placement order) when
/// the generator proposes the chord `(start, end)`; rejecting a pair prunes
/// the whole subtree below it. Because every pair of chords in a finished
/// diagram was checked when the later of the two was placed, pairwise
/// admission implies `accepts` on the full diagram.
pub trait ChordFilter: Send + Sync {
    /// Name plus parameters as accepted by the CLI, e.g. `minlen=3`.
    fn name(&self) -> String;

    /// May `(start, end)` be added to the partial matching?
    fn admits(&self, placed: &[(u32, u32)], start: u32, end: u32) -> bool;

    /// Full-diagram predicate, used for validation and property tests.
    fn accepts(&self, d: &ChordDiagram) -> bool;

    /// Closed-form count of qualifying diagrams when one is known.
    fn closed_count(&self, _n: usize) -> Option<BigUint> {
        None
    }
}

/// No restriction: all (2n-1)!! matchings.
pub struct AllDiagrams;

impl ChordFilter for AllDiagrams {
    fn name(&self) -> String {
        "all".into()
    }

    fn admits(&self, _placed: &[(u32, u32)], _start: u32, _end: u32) -> bool {
        true
    }

    fn accepts(&self, _d: &ChordDiagram) -> bool {
        true
    }

    fn closed_count(&self, n: usize) -> Option<BigUint> {
        Some(odd_double_factorial(n as u32))
    }
}

/// Every chord must have length at least `k`.
pub struct MinLength(pub u32);

impl ChordFilter for MinLength {
    fn name(&self) -> String {
        format!("minlen={}", self.0)
    }

    fn admits(&self, _placed: &[(u32, u32)], start: u32, end: u32) -> bool {
        end - start >= self.0
    }

    fn accepts(&self, d: &ChordDiagram) -> bool {
        d.chords().iter().all(|c| c.length() >= self.0)
    }

    fn closed_count(&self, n: usize) -> Option<BigUint> {
        // length >= 1 holds for every chord
        (self.0 <= 1).then(|| odd_double_factorial(n as u32))
    }
}

fn pair_kind(placed: &[(u32, u32)], start: u32, end: u32) -> impl Iterator<Item = PairKind> + '_ {
    let c = Chord::new(start, end).expect("generator proposes distinct points");
    placed.iter().map(move |&(a, b)| {
        let other = Chord::new(a, b).expect("placed chords are valid");
        classify(c, other).expect("placed chords are disjoint from the proposal")
    })
}

/// No two chords cross; counted by the Catalan numbers.
pub struct Noncrossing;

impl ChordFilter for Noncrossing {
    fn name(&self) -> String {
        "noncrossing".into()
    }

    fn admits(&self, placed: &[(u32, u32)], start: u32, end: u32) -> bool {
        pair_kind(placed, start, end).all(|k| k != PairKind::Crossing)
    }

    fn accepts(&self, d: &ChordDiagram) -> bool {
        no_pair(d, PairKind::Crossing)
    }

    fn closed_count(&self, n: usize) -> Option<BigUint> {
        Some(catalan(n as u32))
    }
}

/// No chord sits inside another; also counted by the Catalan numbers.
pub struct Nonnesting;

impl ChordFilter for Nonnesting {
    fn name(&self) -> String {
        "nonnesting".into()
    }

    fn admits(&self, placed: &[(u32, u32)], start: u32, end: u32) -> bool {
        pair_kind(placed, start, end).all(|k| k != PairKind::Nesting)
    }

    fn accepts(&self, d: &ChordDiagram) -> bool {
        no_pair(d, PairKind::Nesting)
    }

    fn closed_count(&self, n: usize) -> Option<BigUint> {
        Some(catalan(n as u32))
    }
}

fn no_pair(d: &ChordDiagram, kind: PairKind) -> bool {
    let chords = d.chords();
    for (i, &a) in chords.iter().enumerate() {
        for &b in &chords[i + 1..] {
            if classify(a, b).expect("chords of one diagram are disjoint") == kind {
                return false;
            }
        }
    }
    true
}

/// Parses a filter name: `all`, `minlen=K` (K >= 1), `noncrossing`,
/// `nonnesting`.
pub fn parse_filter(spec: &str) -> Result<Arc<dyn ChordFilter>> {
    match spec {
        "all" => Ok(Arc::new(AllDiagrams)),
        "noncrossing" => Ok(Arc::new(Noncrossing)),
        "nonnesting" => Ok(Arc::new(Nonnesting)),
        _ => {
            if let Some(k) = spec.strip_prefix("minlen=") {
                let k: u32 = k
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad minimum length {k:?}")))?;
                if k < 1 {
                    return Err(Error::Parse("minimum length must be at least 1".into()));
                }
                return Ok(Arc::new(MinLength(k)));
            }
            Err(Error::Unknown {
                what: "filter",
                name: spec.into(),
                expected: "all, minlen=K, noncrossing, nonnesting",
            })
        }
    }
}

/// Registered filter names for usage messages.
pub fn filter_names() -> &'static [&'static str] {
    &["all", "minlen=K", "noncrossing", "nonnesting"]
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Fresh,
    Descend,
    Backtrack,
    Done,
}

/// Single-pass stream over all qualifying diagrams of size n.
///
/// Each stream is single-consumer; distinct streams (including splits of one
/// parent) may run on different threads.
pub struct DiagramStream {
    n: usize,
    partner: Vec<u32>,       // 1-based, 0 = unmatched
    placed: Vec<(u32, u32)>, // chords in placement order
    filter: Arc<dyn ChordFilter>,
    first_span: (u32, u32), // inclusive candidate range for the first placement
    mode: Mode,
}

impl std::fmt::Debug for DiagramStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DiagramStream")
            .field("n", &self.n)
            .field("filter", &self.filter.name())
            .field("first_span", &self.first_span)
            .finish_non_exhaustive()
    }
}

/// Stream of all diagrams with n chords that satisfy the filter.
pub fn enumerate(n: usize, filter: Arc<dyn ChordFilter>) -> DiagramStream {
    DiagramStream {
        n,
        partner: vec![0; 2 * n + 1],
        placed: Vec::with_capacity(n),
        filter,
        first_span: (2, 2 * n as u32),
        mode: Mode::Fresh,
    }
}

impl DiagramStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn filter(&self) -> &Arc<dyn ChordFilter> {
        &self.filter
    }

    fn points(&self) -> u32 {
        2 * self.n as u32
    }

    fn first_free(&self) -> Option<u32> {
        (1..=self.points()).find(|&p| self.partner[p as usize] == 0)
    }

    fn span_for_level(&self, level: usize, i: u32) -> (u32, u32) {
        if level == 0 {
            (self.first_span.0.max(i + 1), self.first_span.1)
        } else {
            (i + 1, self.points())
        }
    }

    fn next_admissible(&self, i: u32, from: u32, hi: u32) -> Option<u32> {
        (from..=hi)
            .find(|&j| self.partner[j as usize] == 0 && self.filter.admits(&self.placed, i, j))
    }

    fn place(&mut self, i: u32, j: u32) {
        self.partner[i as usize] = j;
        self.partner[j as usize] = i;
        self.placed.push((i, j));
    }

    fn unplace(&mut self, i: u32, j: u32) {
        self.partner[i as usize] = 0;
        self.partner[j as usize] = 0;
    }

    /// Advances to the next complete matching, leaving it in the buffer.
    fn advance(&mut self) -> bool {
        loop {
            match self.mode {
                Mode::Fresh => self.mode = Mode::Descend,
                Mode::Descend => match self.first_free() {
                    None => {
                        self.mode = Mode::Backtrack;
                        return true;
                    }
                    Some(i) => {
                        let (lo, hi) = self.span_for_level(self.placed.len(), i);
                        match self.next_admissible(i, lo, hi) {
                            Some(j) => self.place(i, j),
                            None => self.mode = Mode::Backtrack,
                        }
                    }
                },
                Mode::Backtrack => match self.placed.pop() {
                    None => {
                        self.mode = Mode::Done;
                        return false;
                    }
                    Some((i, j)) => {
                        self.unplace(i, j);
                        let (_, hi) = self.span_for_level(self.placed.len(), i);
                        if let Some(j2) = self.next_admissible(i, j + 1, hi) {
                            self.place(i, j2);
                            self.mode = Mode::Descend;
                        }
                    }
                },
                Mode::Done => return false,
            }
        }
    }

    /// Counts the remaining diagrams by traversal, without materializing them.
    pub fn count_remaining(mut self) -> BigUint {
        let mut count: u128 = 0;
        while self.advance() {
            count += 1;
        }
        BigUint::from(count)
    }

    /// Visits the raw partner buffer of each remaining diagram (same layout
    /// as `ChordDiagram`: 1-based with slot 0 unused).
    pub(crate) fn for_each_raw<F: FnMut(&[u32])>(mut self, mut f: F) {
        while self.advance() {
            f(&self.partner);
        }
    }

    /// Splits an unconsumed stream into `parts` disjoint sub-streams,
    /// partitioned by the partner chosen for the smallest unmatched point.
    /// Concatenating the sub-streams in order reproduces the parent's yield
    /// order exactly.
    pub fn split(self, parts: usize) -> Result<Vec<DiagramStream>> {
        if parts == 0 {
            return Err(Error::ZeroParts);
        }
        if self.mode != Mode::Fresh {
            return Err(Error::StreamConsumed);
        }
        let mut out = Vec::with_capacity(parts);
        if self.n == 0 {
            // single empty diagram; it goes to the first part
            out.push(self);
            while out.len() < parts {
                out.push(DiagramStream {
                    n: 0,
                    partner: vec![0],
                    placed: Vec::new(),
                    filter: out[0].filter.clone(),
                    first_span: (1, 0),
                    mode: Mode::Done,
                });
            }
            return Ok(out);
        }
        let (lo, hi) = self.first_span;
        let candidates = (hi - lo + 1) as usize;
        let mut next = lo;
        for part in 0..parts {
            let size = candidates / parts + usize::from(part < candidates % parts);
            let span = if size == 0 {
                (1, 0) // empty span: yields nothing
            } else {
                let span = (next, next + size as u32 - 1);
                next = span.1 + 1;
                span
            };
            out.push(DiagramStream {
                n: self.n,
                partner: vec![0; 2 * self.n + 1],
                placed: Vec::new(),
                filter: self.filter.clone(),
                first_span: span,
                mode: if size == 0 { Mode::Done } else { Mode::Fresh },
            });
        }
        Ok(out)
    }
}

impl Iterator for DiagramStream {
    type Item = ChordDiagram;

    fn next(&mut self) -> Option<ChordDiagram> {
        if self.advance() {
            Some(ChordDiagram::from_partner_unchecked(
                self.partner.clone().into_boxed_slice(),
            ))
        } else {
            None
        }
    }
}

/// Number of qualifying diagrams, via closed form when the filter has one
/// and pruned traversal otherwise.
pub fn count(n: usize, filter: &Arc<dyn ChordFilter>) -> BigUint {
    filter
        .closed_count(n)
        .unwrap_or_else(|| enumerate(n, filter.clone()).count_remaining())
}

/// Runs `worker` over disjoint sub-streams on up to `threads` OS threads and
/// returns the results in sub-stream order, so any merge the caller performs
/// is independent of scheduling.
pub fn map_split<R, F>(n: usize, filter: &Arc<dyn ChordFilter>, threads: usize, worker: F) -> Vec<R>
where
    R: Send,
    F: Fn(DiagramStream) -> R + Sync,
{
    let threads = threads.max(1);
    let stream = enumerate(n, filter.clone());
    if threads == 1 {
        return vec![worker(stream)];
    }
    let parts = if n == 0 {
        1
    } else {
        (2 * n - 1).min(threads * 4)
    };
    let streams = stream.split(parts).expect("fresh stream splits");
    let mut slots: Vec<Option<R>> = Vec::with_capacity(parts);
    slots.resize_with(parts, || None);
    let slots = Mutex::new(slots);
    let queue: Vec<_> = streams.into_iter().enumerate().collect();
    let queue = Mutex::new(queue);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(parts) {
            scope.spawn(|| loop {
                let item = queue.lock().unwrap().pop();
                match item {
                    Some((idx, s)) => {
                        let r = worker(s);
                        slots.lock().unwrap()[idx] = Some(r);
                    }
                    None => break,
                }
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every part ran"))
        .collect()
}
