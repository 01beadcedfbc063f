//! Executable forms of the three bijective constructions: the marked-short-
//! chord unwrap and its inverse, the injections behind unimodality of the
//! short-chord distribution, and the Dyck-path correspondence for nonnesting
//! diagrams.

use crate::diagram::{classify, Chord, ChordDiagram, PairKind};
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::stats::short_chords;

/// A diagram together with one of its length-1 chords.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MarkedDiagram {
    diagram: ChordDiagram,
    mark: Chord,
}

impl MarkedDiagram {
    pub fn new(diagram: ChordDiagram, mark: Chord) -> Result<Self> {
        if mark.length() != 1 {
            return Err(Error::MarkNotShort {
                mark: (mark.start(), mark.end()),
                length: mark.length(),
            });
        }
        if mark.end() > diagram.points() || diagram.partner(mark.start()) != mark.end() {
            return Err(Error::MarkNotInDiagram {
                mark: (mark.start(), mark.end()),
            });
        }
        Ok(MarkedDiagram { diagram, mark })
    }

    pub fn diagram(&self) -> &ChordDiagram {
        &self.diagram
    }

    pub fn mark(&self) -> Chord {
        self.mark
    }

    /// All (diagram, short chord) pairs over a set of diagrams.
    pub fn all_marks(diagrams: impl IntoIterator<Item = ChordDiagram>) -> Vec<MarkedDiagram> {
        let mut out = Vec::new();
        for d in diagrams {
            for c in d.chords() {
                if c.length() == 1 {
                    out.push(MarkedDiagram {
                        diagram: d.clone(),
                        mark: c,
                    });
                }
            }
        }
        out
    }
}

/// Sends a marked diagram to a plain diagram: the mark {i, i+1} becomes the
/// chord {1, i+1} and every point p <= i-1 moves one position right. A mark
/// at {1, 2} maps the diagram to itself. This is a bijection from marked
/// diagrams of size n onto diagrams of size n; see `rewrap` for the inverse.
pub fn unwrap(md: &MarkedDiagram) -> ChordDiagram {
    let i = md.mark.start();
    if i == 1 {
        return md.diagram.clone();
    }
    let shift = |p: u32| if p < i { p + 1 } else { p };
    let mut pairs = vec![(1, i + 1)];
    for c in md.diagram.chords() {
        if c != md.mark {
            pairs.push((shift(c.start()), shift(c.end())));
        }
    }
    let n = md.diagram.n();
    ChordDiagram::from_chords(&pairs, n).expect("relabeling keeps a perfect matching")
}

/// Inverse of `unwrap`: reads the chord at point 1, say {1, i+1}; when i = 1
/// the mark is {1, 2} and the diagram is unchanged, otherwise the first chord
/// is removed, points 2..=i move one position left, and the short chord
/// {i, i+1} is inserted and marked.
pub fn rewrap(d: &ChordDiagram) -> Result<MarkedDiagram> {
    if d.n() == 0 {
        return Err(Error::EmptyDiagram);
    }
    let m = d.partner(1);
    if m == 2 {
        return MarkedDiagram::new(d.clone(), Chord::new(1, 2).unwrap());
    }
    let i = m - 1;
    let shift = |p: u32| if (2..=i).contains(&p) { p - 1 } else { p };
    let mut pairs = vec![(i, i + 1)];
    for c in d.chords() {
        if c.start() != 1 {
            pairs.push((shift(c.start()), shift(c.end())));
        }
    }
    let out =
        ChordDiagram::from_chords(&pairs, d.n()).expect("relabeling keeps a perfect matching");
    MarkedDiagram::new(out, Chord::new(i, i + 1).unwrap())
}

/// The injection behind unimodality of the short-chord distribution.
///
/// For a diagram with j >= 2 short chords, unwraps the rightmost short chord,
/// giving a diagram with j-1 short chords. For j = 0, applies the rewrap
/// relabeling to the first chord, giving exactly one short chord. Undefined
/// for j = 1. `short_count` must equal the diagram's actual short-chord count.
pub fn unimodal_injection(d: &ChordDiagram, short_count: u32) -> Result<ChordDiagram> {
    let actual = short_chords(d, 1);
    if actual != short_count {
        return Err(Error::ShortChordMismatch {
            claimed: short_count,
            actual,
        });
    }
    match short_count {
        1 => Err(Error::SingleShortChord),
        0 => {
            if d.n() == 0 {
                return Err(Error::EmptyDiagram);
            }
            Ok(rewrap(d)?.diagram)
        }
        _ => {
            let rightmost = d
                .chords()
                .into_iter()
                .rfind(|c| c.length() == 1)
                .expect("short_count >= 2");
            let md = MarkedDiagram::new(d.clone(), rightmost)?;
            Ok(unwrap(&md))
        }
    }
}

/// Labels the U steps 1..n left to right, the D steps likewise, and joins
/// the U and D steps with equal labels. The image is the unique nonnesting
/// diagram whose LR pairs sit exactly at the peaks of the path.
pub fn dyck_to_matching(path: &DyckPath) -> ChordDiagram {
    let n = path.semilength();
    let mut up_positions = Vec::with_capacity(n);
    let mut pairs = Vec::with_capacity(n);
    let mut downs = 0usize;
    for (pos, step) in path.steps().iter().enumerate() {
        match step {
            Step::Up => up_positions.push(pos as u32 + 1),
            Step::Down => {
                pairs.push((up_positions[downs], pos as u32 + 1));
                downs += 1;
            }
        }
    }
    ChordDiagram::from_chords(&pairs, n).expect("a path is a matching of its steps")
}

/// Inverse of `dyck_to_matching` on nonnesting diagrams: startpoints become
/// up steps and endpoints down steps, read left to right. A nesting pair is
/// rejected and named.
pub fn matching_to_dyck(d: &ChordDiagram) -> Result<DyckPath> {
    let chords = d.chords();
    for (i, &a) in chords.iter().enumerate() {
        for &b in &chords[i + 1..] {
            if classify(a, b).expect("chords of one diagram are disjoint") == PairKind::Nesting {
                return Err(Error::NestingPair {
                    outer: (a.start(), a.end()),
                    inner: (b.start(), b.end()),
                });
            }
        }
    }
    let steps = (1..=d.points())
        .map(|p| {
            if d.is_startpoint(p) {
                Step::Up
            } else {
                Step::Down
            }
        })
        .collect();
    Ok(DyckPath::new(steps).expect("point roles of a matching balance"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate, AllDiagrams, Nonnesting};
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn diagram(s: &str) -> ChordDiagram {
        s.parse().unwrap()
    }

    fn marked(d: &str, mark: &str) -> MarkedDiagram {
        MarkedDiagram::new(diagram(d), mark.parse().unwrap()).unwrap()
    }

    #[test]
    fn unwrap_figure_three_examples() {
        assert_eq!(
            unwrap(&marked("(1,6)(2,5)(3,4)", "(3,4)")),
            diagram("(1,4)(2,6)(3,5)")
        );
        assert_eq!(
            unwrap(&marked("(1,6)(2,3)(4,5)", "(2,3)")),
            diagram("(1,3)(2,6)(4,5)")
        );
        assert_eq!(
            unwrap(&marked("(1,2)(3,4)(5,6)", "(1,2)")),
            diagram("(1,2)(3,4)(5,6)")
        );
    }

    #[test]
    fn rewrap_examples() {
        let md = rewrap(&diagram("(1,4)(2,6)(3,5)")).unwrap();
        assert_eq!(md.diagram(), &diagram("(1,6)(2,5)(3,4)"));
        assert_eq!(md.mark(), "(3,4)".parse().unwrap());

        let md = rewrap(&diagram("(1,2)(3,6)(4,5)")).unwrap();
        assert_eq!(md.diagram(), &diagram("(1,2)(3,6)(4,5)"));
        assert_eq!(md.mark(), "(1,2)".parse().unwrap());

        assert_eq!(
            rewrap(&ChordDiagram::empty()).unwrap_err(),
            Error::EmptyDiagram
        );
    }

    #[test]
    fn marked_diagram_validation() {
        assert!(matches!(
            MarkedDiagram::new(diagram("(1,6)(2,5)(3,4)"), "(2,5)".parse().unwrap()),
            Err(Error::MarkNotShort { .. })
        ));
        assert!(matches!(
            MarkedDiagram::new(diagram("(1,2)(3,4)"), "(2,3)".parse().unwrap()),
            Err(Error::MarkNotInDiagram { .. })
        ));
    }

    #[test]
    fn round_trips_up_to_n5() {
        for n in 1..=5usize {
            let diagrams: Vec<ChordDiagram> = enumerate(n, Arc::new(AllDiagrams)).collect();
            for md in MarkedDiagram::all_marks(diagrams.iter().cloned()) {
                assert_eq!(rewrap(&unwrap(&md)).unwrap(), md);
            }
            for d in &diagrams {
                assert_eq!(&unwrap(&rewrap(d).unwrap()), d);
            }
        }
    }

    #[test]
    fn unwrap_is_bijective_n4() {
        let diagrams: Vec<ChordDiagram> = enumerate(4, Arc::new(AllDiagrams)).collect();
        let images: BTreeSet<ChordDiagram> = MarkedDiagram::all_marks(diagrams.iter().cloned())
            .iter()
            .map(unwrap)
            .collect();
        assert_eq!(images.len(), diagrams.len());
    }

    #[test]
    fn injection_examples() {
        let out = unimodal_injection(&diagram("(1,4)(2,6)(3,5)"), 0).unwrap();
        assert_eq!(short_chords(&out, 1), 1);
        assert_eq!(out, diagram("(1,6)(2,5)(3,4)"));

        let out = unimodal_injection(&diagram("(1,6)(2,3)(4,5)"), 2).unwrap();
        assert_eq!(short_chords(&out, 1), 1);
        assert_eq!(out, diagram("(1,5)(2,6)(3,4)"));
        // the image does not begin with a short chord
        assert_ne!(out.partner(1), 2);
    }

    #[test]
    fn injection_validation() {
        // (1,2) is the only length-1 chord here
        assert_eq!(
            unimodal_injection(&diagram("(1,2)(3,5)(4,6)"), 1).unwrap_err(),
            Error::SingleShortChord
        );
        assert_eq!(
            unimodal_injection(&diagram("(1,2)(3,5)(4,6)"), 0).unwrap_err(),
            Error::ShortChordMismatch {
                claimed: 0,
                actual: 1
            }
        );
    }

    #[test]
    fn injection_shifts_class_n5() {
        let diagrams: Vec<ChordDiagram> = enumerate(5, Arc::new(AllDiagrams)).collect();
        for j in [0u32, 2, 3, 4, 5] {
            let class: Vec<&ChordDiagram> = diagrams
                .iter()
                .filter(|d| short_chords(d, 1) == j)
                .collect();
            let images: Vec<ChordDiagram> = class
                .iter()
                .map(|d| unimodal_injection(d, j).unwrap())
                .collect();
            let target = if j == 0 { 1 } else { j - 1 };
            assert!(images.iter().all(|d| short_chords(d, 1) == target));
            let distinct: BTreeSet<&ChordDiagram> = images.iter().collect();
            assert_eq!(distinct.len(), class.len(), "j={j}");
        }
    }

    #[test]
    fn dyck_examples() {
        let p: DyckPath = "UUDUDD".parse().unwrap();
        let d = dyck_to_matching(&p);
        assert_eq!(d, diagram("(1,3)(2,5)(4,6)"));
        assert_eq!(p.peaks(), 2);
        assert_eq!(crate::stats::lr_pairs(&d), 2);

        assert_eq!(
            dyck_to_matching(&"UDUDUD".parse().unwrap()),
            diagram("(1,2)(3,4)(5,6)")
        );
        assert_eq!(
            dyck_to_matching(&"UUUDDD".parse().unwrap()),
            diagram("(1,4)(2,5)(3,6)")
        );
    }

    #[test]
    fn matching_to_dyck_examples() {
        assert_eq!(
            matching_to_dyck(&diagram("(1,3)(2,5)(4,6)"))
                .unwrap()
                .to_string(),
            "UUDUDD"
        );
        assert_eq!(
            matching_to_dyck(&diagram("(1,4)(2,3)")).unwrap_err(),
            Error::NestingPair {
                outer: (1, 4),
                inner: (2, 3)
            }
        );
    }

    #[test]
    fn dyck_round_trips_n5() {
        for p in DyckPath::enumerate_all(5) {
            assert_eq!(matching_to_dyck(&dyck_to_matching(&p)).unwrap(), p);
        }
        for d in enumerate(5, Arc::new(Nonnesting)) {
            assert_eq!(dyck_to_matching(&matching_to_dyck(&d).unwrap()), d);
        }
    }

    #[test]
    fn dyck_images_are_nonnesting_with_peak_lr_pairs() {
        for p in DyckPath::enumerate_all(6) {
            let d = dyck_to_matching(&p);
            assert_eq!(crate::stats::nesting_count(&d), 0);
            assert_eq!(crate::stats::lr_pairs(&d), p.peaks());
        }
    }
}
