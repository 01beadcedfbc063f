//! Property tests for the structural invariants: canonical round trips,
//! the pairwise trichotomy, histogram mass conservation, and the shape
//! checkers' internal consistency.

use std::sync::Arc;

use num::{BigRational, BigUint, Zero};
use proptest::prelude::*;

use chordlab::analysis::{is_log_concave, is_unimodal};
use chordlab::diagram::{classify, ChordDiagram, PairKind};
use chordlab::enumerate::{
    self, enumerate, AllDiagrams, ChordFilter, MinLength, Noncrossing, Nonnesting,
};
use chordlab::series::{exp_series, RationalSeries};
use chordlab::stats::{histogram, Statistic};

/// A uniformly random matching on [2n]: repeatedly pair the smallest free
/// point with a random free point.
fn arb_diagram(max_n: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<proptest::sample::Index>(), n).prop_map(move |picks| {
            let mut free: Vec<u32> = (1..=2 * n as u32).collect();
            let mut pairs = Vec::with_capacity(n);
            for pick in picks {
                let a = free.remove(0);
                let b = free.remove(pick.index(free.len()));
                pairs.push((a, b));
            }
            ChordDiagram::from_chords(&pairs, n).expect("pairing covers all points")
        })
    })
}

proptest! {
    #[test]
    fn text_parse_round_trip(d in arb_diagram(9)) {
        let text = d.to_string();
        let back: ChordDiagram = text.parse().unwrap();
        prop_assert_eq!(&back, &d);
    }

    #[test]
    fn json_parse_round_trip(d in arb_diagram(9)) {
        let back = ChordDiagram::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&back, &d);
    }

    #[test]
    fn from_chords_of_chords_is_identity(d in arb_diagram(9)) {
        let pairs: Vec<(u32, u32)> = d.chords().iter().map(|c| (c.start(), c.end())).collect();
        let back = ChordDiagram::from_chords(&pairs, d.n()).unwrap();
        prop_assert_eq!(&back, &d);
    }

    #[test]
    fn involution_holds(d in arb_diagram(9)) {
        for p in 1..=d.points() {
            let q = d.partner(p);
            prop_assert_ne!(q, p);
            prop_assert_eq!(d.partner(q), p);
        }
    }

    #[test]
    fn chord_pair_trichotomy(d in arb_diagram(9)) {
        let chords = d.chords();
        for (i, &a) in chords.iter().enumerate() {
            for &b in &chords[i + 1..] {
                // classify never fails on disjoint chords and picks one case
                let kind = classify(a, b).unwrap();
                let swapped = classify(b, a).unwrap();
                prop_assert_eq!(kind, swapped);
                let cases = [PairKind::Crossing, PairKind::Nesting, PairKind::Sequential];
                prop_assert_eq!(cases.iter().filter(|&&k| k == kind).count(), 1);
            }
        }
    }

    #[test]
    fn log_concave_positive_implies_unimodal(seq in proptest::collection::vec(1u64..200, 1..12)) {
        let seq: Vec<BigUint> = seq.into_iter().map(BigUint::from).collect();
        let (lc, _) = is_log_concave(&seq).unwrap();
        let (uni, _) = is_unimodal(&seq).unwrap();
        prop_assert!(!lc || uni, "log-concave positive sequence must be unimodal");
    }

    #[test]
    fn exp_turns_sums_into_products(
        a in proptest::collection::vec((-9i64..=9, 1i64..=9), 1..12),
        b in proptest::collection::vec((-9i64..=9, 1i64..=9), 1..12),
    ) {
        // series with zero constant term from the rational pairs
        let build = |v: &[(i64, i64)]| {
            let mut coeffs = vec![BigRational::zero()];
            coeffs.extend(v.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())));
            RationalSeries::from_coeffs(coeffs)
        };
        let a = build(&a);
        let b = build(&b);
        let order = a.order().min(b.order());
        let sum_exp = exp_series(&a.add(&b), order).unwrap();
        let product = exp_series(&a, order).unwrap().mul(&exp_series(&b, order).unwrap());
        prop_assert_eq!(sum_exp, product);
    }
}

#[test]
fn histogram_mass_equals_count() {
    let filters: Vec<Arc<dyn ChordFilter>> = vec![
        Arc::new(AllDiagrams),
        Arc::new(MinLength(2)),
        Arc::new(MinLength(3)),
        Arc::new(Noncrossing),
        Arc::new(Nonnesting),
    ];
    for filter in &filters {
        for n in 0..=6usize {
            for stat in [Statistic::ShortChords { length: 1 }, Statistic::LrPairs] {
                let h = histogram(n, filter, stat);
                assert_eq!(
                    h.total(),
                    enumerate::count(n, filter),
                    "n={n} filter={}",
                    filter.name()
                );
            }
        }
    }
}

#[test]
fn diagram_values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ChordDiagram>();
    assert_send_sync::<chordlab::dyck::DyckPath>();
    assert_send_sync::<chordlab::stats::StatisticHistogram>();
}

#[test]
fn every_yield_satisfies_diagram_invariants_and_filter() {
    let filters: Vec<Arc<dyn ChordFilter>> = vec![
        Arc::new(AllDiagrams),
        Arc::new(MinLength(2)),
        Arc::new(Noncrossing),
        Arc::new(Nonnesting),
    ];
    for filter in &filters {
        for n in 0..=5usize {
            for d in enumerate(n, filter.clone()) {
                assert_eq!(d.n(), n);
                assert!(filter.accepts(&d));
                for p in 1..=d.points() {
                    assert_eq!(d.partner(d.partner(p)), p);
                }
            }
        }
    }
}
