//! Named verification suites cross-checking the enumeration engine, the
//! recurrence triangles, the generating functions, and the bijections
//! against one another. Each suite renders a deterministic report whose
//! bytes do not depend on the thread count.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{BigUint, One, Zero};

use crate::bijections::{
    dyck_to_matching, matching_to_dyck, rewrap, unimodal_injection, unwrap, MarkedDiagram,
};
use crate::diagram::ChordDiagram;
use crate::dyck::DyckPath;
use crate::enumerate::{self, AllDiagrams, ChordFilter, MinLength, Noncrossing, Nonnesting};
use crate::error::{Error, Result};
use crate::numbers::odd_double_factorial;
use crate::series;
use crate::stats::{self, short_chords, Statistic};
use crate::triangles::{
    LrPairTriangle, NarayanaTriangle, SecondOrderEulerianTriangle, ShortChordTriangle, Triangle,
};

/// Bounds for one verification run. Checks that enumerate diagrams are
/// clamped to `min(n_max, enum_cap)`; recurrence- and series-level checks
/// run to `n_max`.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub n_max: u32,
    pub enum_cap: u32,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 6,
            enum_cap: 8,
            threads: 1,
        }
    }
}

impl VerifyOptions {
    fn enum_max(&self) -> u32 {
        self.n_max.min(self.enum_cap)
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(detail: impl Into<String>) -> Self {
        Check {
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Check {
            passed: false,
            detail: detail.into(),
        }
    }

    /// Passes unless a counterexample was found.
    fn on(description: String, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Check::pass(description),
            Some(witness) => Check::fail(format!("{description}; first counterexample {witness}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: &'static str,
    pub params: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per check; byte-identical across thread counts.
    pub fn render(&self) -> String {
        let mut out = format!("suite {} ({})\n", self.suite, self.params);
        for c in &self.checks {
            out.push_str(if c.passed { "  [PASS] " } else { "  [FAIL] " });
            out.push_str(&c.detail);
            out.push('\n');
        }
        out.push_str(if self.passed() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        out
    }
}

/// A named batch of identity checks.
pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn run(&self, opts: &VerifyOptions) -> Report;
}

/// All registered suites, in stable order.
pub fn suites() -> Vec<Box<dyn Suite>> {
    vec![
        Box::new(RowSum),
        Box::new(Recurrence),
        Box::new(Egf),
        Box::new(Bijection),
        Box::new(Expectation),
        Box::new(NarayanaTransport),
        Box::new(Reversal),
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name()).collect()
}

pub fn by_name(name: &str) -> Result<Box<dyn Suite>> {
    suites()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or(Error::Unknown {
            what: "suite",
            name: name.into(),
            expected:
                "rowsum, recurrence, egf, bijection, expectation, narayana-transport, reversal",
        })
}

fn report(suite: &'static str, opts: &VerifyOptions, checks: Vec<Check>) -> Report {
    Report {
        suite,
        params: format!("nmax={}, cap={}", opts.n_max, opts.enum_cap),
        checks,
    }
}

fn all_filter() -> Arc<dyn ChordFilter> {
    Arc::new(AllDiagrams)
}

/// Dense histogram values 0..len compared against a triangle row placed at
/// its column origin.
fn histogram_matches_row(
    h: &stats::StatisticHistogram,
    row: &[BigUint],
    col_start: u32,
) -> Option<String> {
    let len = col_start as usize + row.len();
    let dense = h.dense(len.max(h.max_value().map_or(0, |v| v as usize + 1)));
    for (value, count) in dense.iter().enumerate() {
        let expected = if value >= col_start as usize && value - (col_start as usize) < row.len() {
            row[value - col_start as usize].clone()
        } else {
            BigUint::zero()
        };
        if *count != expected {
            return Some(format!(
                "value {value}: histogram {count} != triangle {expected}"
            ));
        }
    }
    None
}

/// Row sums of the short-chord triangle against the double factorials, and
/// the raw enumeration count against the same sequence.
struct RowSum;

impl Suite for RowSum {
    fn name(&self) -> &'static str {
        "rowsum"
    }

    fn summary(&self) -> &'static str {
        "triangle row sums and enumeration counts equal (2n-1)!!"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let l = ShortChordTriangle::new();

        let mut witness = None;
        for n in 0..=opts.n_max {
            let sum: BigUint = l.row(n).expect("row exists").iter().sum();
            let expect = odd_double_factorial(n);
            if sum != expect {
                witness = Some(format!("n={n}: {sum} != {expect}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("L row sums equal (2n-1)!! for n in 0..={}", opts.n_max),
            witness,
        ));

        let mut witness = None;
        for n in 0..=opts.enum_max() {
            let counted: BigUint =
                enumerate::map_split(n as usize, &all_filter(), opts.threads, |s| {
                    s.count_remaining()
                })
                .into_iter()
                .sum();
            let expect = odd_double_factorial(n);
            if counted != expect {
                witness = Some(format!("n={n}: {counted} != {expect}"));
                break;
            }
        }
        checks.push(Check::on(
            format!(
                "exhaustive enumeration count equals (2n-1)!! for n in 0..={}",
                opts.enum_max()
            ),
            witness,
        ));

        report("rowsum", opts, checks)
    }
}

/// Full-enumeration histograms against the recurrence and closed-form
/// triangles, including the fixed small-case distribution polynomials.
struct Recurrence;

impl Suite for Recurrence {
    fn name(&self) -> &'static str {
        "recurrence"
    }

    fn summary(&self) -> &'static str {
        "enumeration histograms equal the recurrence/closed-form triangles"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let top = opts.enum_max();
        let l = ShortChordTriangle::new();
        let t = LrPairTriangle::new();
        let narayana = NarayanaTriangle;

        let mut witness = None;
        for n in 0..=top {
            let h = stats::histogram_threads(
                n as usize,
                &all_filter(),
                Statistic::ShortChords { length: 1 },
                opts.threads,
            );
            if let Some(w) = histogram_matches_row(&h, &l.row(n).unwrap(), 0) {
                witness = Some(format!("n={n}, {w}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("sc(1) histogram over all diagrams equals L rows for n in 0..={top}"),
            witness,
        ));

        let mut witness = None;
        for n in 1..=top {
            let h = stats::histogram_threads(
                n as usize,
                &all_filter(),
                Statistic::LrPairs,
                opts.threads,
            );
            if let Some(w) = histogram_matches_row(&h, &t.row(n).unwrap(), 1) {
                witness = Some(format!("n={n}, {w}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("lr histogram over all diagrams equals T rows for n in 1..={top}"),
            witness,
        ));

        // distribution polynomials for minimum length 2 and 3 at small n
        let golden: [(u32, u32, &[u64]); 5] = [
            (2, 2, &[0, 0, 1]),
            (3, 2, &[1, 2, 2]),
            (4, 2, &[10, 14, 9, 2, 1]),
            (3, 3, &[0, 0, 0, 1]),
            (4, 3, &[1, 3, 4, 2]),
        ];
        let mut witness = None;
        for (n, k, coeffs) in golden {
            if n > top {
                continue;
            }
            let filter: Arc<dyn ChordFilter> = Arc::new(MinLength(k));
            let h = stats::histogram_threads(
                n as usize,
                &filter,
                Statistic::ShortChords { length: k },
                opts.threads,
            );
            let expect: Vec<BigUint> = coeffs.iter().map(|&c| BigUint::from(c)).collect();
            if let Some(w) = histogram_matches_row(&h, &expect, 0) {
                witness = Some(format!("n={n} k={k}, {w}"));
                break;
            }
        }
        checks.push(Check::on(
            "sc(k) histograms with minimum length k in {2,3} match the fixed polynomials".into(),
            witness,
        ));

        let mut witness = None;
        for n in 1..=top {
            let filter: Arc<dyn ChordFilter> = Arc::new(Noncrossing);
            let h = stats::histogram_threads(
                n as usize,
                &filter,
                Statistic::ShortChords { length: 1 },
                opts.threads,
            );
            if let Some(w) = histogram_matches_row(&h, &narayana.row(n).unwrap(), 1) {
                witness = Some(format!("n={n}, {w}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("noncrossing sc(1) histogram equals Narayana rows for n in 1..={top}"),
            witness,
        ));

        let mut witness = None;
        for n in 1..=top {
            let filter: Arc<dyn ChordFilter> = Arc::new(Nonnesting);
            let h = stats::histogram_threads(n as usize, &filter, Statistic::LrPairs, opts.threads);
            if let Some(w) = histogram_matches_row(&h, &narayana.row(n).unwrap(), 1) {
                witness = Some(format!("n={n}, {w}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("nonnesting lr histogram equals Narayana rows for n in 1..={top}"),
            witness,
        ));

        let mut witness = None;
        'outer: for k in 2..=3u32 {
            for n in k..=top {
                let filter: Arc<dyn ChordFilter> = Arc::new(MinLength(k));
                let h = stats::histogram_threads(
                    n as usize,
                    &filter,
                    Statistic::ShortChords { length: k },
                    opts.threads,
                );
                let total = h.total();
                let count = enumerate::count(n as usize, &filter);
                if total != count {
                    witness = Some(format!(
                        "n={n} k={k}: histogram total {total} != count {count}"
                    ));
                    break 'outer;
                }
            }
        }
        checks.push(Check::on(
            format!("histogram totals equal filtered counts for k in 2..=3, n up to {top}"),
            witness,
        ));

        report("recurrence", opts, checks)
    }
}

/// Column generating functions against the recurrence triangle, and the
/// column-weighted product against its closed form.
struct Egf;

impl Suite for Egf {
    fn name(&self) -> &'static str {
        "egf"
    }

    fn summary(&self) -> &'static str {
        "column EGF coefficients reproduce the short-chord triangle"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let order = opts.n_max as usize;
        let l = ShortChordTriangle::new();

        let mut witness = None;
        'cols: for s in 0..=6u32 {
            let col = series::egf_l_column(s, order);
            for n in 0..=order {
                let got = match series::egf_count(&col, n) {
                    Ok(v) => v,
                    Err(_) => {
                        witness = Some(format!(
                            "s={s} n={n}: coefficient is not a nonnegative integer"
                        ));
                        break 'cols;
                    }
                };
                let expect = if s <= n as u32 {
                    l.entry(n as u32, s).unwrap()
                } else {
                    BigUint::zero()
                };
                if got != expect {
                    witness = Some(format!("s={s} n={n}: {got} != {expect}"));
                    break 'cols;
                }
            }
        }
        checks.push(Check::on(
            format!("n! [t^n] column EGF equals L(n,s) for s in 0..=6, n in 0..={order}"),
            witness,
        ));

        let product = series::riordan_short_chord_total(order);
        let closed = series::double_factorial_egf(order);
        checks.push(Check::on(
            format!("column-weighted product equals 1/sqrt(1-2t) - 1 to order {order}"),
            (product != closed).then(|| format!("series differ: {product} vs {closed}")),
        ));

        checks.push(Check::on(
            "product series has constant term 0".into(),
            (!product.coeff(0).is_zero()).then(|| format!("constant term {}", product.coeff(0))),
        ));

        let mut witness = None;
        for n in 1..=order {
            let got = series::egf_count(&product, n).ok();
            let expect = odd_double_factorial(n as u32);
            if got.as_ref() != Some(&expect) {
                witness = Some(format!("n={n}: {got:?} != {expect}"));
                break;
            }
        }
        checks.push(Check::on(
            format!("n! [t^n] of the product equals (2n-1)!! for n in 1..={order}"),
            witness,
        ));

        report("egf", opts, checks)
    }
}

fn all_diagrams(n: u32) -> Vec<ChordDiagram> {
    enumerate::enumerate(n as usize, all_filter()).collect()
}

/// Round trips and exhaustive injectivity of all three constructions.
struct Bijection;

impl Suite for Bijection {
    fn name(&self) -> &'static str {
        "bijection"
    }

    fn summary(&self) -> &'static str {
        "unwrap/rewrap, the unimodality injections, and the Dyck maps"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let top = opts.enum_max();

        let mut round_trip = None;
        let mut coverage = None;
        for n in 1..=top {
            let diagrams = all_diagrams(n);
            let marks = MarkedDiagram::all_marks(diagrams.iter().cloned());
            let mut images = Vec::with_capacity(marks.len());
            for md in &marks {
                let image = unwrap(md);
                if round_trip.is_none() {
                    match rewrap(&image) {
                        Ok(back) if &back == md => {}
                        _ => {
                            round_trip = Some(format!(
                                "n={n}: rewrap(unwrap(({}, {}))) differs",
                                md.diagram(),
                                md.mark()
                            ))
                        }
                    }
                }
                images.push(image);
            }
            if round_trip.is_none() {
                for d in &diagrams {
                    let md = rewrap(d).expect("n >= 1");
                    if &unwrap(&md) != d {
                        round_trip = Some(format!("n={n}: unwrap(rewrap({d})) differs"));
                        break;
                    }
                }
            }
            if coverage.is_none() {
                images.sort();
                images.dedup();
                if images.len() != diagrams.len() || marks.len() != diagrams.len() {
                    coverage = Some(format!(
                        "n={n}: {} marked chords, {} distinct images, {} diagrams",
                        marks.len(),
                        images.len(),
                        diagrams.len()
                    ));
                }
            }
        }
        checks.push(Check::on(
            format!("rewrap inverts unwrap on every marked diagram for n in 1..={top}"),
            round_trip,
        ));
        checks.push(Check::on(
            format!("unwrap hits every diagram exactly once for n in 1..={top}"),
            coverage,
        ));

        let mut witness = None;
        'phi: for n in 1..=top {
            let diagrams = all_diagrams(n);
            for j in std::iter::once(0).chain(2..=n) {
                let class: Vec<&ChordDiagram> = diagrams
                    .iter()
                    .filter(|d| short_chords(d, 1) == j)
                    .collect();
                let mut images = Vec::with_capacity(class.len());
                let target = if j == 0 { 1 } else { j - 1 };
                for d in &class {
                    let image = unimodal_injection(d, j).expect("count matches class");
                    if short_chords(&image, 1) != target {
                        witness = Some(format!(
                            "n={n} j={j}: image of {d} has wrong short-chord count"
                        ));
                        break 'phi;
                    }
                    images.push(image);
                }
                images.sort();
                if images.windows(2).any(|w| w[0] == w[1]) {
                    witness = Some(format!("n={n} j={j}: injection collides"));
                    break 'phi;
                }
            }
        }
        checks.push(Check::on(
            format!("injections are injective with the right target class for n in 1..={top}"),
            witness,
        ));

        let mut witness = None;
        'dyck: for n in 0..=top {
            for p in DyckPath::enumerate_all(n as usize) {
                let d = dyck_to_matching(&p);
                if stats::nesting_count(&d) != 0 || stats::lr_pairs(&d) != p.peaks() {
                    witness = Some(format!("n={n}: path {p} maps badly"));
                    break 'dyck;
                }
                match matching_to_dyck(&d) {
                    Ok(back) if back == p => {}
                    _ => {
                        witness = Some(format!("n={n}: path {p} does not round-trip"));
                        break 'dyck;
                    }
                }
            }
            let filter: Arc<dyn ChordFilter> = Arc::new(Nonnesting);
            for d in enumerate::enumerate(n as usize, filter) {
                match matching_to_dyck(&d) {
                    Ok(p) if dyck_to_matching(&p) == d => {}
                    _ => {
                        witness = Some(format!("n={n}: diagram {d} does not round-trip"));
                        break 'dyck;
                    }
                }
            }
        }
        checks.push(Check::on(
            format!("Dyck maps round-trip in both directions for n in 0..={top}"),
            witness,
        ));

        report("bijection", opts, checks)
    }
}

/// Fixed unwrap table at n = 3: every (diagram, short chord) pair on the
/// left, its image on the right.
const UNWRAP_TABLE_N3: [(&str, &str, &str); 15] = [
    ("(1,6)(2,5)(3,4)", "(3,4)", "(1,4)(2,6)(3,5)"),
    ("(1,6)(2,3)(4,5)", "(2,3)", "(1,3)(2,6)(4,5)"),
    ("(1,6)(2,3)(4,5)", "(4,5)", "(1,5)(2,6)(3,4)"),
    ("(1,4)(2,3)(5,6)", "(2,3)", "(1,3)(2,4)(5,6)"),
    ("(1,4)(2,3)(5,6)", "(5,6)", "(1,6)(2,5)(3,4)"),
    ("(1,2)(3,6)(4,5)", "(1,2)", "(1,2)(3,6)(4,5)"),
    ("(1,2)(3,6)(4,5)", "(4,5)", "(1,5)(2,3)(4,6)"),
    ("(1,2)(3,4)(5,6)", "(1,2)", "(1,2)(3,4)(5,6)"),
    ("(1,2)(3,4)(5,6)", "(3,4)", "(1,4)(2,3)(5,6)"),
    ("(1,2)(3,4)(5,6)", "(5,6)", "(1,6)(2,3)(4,5)"),
    ("(1,3)(2,4)(5,6)", "(5,6)", "(1,6)(2,4)(3,5)"),
    ("(1,2)(3,5)(4,6)", "(1,2)", "(1,2)(3,5)(4,6)"),
    ("(1,5)(2,6)(3,4)", "(3,4)", "(1,4)(2,5)(3,6)"),
    ("(1,3)(2,6)(4,5)", "(4,5)", "(1,5)(2,4)(3,6)"),
    ("(1,5)(2,3)(4,6)", "(2,3)", "(1,3)(2,5)(4,6)"),
];

/// The expectation-one identity: total short chords equal total diagrams,
/// by recurrence, by enumeration, and against the fixed n = 3 table.
struct Expectation;

impl Suite for Expectation {
    fn name(&self) -> &'static str {
        "expectation"
    }

    fn summary(&self) -> &'static str {
        "total short chords over all diagrams equal (2n-1)!!"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let l = ShortChordTriangle::new();

        let mut witness = None;
        for n in 1..=opts.n_max {
            let row = l.row(n).unwrap();
            let sum: BigUint = row
                .iter()
                .enumerate()
                .map(|(s, v)| v * BigUint::from(s))
                .sum();
            let expect = odd_double_factorial(n);
            if sum != expect {
                witness = Some(format!("n={n}: {sum} != {expect}"));
                break;
            }
        }
        checks.push(Check::on(
            format!(
                "sum of s * L(n,s) equals (2n-1)!! for n in 1..={}",
                opts.n_max
            ),
            witness,
        ));

        let mut witness = None;
        for n in 1..=opts.enum_max() {
            let total: BigUint =
                enumerate::map_split(n as usize, &all_filter(), opts.threads, |stream| {
                    let mut acc = BigUint::zero();
                    stream.for_each_raw(|partner| {
                        acc += crate::stats::eval_partner(
                            Statistic::ShortChords { length: 1 },
                            partner,
                        );
                    });
                    acc
                })
                .into_iter()
                .sum();
            let expect = odd_double_factorial(n);
            if total != expect {
                witness = Some(format!("n={n}: {total} != {expect}"));
                break;
            }
        }
        checks.push(Check::on(
            format!(
                "enumerated short-chord total equals (2n-1)!! for n in 1..={}",
                opts.enum_max()
            ),
            witness,
        ));

        let mut witness = None;
        let mut images = BTreeMap::new();
        for (d, mark, expect) in UNWRAP_TABLE_N3 {
            let md = MarkedDiagram::new(d.parse().unwrap(), mark.parse().unwrap()).unwrap();
            let image = unwrap(&md);
            if image.to_string() != expect {
                witness = Some(format!("({d}, {mark}) -> {image}, table says {expect}"));
                break;
            }
            *images.entry(image).or_insert(0u32) += 1;
        }
        if witness.is_none() {
            if images.len() != 15 || images.values().any(|&c| c != 1) {
                witness = Some("table images do not cover the 15 diagrams exactly once".into());
            } else {
                let marks = MarkedDiagram::all_marks(all_diagrams(3)).len();
                if marks != 15 {
                    witness = Some(format!("expected 15 marked chords at n=3, found {marks}"));
                }
            }
        }
        checks.push(Check::on(
            "unwrap reproduces the fixed n=3 table: 15 marked chords onto 15 diagrams".into(),
            witness,
        ));

        report("expectation", opts, checks)
    }
}

/// Dyck-peak, nonnesting-LR, and Narayana distributions coincide.
struct NarayanaTransport;

impl Suite for NarayanaTransport {
    fn name(&self) -> &'static str {
        "narayana-transport"
    }

    fn summary(&self) -> &'static str {
        "Dyck peaks, nonnesting LR pairs, and Narayana rows agree"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let mut checks = Vec::new();
        let top = opts.enum_max();
        let narayana = NarayanaTriangle;

        let mut witness = None;
        for n in 1..=top {
            let row = narayana.row(n).unwrap();

            let mut peaks: BTreeMap<u32, BigUint> = BTreeMap::new();
            for p in DyckPath::enumerate_all(n as usize) {
                *peaks.entry(p.peaks()).or_default() += BigUint::one();
            }
            let peak_row: Vec<BigUint> = (1..=n)
                .map(|k| peaks.get(&k).cloned().unwrap_or_default())
                .collect();

            let filter: Arc<dyn ChordFilter> = Arc::new(Nonnesting);
            let h = stats::histogram_threads(n as usize, &filter, Statistic::LrPairs, opts.threads);
            let lr_row: Vec<BigUint> = (1..=n).map(|k| h.get(k)).collect();

            if peaks.contains_key(&0) || h.get(0) != BigUint::zero() {
                witness = Some(format!("n={n}: zero-peak or zero-lr mass present"));
                break;
            }
            if peak_row != row {
                witness = Some(format!("n={n}: peak histogram differs from Narayana row"));
                break;
            }
            if lr_row != row {
                witness = Some(format!("n={n}: lr histogram differs from Narayana row"));
                break;
            }
        }
        checks.push(Check::on(
            format!("peak = lr = Narayana distributions for n in 1..={top}"),
            witness,
        ));

        report("narayana-transport", opts, checks)
    }
}

/// T is the row reversal of E, entry by entry.
struct Reversal;

impl Suite for Reversal {
    fn name(&self) -> &'static str {
        "reversal"
    }

    fn summary(&self) -> &'static str {
        "T(n,k) equals E(n,n-k)"
    }

    fn run(&self, opts: &VerifyOptions) -> Report {
        let t = LrPairTriangle::new();
        let e = SecondOrderEulerianTriangle::new();
        let mut witness = None;
        'rows: for n in 1..=opts.n_max {
            let t_row = t.row(n).unwrap();
            let mut e_row = e.row(n).unwrap();
            e_row.reverse();
            for k in 1..=n as usize {
                if t_row[k - 1] != e_row[k - 1] {
                    witness = Some(format!(
                        "n={n} k={k}: T gives {}, reversed E gives {}",
                        t_row[k - 1],
                        e_row[k - 1]
                    ));
                    break 'rows;
                }
            }
        }
        let checks = vec![Check::on(
            format!("row reversal identity holds for n in 1..={}", opts.n_max),
            witness,
        )];
        report("reversal", opts, checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n_max: u32) -> VerifyOptions {
        VerifyOptions {
            n_max,
            enum_cap: 6,
            threads: 1,
        }
    }

    #[test]
    fn all_suites_pass_small() {
        for suite in suites() {
            let report = suite.run(&opts(6));
            assert!(
                report.passed(),
                "{} failed:\n{}",
                suite.name(),
                report.render()
            );
        }
    }

    #[test]
    fn reports_are_thread_invariant() {
        for suite in suites() {
            let base = suite.run(&opts(5)).render();
            for threads in [2usize, 8] {
                let other = suite
                    .run(&VerifyOptions {
                        n_max: 5,
                        enum_cap: 6,
                        threads,
                    })
                    .render();
                assert_eq!(base, other, "suite {}", suite.name());
            }
        }
    }

    #[test]
    fn by_name_lookup() {
        for name in suite_names() {
            assert_eq!(by_name(name).unwrap().name(), name);
        }
        assert!(by_name("everything").is_err());
    }

    #[test]
    fn render_marks_failures() {
        let r = Report {
            suite: "demo",
            params: "nmax=1, cap=1".into(),
            checks: vec![
                Check::pass("fine"),
                Check::fail("broken; first counterexample x"),
            ],
        };
        assert!(!r.passed());
        let text = r.render();
        assert!(text.contains("[PASS] fine"));
        assert!(text.contains("[FAIL] broken"));
        assert!(text.ends_with("result: FAIL\n"));
    }
}
