//! Sequence-shape checkers (unimodality, log-concavity), the Kurtz-style
//! recurrence hypothesis test, and row sweeps over the triangles.

use num::{BigRational, BigUint, Zero};

use crate::error::{Error, Result};
use crate::triangles::Triangle;

/// Shape of one triangle row.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapeReport {
    /// Which sequence was checked, e.g. `T n=5`.
    pub label: String,
    pub unimodal: bool,
    /// Index range of the maximum, when unimodal.
    pub peak: Option<(usize, usize)>,
    pub log_concave: bool,
    /// First interior index violating c_i^2 >= c_{i-1} c_{i+1}, if any.
    pub first_violation: Option<usize>,
}

/// A sequence is unimodal when it rises (weakly) to a peak and then falls.
/// Returns the index range of the maximum alongside the verdict.
pub fn is_unimodal(seq: &[BigUint]) -> Result<(bool, Option<(usize, usize)>)> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut rise = 0;
    while rise + 1 < seq.len() && seq[rise] <= seq[rise + 1] {
        rise += 1;
    }
    let mut fall = rise;
    while fall + 1 < seq.len() && seq[fall] >= seq[fall + 1] {
        fall += 1;
    }
    if fall + 1 != seq.len() {
        return Ok((false, None));
    }
    let peak = &seq[rise];
    let mut lo = rise;
    while lo > 0 && &seq[lo - 1] == peak {
        lo -= 1;
    }
    let mut hi = rise;
    while hi + 1 < seq.len() && &seq[hi + 1] == peak {
        hi += 1;
    }
    Ok((true, Some((lo, hi))))
}

/// c_i^2 >= c_{i-1} c_{i+1} for every interior index, with exact arithmetic.
pub fn is_log_concave(seq: &[BigUint]) -> Result<(bool, Option<usize>)> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    for i in 1..seq.len().saturating_sub(1) {
        if &seq[i] * &seq[i] < &seq[i - 1] * &seq[i + 1] {
            return Ok((false, Some(i)));
        }
    }
    Ok((true, None))
}

/// Hypotheses of the log-concavity lemma for two-term triangle recurrences
/// R(n,k) = (a1 n + a2 k + a3) R(n-1,k) + (b1 n + b2 k + b3) R(n-1,k-1):
/// a1 >= 0, a1+a2 >= 0, a1+a2+a3 > 0, and the same for the b coefficients.
#[allow(clippy::too_many_arguments)]
pub fn kurtz_hypothesis_check(
    a1: &BigRational,
    a2: &BigRational,
    a3: &BigRational,
    b1: &BigRational,
    b2: &BigRational,
    b3: &BigRational,
) -> bool {
    let zero = BigRational::zero();
    for (x1, x2, x3) in [(a1, a2, a3), (b1, b2, b3)] {
        if x1 < &zero || x1 + x2 < zero || x1 + x2 + x3 <= zero {
            return false;
        }
    }
    true
}

/// One report per triangle row from `first_row()` to `n_max`.
///
/// The checker computes both shapes for every row; which of them is a theorem
/// and which an empirical finding is the caller's concern.
pub fn sweep(tri: &dyn Triangle, n_max: u32) -> Result<Vec<ShapeReport>> {
    (tri.first_row()..=n_max)
        .map(|n| row_report(tri, n))
        .collect()
}

fn row_report(tri: &dyn Triangle, n: u32) -> Result<ShapeReport> {
    let row = tri.row(n)?;
    let (unimodal, peak) = is_unimodal(&row)?;
    let (log_concave, first_violation) = is_log_concave(&row)?;
    Ok(ShapeReport {
        label: format!("{} n={}", tri.kind().name(), n),
        unimodal,
        peak,
        log_concave,
        first_violation,
    })
}

/// Human-readable table with one row per report.
pub fn render_reports(reports: &[ShapeReport]) -> String {
    let width = reports.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let peak = match r.peak {
            Some((lo, hi)) => format!("peak {lo}..{hi}"),
            None => "-".into(),
        };
        let violation = match r.first_violation {
            Some(i) => format!("violated at {i}"),
            None => "-".into(),
        };
        out.push_str(&format!(
            "{:<width$}  unimodal {}  {:<12}  log-concave {}  {}\n",
            r.label,
            if r.unimodal { "✓" } else { "✗" },
            peak,
            if r.log_concave { "✓" } else { "✗" },
            violation,
        ));
    }
    out
}

pub fn reports_to_json(reports: &[ShapeReport]) -> serde_json::Value {
    serde_json::Value::Array(
        reports
            .iter()
            .map(|r| {
                serde_json::json!({
                    "label": r.label,
                    "unimodal": r.unimodal,
                    "peak": r.peak.map(|(lo, hi)| serde_json::json!([lo, hi])),
                    "log_concave": r.log_concave,
                    "first_violation": r.first_violation,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn seq(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn r(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(
            is_unimodal(&seq(&[5, 6, 3, 1])).unwrap(),
            (true, Some((1, 1)))
        );
        assert_eq!(is_unimodal(&seq(&[1, 2, 1, 2])).unwrap(), (false, None));
        assert_eq!(is_unimodal(&seq(&[7])).unwrap(), (true, Some((0, 0))));
        assert_eq!(
            is_unimodal(&seq(&[1, 2, 2, 1])).unwrap(),
            (true, Some((1, 2)))
        );
        assert_eq!(is_unimodal(&seq(&[3, 2, 1])).unwrap(), (true, Some((0, 0))));
        assert_eq!(is_unimodal(&seq(&[1, 2, 3])).unwrap(), (true, Some((2, 2))));
        assert_eq!(is_unimodal(&[]).unwrap_err(), Error::EmptySequence);
    }

    #[test]
    fn log_concave_examples() {
        assert_eq!(
            is_log_concave(&seq(&[24, 58, 22, 1])).unwrap(),
            (true, None)
        );
        assert_eq!(is_log_concave(&seq(&[1, 1, 2])).unwrap(), (false, Some(1)));
        assert_eq!(
            is_log_concave(&seq(&[36, 41, 21, 6, 1])).unwrap(),
            (true, None)
        );
        assert_eq!(is_log_concave(&seq(&[5])).unwrap(), (true, None));
        assert_eq!(is_log_concave(&[]).unwrap_err(), Error::EmptySequence);
    }

    #[test]
    fn kurtz_examples() {
        assert!(kurtz_hypothesis_check(
            &r(1),
            &r(1),
            &r(-1),
            &r(1),
            &r(-1),
            &r(1)
        ));
        assert!(!kurtz_hypothesis_check(
            &r(0),
            &r(0),
            &r(0),
            &r(0),
            &r(0),
            &r(0)
        ));
        assert!(!kurtz_hypothesis_check(
            &r(-1),
            &r(0),
            &r(2),
            &r(1),
            &r(0),
            &r(1)
        ));
    }

    #[test]
    fn log_concave_positive_implies_unimodal() {
        // spot-check the implication the reports must never contradict
        for s in [
            seq(&[1, 4, 6, 4, 1]),
            seq(&[2, 2, 2]),
            seq(&[1, 10, 20, 10, 1]),
            seq(&[7, 5, 3, 2, 1]),
        ] {
            let (lc, _) = is_log_concave(&s).unwrap();
            let (uni, _) = is_unimodal(&s).unwrap();
            assert!(!lc || uni);
        }
    }

    #[test]
    fn sweep_renders() {
        let tri = crate::triangles::create(
            crate::triangles::TriangleKind::LrPair,
            &crate::triangles::TriangleConfig::default(),
        );
        let reports = sweep(tri.as_ref(), 4).unwrap();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.unimodal && r.log_concave));
        let text = render_reports(&reports);
        assert!(text.contains("T n=4"));
        assert!(text.contains('✓'));
        let json = reports_to_json(&reports);
        assert_eq!(json.as_array().unwrap().len(), 4);
    }
}
