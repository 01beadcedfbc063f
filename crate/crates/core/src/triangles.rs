//! The five number triangles, built from recurrences and closed forms with
//! arbitrary-precision entries, independent of the enumeration engine so the
//! two can cross-check each other.
//!
//! Kinds and index conventions:
//!
//! | kind       | first row | columns   | source                              |
//! |------------|-----------|-----------|-------------------------------------|
//! | `L`        | n = 0     | s from 0  | diagrams with s chords of length 1  |
//! | `T`        | n = 1     | k from 1  | diagrams with k LR pairs            |
//! | `E`        | n = 1     | k from 0  | second-order Eulerian numbers       |
//! | `narayana` | n = 1     | k from 1  | closed form                         |
//! | `sullivan` | n = 1     | k from 1  | diagrams with all chords length >= k (enumeration-backed, capped) |

use std::sync::Mutex;

use num::{BigUint, One, Zero};

use crate::enumerate::{self, ChordFilter, MinLength};
use crate::error::{Error, Result};
use crate::numbers::{binomial, factorial};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleKind {
    ShortChord,
    LrPair,
    SecondOrderEulerian,
    Narayana,
    MinLengthCount,
}

impl TriangleKind {
    pub fn all() -> [TriangleKind; 5] {
        [
            TriangleKind::ShortChord,
            TriangleKind::LrPair,
            TriangleKind::SecondOrderEulerian,
            TriangleKind::Narayana,
            TriangleKind::MinLengthCount,
        ]
    }

    /// CLI name.
    pub fn name(&self) -> &'static str {
        match self {
            TriangleKind::ShortChord => "L",
            TriangleKind::LrPair => "T",
            TriangleKind::SecondOrderEulerian => "E",
            TriangleKind::Narayana => "narayana",
            TriangleKind::MinLengthCount => "sullivan",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "L" | "l" => Ok(TriangleKind::ShortChord),
            "T" | "t" => Ok(TriangleKind::LrPair),
            "E" | "e" => Ok(TriangleKind::SecondOrderEulerian),
            "narayana" | "N" => Ok(TriangleKind::Narayana),
            "sullivan" | "S" => Ok(TriangleKind::MinLengthCount),
            _ => Err(Error::Unknown {
                what: "triangle",
                name: name.into(),
                expected: "L, T, E, narayana, sullivan",
            }),
        }
    }
}

/// Limits for enumeration-backed entries.
#[derive(Clone, Copy, Debug)]
pub struct TriangleConfig {
    /// Largest n the `sullivan` triangle may be asked for.
    pub enumeration_cap: u32,
}

impl Default for TriangleConfig {
    fn default() -> Self {
        TriangleConfig { enumeration_cap: 8 }
    }
}

/// One triangle of nonnegative integers, queried by row or entry.
///
/// Implementations memoize rows bottom-up behind a lock, so concurrent
/// readers only ever see completed rows and results are deterministic
/// regardless of thread count.
pub trait Triangle: Send + Sync {
    fn kind(&self) -> TriangleKind;

    /// Index of the first row.
    fn first_row(&self) -> u32;

    /// Index of the first column of each row.
    fn col_start(&self) -> u32;

    /// Number of entries in row n.
    fn row_len(&self, n: u32) -> usize;

    /// Largest row this triangle can produce, if limited.
    fn row_cap(&self) -> Option<u32> {
        None
    }

    /// Row n as a dense vector, columns `col_start()` onward.
    fn row(&self, n: u32) -> Result<Vec<BigUint>>;

    /// Entry (n, k) in the per-kind column convention.
    fn entry(&self, n: u32, k: u32) -> Result<BigUint> {
        if n < self.first_row() {
            return Err(Error::RowOutOfRange {
                n,
                min: self.first_row(),
            });
        }
        let lo = self.col_start();
        let hi = lo + self.row_len(n) as u32 - 1;
        if k < lo || k > hi {
            return Err(Error::ColumnOutOfRange { n, k, lo, hi });
        }
        Ok(self.row(n)?[(k - lo) as usize].clone())
    }
}

/// Builds the triangle for a kind. `cfg` only affects enumeration-backed kinds.
pub fn create(kind: TriangleKind, cfg: &TriangleConfig) -> Box<dyn Triangle> {
    match kind {
        TriangleKind::ShortChord => Box::new(ShortChordTriangle::new()),
        TriangleKind::LrPair => Box::new(LrPairTriangle::new()),
        TriangleKind::SecondOrderEulerian => Box::new(SecondOrderEulerianTriangle::new()),
        TriangleKind::Narayana => Box::new(NarayanaTriangle),
        TriangleKind::MinLengthCount => Box::new(MinLengthCountTriangle::new(cfg.enumeration_cap)),
    }
}

pub fn by_name(name: &str, cfg: &TriangleConfig) -> Result<Box<dyn Triangle>> {
    Ok(create(TriangleKind::parse(name)?, cfg))
}

/// Diagrams with n chords and exactly s chords of length one.
/// Recurrence: L(n,s) = L(n-1,s-1) + (2n-2-s) L(n-1,s) + (s+1) L(n-1,s+1),
/// with L(0,0) = 1 and zero outside 0 <= s <= n.
pub struct ShortChordTriangle {
    rows: Mutex<Vec<Vec<BigUint>>>,
}

impl ShortChordTriangle {
    pub fn new() -> Self {
        ShortChordTriangle {
            rows: Mutex::new(vec![vec![BigUint::one()]]),
        }
    }
}

impl Default for ShortChordTriangle {
    fn default() -> Self {
        Self::new()
    }
}

impl Triangle for ShortChordTriangle {
    fn kind(&self) -> TriangleKind {
        TriangleKind::ShortChord
    }

    fn first_row(&self) -> u32 {
        0
    }

    fn col_start(&self) -> u32 {
        0
    }

    fn row_len(&self, n: u32) -> usize {
        n as usize + 1
    }

    fn row(&self, n: u32) -> Result<Vec<BigUint>> {
        let mut rows = self.rows.lock().unwrap();
        while rows.len() <= n as usize {
            let m = rows.len() as u64; // row being built
            let prev = rows.last().unwrap();
            let mut row = Vec::with_capacity(m as usize + 1);
            for s in 0..=m {
                let mut v = BigUint::zero();
                if s >= 1 {
                    v += &prev[s as usize - 1];
                }
                if s < m {
                    // coefficient 2m-2-s >= m-1 >= 0 whenever the term exists
                    v += &prev[s as usize] * (2 * m - 2 - s);
                }
                if s < m - 1 {
                    v += &prev[s as usize + 1] * (s + 1);
                }
                row.push(v);
            }
            rows.push(row);
        }
        Ok(rows[n as usize].clone())
    }
}

/// Diagrams with n chords and exactly k LR pairs: the row reversal of the
/// second-order Eulerian triangle.
/// Recurrence: T(n,k) = (n-k+1) T(n-1,k-1) + (n-1+k) T(n-1,k), T(1,1) = 1.
pub struct LrPairTriangle {
    rows: Mutex<Vec<Vec<BigUint>>>,
}

impl LrPairTriangle {
    pub fn new() -> Self {
        LrPairTriangle {
            rows: Mutex::new(vec![vec![BigUint::one()]]),
        }
    }
}

impl Default for LrPairTriangle {
    fn default() -> Self {
        Self::new()
    }
}

impl Triangle for LrPairTriangle {
    fn kind(&self) -> TriangleKind {
        TriangleKind::LrPair
    }

    fn first_row(&self) -> u32 {
        1
    }

    fn col_start(&self) -> u32 {
        1
    }

    fn row_len(&self, n: u32) -> usize {
        n as usize
    }

    fn row(&self, n: u32) -> Result<Vec<BigUint>> {
        if n < 1 {
            return Err(Error::RowOutOfRange { n, min: 1 });
        }
        let mut rows = self.rows.lock().unwrap();
        while rows.len() < n as usize {
            let m = rows.len() as u64 + 1; // row being built, 1-based
            let prev = rows.last().unwrap(); // columns 1..=m-1 at offsets 0..
            let mut row = Vec::with_capacity(m as usize);
            for k in 1..=m {
                let mut v = BigUint::zero();
                if k >= 2 {
                    v += &prev[k as usize - 2] * (m - k + 1);
                }
                if k < m {
                    v += &prev[k as usize - 1] * (m - 1 + k);
                }
                row.push(v);
            }
            rows.push(row);
        }
        Ok(rows[n as usize - 1].clone())
    }
}

/// Second-order Eulerian numbers.
/// Recurrence: E(n,k) = (k+1) E(n-1,k) + (2n-k-1) E(n-1,k-1), E(n,0) = 1.
pub struct SecondOrderEulerianTriangle {
    rows: Mutex<Vec<Vec<BigUint>>>,
}

impl SecondOrderEulerianTriangle {
    pub fn new() -> Self {
        SecondOrderEulerianTriangle {
            rows: Mutex::new(vec![vec![BigUint::one()]]),
        }
    }
}

impl Default for SecondOrderEulerianTriangle {
    fn default() -> Self {
        Self::new()
    }
}

impl Triangle for SecondOrderEulerianTriangle {
    fn kind(&self) -> TriangleKind {
        TriangleKind::SecondOrderEulerian
    }

    fn first_row(&self) -> u32 {
        1
    }

    fn col_start(&self) -> u32 {
        0
    }

    fn row_len(&self, n: u32) -> usize {
        n as usize
    }

    fn row(&self, n: u32) -> Result<Vec<BigUint>> {
        if n < 1 {
            return Err(Error::RowOutOfRange { n, min: 1 });
        }
        let mut rows = self.rows.lock().unwrap();
        while rows.len() < n as usize {
            let m = rows.len() as u64 + 1; // row being built
            let prev = rows.last().unwrap(); // columns 0..=m-2
            let mut row = Vec::with_capacity(m as usize);
            for k in 0..m {
                let mut v = BigUint::zero();
                if k == 0 {
                    v = BigUint::one();
                } else {
                    if k <= m - 2 {
                        v += &prev[k as usize] * (k + 1);
                    }
                    v += &prev[k as usize - 1] * (2 * m - k - 1);
                }
                row.push(v);
            }
            rows.push(row);
        }
        Ok(rows[n as usize - 1].clone())
    }
}

/// Narayana numbers N(n,k) = C(n-1,k-1) C(n,k-1) / k, by exact closed form.
pub struct NarayanaTriangle;

impl Triangle for NarayanaTriangle {
    fn kind(&self) -> TriangleKind {
        TriangleKind::Narayana
    }

    fn first_row(&self) -> u32 {
        1
    }

    fn col_start(&self) -> u32 {
        1
    }

    fn row_len(&self, n: u32) -> usize {
        n as usize
    }

    fn row(&self, n: u32) -> Result<Vec<BigUint>> {
        if n < 1 {
            return Err(Error::RowOutOfRange { n, min: 1 });
        }
        Ok((1..=n).map(|k| narayana_value(n, k)).collect())
    }
}

fn narayana_value(n: u32, k: u32) -> BigUint {
    let num = binomial(n - 1, k - 1) * binomial(n, k - 1);
    let den = BigUint::from(k);
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Narayana division must be exact: ({n},{k})");
    q
}

/// Diagrams with n chords, all of length at least k. No recurrence is known;
/// entries are enumeration counts, memoized, with n capped.
pub struct MinLengthCountTriangle {
    cap: u32,
    rows: Mutex<Vec<Option<Vec<BigUint>>>>,
}

impl MinLengthCountTriangle {
    pub fn new(cap: u32) -> Self {
        MinLengthCountTriangle {
            cap,
            rows: Mutex::new(Vec::new()),
        }
    }
}

impl Triangle for MinLengthCountTriangle {
    fn kind(&self) -> TriangleKind {
        TriangleKind::MinLengthCount
    }

    fn first_row(&self) -> u32 {
        1
    }

    fn col_start(&self) -> u32 {
        1
    }

    fn row_len(&self, n: u32) -> usize {
        n as usize
    }

    fn row_cap(&self) -> Option<u32> {
        Some(self.cap)
    }

    fn row(&self, n: u32) -> Result<Vec<BigUint>> {
        if n < 1 {
            return Err(Error::RowOutOfRange { n, min: 1 });
        }
        if n > self.cap {
            return Err(Error::ResourceCap { n, cap: self.cap });
        }
        let mut rows = self.rows.lock().unwrap();
        if rows.len() < n as usize {
            rows.resize(n as usize, None);
        }
        let slot = &mut rows[n as usize - 1];
        if slot.is_none() {
            let row = (1..=n)
                .map(|k| {
                    let filter: std::sync::Arc<dyn ChordFilter> = std::sync::Arc::new(MinLength(k));
                    enumerate::count(n as usize, &filter)
                })
                .collect();
            *slot = Some(row);
        }
        Ok(slot.clone().unwrap())
    }
}

/// L(n,s) extended by zero outside the triangle, the shape used in the
/// generating-function identities.
pub fn short_chord_count(n: u32, s: u32) -> BigUint {
    if s > n {
        return BigUint::zero();
    }
    ShortChordTriangle::new().entry(n, s).expect("in range")
}

/// T(n,1) boundary value, n!.
pub fn lr_pair_boundary(n: u32) -> BigUint {
    factorial(n)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
    BFile,
}

impl TableFormat {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "bfile" => Ok(TableFormat::BFile),
            _ => Err(Error::Unknown {
                what: "format",
                name: name.into(),
                expected: "text, csv, json, bfile",
            }),
        }
    }
}

/// Renders rows `first_row()..=n_max`.
///
/// - text: one aligned row per n.
/// - csv: header `n,<k>,<k+1>,...`; empty cells where the row is shorter.
/// - json: `{"kind", "first_row", "col_start", "rows": [[...], ...]}`.
/// - bfile: `index value` lines in row-major reading order; the index starts
///   at 0 for `L` (whose first row is n = 0) and at 1 for the other kinds.
pub fn export(tri: &dyn Triangle, n_max: u32, format: TableFormat) -> Result<String> {
    let first = tri.first_row();
    if n_max < first {
        return Err(Error::RowOutOfRange {
            n: n_max,
            min: first,
        });
    }
    let rows: Vec<Vec<BigUint>> = (first..=n_max).map(|n| tri.row(n)).collect::<Result<_>>()?;
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            let width = rows
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            let nwidth = n_max.to_string().len();
            for (i, row) in rows.iter().enumerate() {
                let n = first + i as u32;
                out.push_str(&format!("{n:>nwidth$} |"));
                for v in row {
                    out.push_str(&format!(" {v:>width$}"));
                }
                out.push('\n');
            }
        }
        TableFormat::Csv => {
            let cols = tri.row_len(n_max);
            out.push('n');
            for c in 0..cols as u32 {
                out.push_str(&format!(",{}", tri.col_start() + c));
            }
            out.push('\n');
            for (i, row) in rows.iter().enumerate() {
                let n = first + i as u32;
                out.push_str(&n.to_string());
                for c in 0..cols {
                    out.push(',');
                    if let Some(v) = row.get(c) {
                        out.push_str(&v.to_string());
                    }
                }
                out.push('\n');
            }
        }
        TableFormat::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| serde_json::Value::Array(row.iter().map(crate::json_uint).collect()))
                .collect();
            let v = serde_json::json!({
                "kind": tri.kind().name(),
                "first_row": first,
                "col_start": tri.col_start(),
                "rows": rows_json,
            });
            out.push_str(&v.to_string());
            out.push('\n');
        }
        TableFormat::BFile => {
            let mut index = u64::from(first.min(1));
            for row in &rows {
                for v in row {
                    out.push_str(&format!("{index} {v}\n"));
                    index += 1;
                }
            }
        }
    }
    Ok(out)
}
