//! Exact enumerative combinatorics for linear chord diagrams: perfect
//! matchings on [2n] represented as arc diagrams on a line.
//!
//! The crate has two independent computation routes that check each other:
//! exhaustive enumeration with pruning filters ([`enumerate`], [`stats`]),
//! and recurrence/closed-form number triangles with exact generating
//! functions ([`triangles`], [`series`]). The [`bijections`] module gives
//! executable forms of the structural maps connecting them, [`analysis`]
//! checks sequence shapes (unimodality, log-concavity), and [`verify`]
//! bundles the cross-checks into named suites behind one report format.
//!
//! Runtime-selected strategies are registered by name: enumeration filters
//! (`enumerate::parse_filter`), triangle kinds (`triangles::by_name`), and
//! verification suites (`verify::by_name`).
//!
//! All counts are arbitrary-precision integers and all series coefficients
//! exact rationals; nothing in this crate rounds.

pub mod analysis;
pub mod bijections;
pub mod diagram;
pub mod dyck;
pub mod enumerate;
pub mod error;
pub mod numbers;
pub mod series;
pub mod stats;
pub mod triangles;
pub mod verify;

pub use diagram::{Chord, ChordDiagram};
pub use dyck::DyckPath;
pub use error::{Error, Result};

use num::BigUint;

/// JSON encoding for arbitrary-precision counts: a plain number when the
/// value fits in u64, a decimal string beyond that.
pub(crate) fn json_uint(value: &BigUint) -> serde_json::Value {
    match u64::try_from(value) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(value.to_string()),
    }
}
