//! Checkers and reporters built on the cumulant engine. Every report
//! serializes to JSON and renders as aligned plain-text tables.

mod audit;
mod decompose;
mod freeness;
mod rdiagonal;
mod semicircular;
pub mod table;

pub use audit::{audit_depth, claims_audit, AuditReport, AuditRow, BackendValue};
pub use decompose::{
    decompose, BasicLoop, DecompositionReport, DiagonalBlock, EdgeBlock, FinerView, LOOP_LABEL, NONLOOP_LABEL,
};
pub use freeness::{check_freeness, FreenessReport, Prediction};
pub use rdiagonal::{check_r_diagonal, PatternValue, RDiagonalReport};
pub use semicircular::{
    build_r_diagonal_system, build_semicircular_system, check_semicircular, OrderValue, SemicircularReport,
};

use crate::algebra::AlgebraElement;

/// Fock depth that makes every product of `order` factors drawn from
/// `elements` exact.
pub fn required_depth(elements: &[AlgebraElement], order: usize) -> usize {
    let longest = elements.iter().map(AlgebraElement::max_term_len).max().unwrap_or(0);
    (order * longest).max(1)
}
