use std::sync::Arc;

use serde::Serialize;

use super::table::Table;
use crate::algebra::{AlgebraElement, NamedDiagonal};
use crate::cumulant::{CumulantEngine, ENGINE_BOUND};
use crate::error::{Error, Result};
use crate::graph::{Graph, PathWord};
use crate::repr::Backend;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternValue {
    /// E.g. `k_2(L*[e], L[e])`.
    pub pattern: String,
    /// `a` or `a*` per slot.
    pub slots: Vec<String>,
    pub alternating: bool,
    pub value: NamedDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RDiagonalReport {
    pub word: String,
    pub backend: String,
    pub max_checked_order: usize,
    pub tuples_checked: usize,
    pub nonzero: Vec<PatternValue>,
    pub verdict: bool,
}

impl RDiagonalReport {
    pub fn to_text(&self) -> String {
        let mut t = Table::new(["pattern", "alternating", "value"]);
        for p in &self.nonzero {
            t.row([p.pattern.clone(), yes_no(p.alternating).into(), p.value.to_string()]);
        }
        let verdict = if self.verdict {
            format!("R-diagonal to order {}", self.max_checked_order)
        } else {
            "not R-diagonal: a non-alternating cumulant survives".to_string()
        };
        format!(
            "word: {}\nbackend: {}\nmax checked order: {}\ntuples checked: {}\n\nnonzero cumulants over {{L_w, L_w*}}:\n{}\nverdict: {}\n",
            self.word,
            self.backend,
            self.max_checked_order,
            self.tuples_checked,
            t.render(),
            verdict
        )
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `n` even and the slots alternate between `a` and `a*`.
fn is_alternating(starred: &[bool]) -> bool {
    starred.len().is_multiple_of(2) && starred.windows(2).all(|w| w[0] != w[1])
}

/// Scans every tuple over `{L_w, L_w*}` of order `1..=max_order`.
pub fn check_r_diagonal(g: &Arc<Graph>, w: &PathWord, max_order: usize, backend: Backend) -> Result<RDiagonalReport> {
    g.check_word(w)?;
    if w.is_vertex() {
        return Err(Error::VertexWord(g.path_name(w)));
    }
    if max_order == 0 || max_order > ENGINE_BOUND {
        return Err(Error::ArityBound {
            n: max_order,
            bound: ENGINE_BOUND,
        });
    }
    if !max_order.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("max order {max_order} is odd")));
    }
    let create = AlgebraElement::creation(g.clone(), backend, w)?;
    let annihilate = AlgebraElement::annihilation(g.clone(), backend, w)?;
    let mut engine = CumulantEngine::new(g.clone(), backend);
    let mut nonzero = Vec::new();
    let mut tuples_checked = 0;
    for n in 1..=max_order {
        for mask in 0..1usize << n {
            // bit i set = slot i is starred; slot 1 is the most significant
            let starred: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
            let args: Vec<AlgebraElement> = starred
                .iter()
                .map(|&s| if s { annihilate.clone() } else { create.clone() })
                .collect();
            let k = engine.cumulant(&args)?;
            tuples_checked += 1;
            if k.is_zero() {
                continue;
            }
            let names: Vec<String> = args.iter().map(ToString::to_string).collect();
            nonzero.push(PatternValue {
                pattern: format!("k_{n}({})", names.join(", ")),
                slots: starred
                    .iter()
                    .map(|&s| if s { "a*" } else { "a" }.to_string())
                    .collect(),
                alternating: is_alternating(&starred),
                value: k.named(g),
            });
        }
    }
    Ok(RDiagonalReport {
        word: g.path_name(w),
        backend: backend.to_string(),
        max_checked_order: max_order,
        tuples_checked,
        verdict: nonzero.iter().all(|p| p.alternating),
        nonzero,
    })
}
