use std::sync::Arc;

use serde::Serialize;

use super::table::Table;
use crate::algebra::{AlgebraElement, NamedDiagonal};
use crate::cumulant::{CumulantEngine, ENGINE_BOUND};
use crate::error::{Error, Result};
use crate::graph::{diagram_distinct, Graph, PathWord};
use crate::repr::Backend;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderValue {
    pub order: usize,
    pub value: NamedDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemicircularReport {
    pub element: String,
    pub backend: String,
    pub max_checked_order: usize,
    pub k2: NamedDiagonal,
    pub cumulants: Vec<OrderValue>,
    /// Nonzero `k_n` with `n != 2`.
    pub offenders: Vec<OrderValue>,
    pub verdict: bool,
}

impl SemicircularReport {
    pub fn to_text(&self) -> String {
        let mut t = Table::new(["n", "k_n(a, ..., a)"]);
        for c in &self.cumulants {
            t.row([c.order.to_string(), c.value.to_string()]);
        }
        let verdict = if self.verdict {
            format!("semicircular to order {}", self.max_checked_order)
        } else {
            let first = &self.offenders[0];
            format!("not semicircular: k_{} = {}", first.order, first.value)
        };
        format!(
            "element: {}\nbackend: {}\nmax checked order: {}\n\n{}\nk_2: {}\nverdict: {}\n",
            self.element,
            self.backend,
            self.max_checked_order,
            t.render(),
            self.k2,
            verdict
        )
    }
}

/// `a_j = L_{l_j} + L_{l_j}*` for pairwise diagram-distinct loops.
pub fn build_semicircular_system(g: &Arc<Graph>, loops: &[PathWord], backend: Backend) -> Result<Vec<AlgebraElement>> {
    for w in loops {
        g.check_word(w)?;
        if w.is_vertex() || !w.is_loop() {
            return Err(Error::NotALoop(g.path_name(w)));
        }
    }
    check_pairwise_distinct(g, loops)?;
    loops
        .iter()
        .map(|w| AlgebraElement::semicircular(g.clone(), backend, w))
        .collect()
}

/// The generators `L_w` of pairwise diagram-distinct non-vertex words.
pub fn build_r_diagonal_system(g: &Arc<Graph>, words: &[PathWord], backend: Backend) -> Result<Vec<AlgebraElement>> {
    for w in words {
        g.check_word(w)?;
        if w.is_vertex() {
            return Err(Error::VertexWord(g.path_name(w)));
        }
    }
    check_pairwise_distinct(g, words)?;
    words
        .iter()
        .map(|w| AlgebraElement::creation(g.clone(), backend, w))
        .collect()
}

fn check_pairwise_distinct(g: &Graph, words: &[PathWord]) -> Result<()> {
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            if !diagram_distinct(x, y)? {
                return Err(Error::NotDiagramDistinct(g.path_name(x), g.path_name(y)));
            }
        }
    }
    Ok(())
}

/// `k_n(a, ..., a)` for `n = 1..=max_order`; semicircular iff only `k_2`
/// survives.
pub fn check_semicircular(a: &AlgebraElement, max_order: usize, backend: Backend) -> Result<SemicircularReport> {
    if max_order == 0 || max_order > ENGINE_BOUND {
        return Err(Error::ArityBound {
            n: max_order,
            bound: ENGINE_BOUND,
        });
    }
    let a = a.with_backend(backend)?;
    if !a.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    let g = a.graph().clone();
    let mut engine = CumulantEngine::new(g.clone(), backend);
    let mut cumulants = Vec::new();
    for n in 1..=max_order {
        let k = engine.cumulant(&vec![a.clone(); n])?;
        cumulants.push(OrderValue {
            order: n,
            value: k.named(&g),
        });
    }
    let offenders: Vec<OrderValue> = cumulants
        .iter()
        .filter(|c| c.order != 2 && !c.value.is_zero())
        .cloned()
        .collect();
    let k2 = cumulants
        .iter()
        .find(|c| c.order == 2)
        .map(|c| c.value.clone())
        .unwrap_or(NamedDiagonal(Vec::new()));
    Ok(SemicircularReport {
        element: a.to_string(),
        backend: backend.to_string(),
        max_checked_order: max_order,
        k2,
        verdict: offenders.is_empty(),
        cumulants,
        offenders,
    })
}
