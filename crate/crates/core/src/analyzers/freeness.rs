use std::collections::BTreeSet;

use serde::Serialize;

use super::table::Table;
use crate::algebra::AlgebraElement;
use crate::cumulant::{mixed_cumulant_scan, MixedScanReport};
use crate::error::{Error, Result};
use crate::graph::{diagram_distinct, PathWord};
use crate::repr::Backend;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    /// Every path of one support is diagram-distinct from every path of the other.
    pub diagram_distinct: bool,
    /// First pair that is not diagram-distinct, if any.
    pub witness: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub backend: String,
    pub max_checked_order: usize,
    pub scan: MixedScanReport,
    pub free_to_order: bool,
    pub prediction: Prediction,
    /// `agree` or `disagree`.
    pub agreement: String,
}

impl FreenessReport {
    pub fn agrees(&self) -> bool {
        self.agreement == "agree"
    }

    pub fn to_text(&self) -> String {
        let mut t = Table::new(["order", "tuple", "value"]);
        for m in &self.scan.nonzero {
            t.row([m.order.to_string(), m.tuple.join(", "), m.value.to_string()]);
        }
        let prediction = match &self.prediction.witness {
            None => "diagram-distinct (free)".to_string(),
            Some((x, y)) => format!("not diagram-distinct: {x} vs {y} (not free)"),
        };
        format!(
            "family A: {}\nfamily B: {}\nbackend: {}\nmax checked order: {}\nmixed tuples checked: {}\n\nnonzero mixed cumulants:\n{}\nscan: {}\nprediction: {}\nagreement: {}\n",
            self.scan.family_a.join(", "),
            self.scan.family_b.join(", "),
            self.backend,
            self.max_checked_order,
            self.scan.tuples_checked,
            t.render(),
            if self.free_to_order {
                format!("free to order {}", self.max_checked_order)
            } else {
                "not free".to_string()
            },
            prediction,
            self.agreement
        )
    }
}

fn path_support(family: &[AlgebraElement]) -> BTreeSet<PathWord> {
    family.iter().flat_map(|a| a.support().path_support).collect()
}

/// Mixed-cumulant scan of two families against the diagram-distinctness
/// prediction on their path supports.
pub fn check_freeness(
    a: &[AlgebraElement],
    b: &[AlgebraElement],
    max_order: usize,
    backend: Backend,
) -> Result<FreenessReport> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("both families must be nonempty".into()));
    }
    let a: Vec<AlgebraElement> = a.iter().map(|x| x.with_backend(backend)).collect::<Result<_>>()?;
    let b: Vec<AlgebraElement> = b.iter().map(|x| x.with_backend(backend)).collect::<Result<_>>()?;
    let g = a[0].graph().clone();
    let scan = mixed_cumulant_scan(&a, &b, max_order)?;
    let mut witness = None;
    'outer: for x in &path_support(&a) {
        for y in &path_support(&b) {
            if !diagram_distinct(x, y)? {
                witness = Some((g.path_name(x), g.path_name(y)));
                break 'outer;
            }
        }
    }
    let prediction = Prediction {
        diagram_distinct: witness.is_none(),
        witness,
    };
    let free_to_order = scan.is_free();
    Ok(FreenessReport {
        backend: backend.to_string(),
        max_checked_order: max_order,
        agreement: if free_to_order == prediction.diagram_distinct {
            "agree"
        } else {
            "disagree"
        }
        .to_string(),
        free_to_order,
        prediction,
        scan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, Graph};
    use std::sync::Arc;

    const FOCK: Backend = Backend::Fock { depth: 12 };

    #[test]
    fn parallel_edges_are_free() {
        let g = Arc::new(parse_graph("vertices: v1 v2\nedge e1: v1 -> v2\nedge e2: v1 -> v2").unwrap());
        let l = |w: &str| AlgebraElement::creation(g.clone(), FOCK, &g.parse_path(w).unwrap()).unwrap();
        let r = check_freeness(&[l("e1")], &[l("e2")], 4, FOCK).unwrap();
        assert!(r.free_to_order);
        assert!(r.prediction.diagram_distinct);
        assert!(r.agrees());

        let r = check_freeness(&[l("e1")], &[l("e1")], 2, FOCK).unwrap();
        assert!(!r.free_to_order);
        assert!(!r.prediction.diagram_distinct);
        assert!(r.agrees());
    }

    #[test]
    fn loop_and_its_square() {
        let g: Arc<Graph> = Arc::new(parse_graph("vertices: v\nedge l: v -> v").unwrap());
        let a = |w: &str| AlgebraElement::semicircular(g.clone(), FOCK, &g.parse_path(w).unwrap()).unwrap();
        let r = check_freeness(&[a("l")], &[a("l.l")], 3, FOCK).unwrap();
        assert!(!r.free_to_order);
        assert_eq!(r.prediction.witness, Some(("l".into(), "l.l".into())));
        assert!(r.agrees());
        assert!(r.to_text().contains("agreement: agree"));
    }

    #[test]
    fn empty_family_rejected() {
        let g: Arc<Graph> = Arc::new(parse_graph("vertices: v\nedge l: v -> v").unwrap());
        let a = AlgebraElement::semicircular(g.clone(), FOCK, &g.parse_path("l").unwrap()).unwrap();
        assert!(check_freeness(&[a], &[], 2, FOCK).is_err());
    }
}
