use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::table::Table;
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::graph::{classify_edges, enumerate_paths, primitive_root, Graph};
use crate::repr::Backend;

pub const LOOP_LABEL: &str = "(W*({L_l}), tr) ⊗ (D_G, 1)";
pub const NONLOOP_LABEL: &str = "(W*({L_w}, D_w), E_w) ⊗ (D_G, 1)";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalBlock {
    pub vertices: Vec<String>,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeBlock {
    pub edge: String,
    /// `loop` or `nonloop`.
    pub kind: String,
    pub initial: String,
    pub terminal: String,
    pub d_w: Vec<String>,
    pub label: String,
    /// Free group factor annotation for loop edges, e.g. `L(F_2)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicLoop {
    pub word: String,
    pub length: usize,
    pub factorization: Vec<String>,
    /// `L_{e_1}···L_{e_k} = L_l` holds exactly.
    pub generated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinerView {
    pub loop_length_bound: usize,
    pub basic_loops: Vec<BasicLoop>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub graph: String,
    pub block_count: usize,
    pub diagonal_block: DiagonalBlock,
    pub edge_blocks: Vec<EdgeBlock>,
    pub finer_view: FinerView,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

impl DecompositionReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "graph: {}\nblocks: {}\ndiagonal block: {} on {{{}}}\n\n",
            self.graph,
            self.block_count,
            self.diagonal_block.label,
            self.diagonal_block.vertices.join(", ")
        );
        let mut t = Table::new(["edge", "kind", "from", "to", "D_w", "structure", "hint"]);
        for b in &self.edge_blocks {
            t.row([
                b.edge.clone(),
                b.kind.clone(),
                b.initial.clone(),
                b.terminal.clone(),
                format!("{{{}}}", b.d_w.join(", ")),
                b.label.clone(),
                b.hint.clone().unwrap_or_else(|| "-".into()),
            ]);
        }
        s.push_str(&t.render());
        s.push_str(&format!(
            "\nbasic loops up to length {}:\n",
            self.finer_view.loop_length_bound
        ));
        let mut t = Table::new(["loop", "length", "edge factorization", "generated"]);
        for l in &self.finer_view.basic_loops {
            t.row([
                l.word.clone(),
                l.length.to_string(),
                l.factorization.join(" · "),
                if l.generated { "yes" } else { "no" }.to_string(),
            ]);
        }
        s.push_str(&t.render());
        s.push_str("\nnotes:\n");
        for n in &self.notes {
            s.push_str(&format!("- {n}\n"));
        }
        if let Some(c) = &self.caveat {
            s.push_str(&format!("caveat: {c}\n"));
        }
        s
    }
}

/// The diagonal block plus one building block per edge, and the basic loops
/// of length at most `loop_length_bound` factored into edge generators.
pub fn decompose(g: &Arc<Graph>, loop_length_bound: usize) -> Result<DecompositionReport> {
    if loop_length_bound == 0 {
        return Err(Error::InvalidArgument("loop length bound must be at least 1".into()));
    }
    let classes = classify_edges(g);
    let mut loops_at: BTreeMap<_, usize> = BTreeMap::new();
    for &e in &classes.eloop {
        *loops_at.entry(g.edge(e).initial).or_default() += 1;
    }
    let edge_blocks: Vec<EdgeBlock> = g
        .edges()
        .map(|e| {
            let edge = g.edge(e);
            let (from, to) = (
                g.vertex_name(edge.initial).to_string(),
                g.vertex_name(edge.terminal).to_string(),
            );
            if edge.is_loop() {
                EdgeBlock {
                    edge: edge.id.clone(),
                    kind: "loop".into(),
                    initial: from.clone(),
                    terminal: to,
                    d_w: vec![from],
                    label: LOOP_LABEL.into(),
                    hint: Some(format!("L(F_{})", loops_at[&edge.initial])),
                }
            } else {
                EdgeBlock {
                    edge: edge.id.clone(),
                    kind: "nonloop".into(),
                    initial: from.clone(),
                    terminal: to.clone(),
                    d_w: vec![from, to],
                    label: NONLOOP_LABEL.into(),
                    hint: None,
                }
            }
        })
        .collect();

    let mut basic_loops = Vec::new();
    for w in enumerate_paths(g, loop_length_bound) {
        if w.is_vertex() || !w.is_loop() || primitive_root(&w)?.1 != 1 {
            continue;
        }
        let backend = Backend::Fock { depth: w.len() };
        let mut product = AlgebraElement::identity(g.clone(), backend);
        for &e in w.edges() {
            product = product.mul(&AlgebraElement::creation(g.clone(), backend, &g.edge_word(e))?)?;
        }
        let generated = product == AlgebraElement::creation(g.clone(), backend, &w)?;
        basic_loops.push(BasicLoop {
            word: g.path_name(&w),
            length: w.len(),
            factorization: w.edges().iter().map(|&e| format!("L_{}", g.edge_name(e))).collect(),
            generated,
        });
    }

    let names = |es: &[crate::graph::EdgeId]| {
        if es.is_empty() {
            "none".to_string()
        } else {
            es.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>().join(", ")
        }
    };
    let mut notes = vec![
        format!("loop edges: {}", names(&classes.eloop)),
        format!("non-loop edges: {}", names(&classes.eloop_c)),
        "each power l^k of a basic loop generates a subalgebra of W*({L_l}, D_G), so powers are collapsed into their basic loop".to_string(),
    ];
    if g.edges().any(|e| g.edge(e).is_loop()) || basic_loops.iter().any(|l| l.length > 1) {
        notes.push(format!(
            "the loop family is infinite; only basic loops of length at most {loop_length_bound} are listed"
        ));
    }
    if !loops_at.is_empty() {
        notes.push(
            "free group factor hints count the loop edges at a vertex and are annotations, not verified isomorphisms"
                .into(),
        );
    }
    let hinted: Vec<usize> = loops_at.values().copied().collect();
    let caveat = (hinted.len() >= 2).then(|| {
        let parts: Vec<String> = hinted.iter().map(|k| format!("L(F_{k})")).collect();
        format!(
            "{} ≠ L(F_{}): free group factors at different vertices do not merge",
            parts.join(" *_{D_G} "),
            hinted.iter().sum::<usize>()
        )
    });

    Ok(DecompositionReport {
        graph: g.to_string(),
        block_count: edge_blocks.len() + 1,
        diagonal_block: DiagonalBlock {
            vertices: g.vertices().map(|v| g.vertex_name(v).to_string()).collect(),
            label: format!("Δ_{}", g.vertex_count()),
        },
        edge_blocks,
        finer_view: FinerView {
            loop_length_bound,
            basic_loops,
        },
        notes,
        caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn circular_graph() {
        let g = Arc::new(
            parse_graph("vertices: v1 v2 v3\nedge e1: v1 -> v2\nedge e2: v2 -> v3\nedge e3: v3 -> v1").unwrap(),
        );
        let r = decompose(&g, 3).unwrap();
        assert_eq!(r.block_count, 4);
        assert_eq!(r.diagonal_block.label, "Δ_3");
        assert!(r
            .edge_blocks
            .iter()
            .all(|b| b.kind == "nonloop" && b.d_w.len() == 2 && b.hint.is_none()));
        let words: Vec<&str> = r.finer_view.basic_loops.iter().map(|l| l.word.as_str()).collect();
        assert_eq!(words, ["e1.e2.e3", "e2.e3.e1", "e3.e1.e2"]);
        assert!(r.finer_view.basic_loops.iter().all(|l| l.generated));
        assert!(r.caveat.is_none());
    }

    #[test]
    fn two_vertices_with_loops() {
        let g = Arc::new(
            parse_graph(
                "vertices: v1 v2\nedge l1: v1 -> v1\nedge l2: v1 -> v1\nedge m1: v2 -> v2\nedge m2: v2 -> v2\nedge m3: v2 -> v2\nedge e: v1 -> v2",
            )
            .unwrap(),
        );
        let r = decompose(&g, 2).unwrap();
        assert_eq!(r.block_count, 7);
        assert_eq!(r.diagonal_block.label, "Δ_2");
        let hints: Vec<Option<&str>> = r.edge_blocks.iter().map(|b| b.hint.as_deref()).collect();
        assert_eq!(
            hints,
            [
                Some("L(F_2)"),
                Some("L(F_2)"),
                Some("L(F_3)"),
                Some("L(F_3)"),
                Some("L(F_3)"),
                None
            ]
        );
        assert!(r.caveat.unwrap().starts_with("L(F_2) *_{D_G} L(F_3) ≠ L(F_5)"));
        // l1.l1 is a proper power and is not listed
        assert!(r.finer_view.basic_loops.iter().all(|l| l.word != "l1.l1"));
        assert!(r.finer_view.basic_loops.iter().any(|l| l.word == "l1.l2"));
    }

    #[test]
    fn bouquet_and_bound() {
        let g = Arc::new(parse_graph("vertices: v\nedge a: v -> v\nedge b: v -> v\nedge c: v -> v").unwrap());
        let r = decompose(&g, 1).unwrap();
        assert_eq!(r.diagonal_block.label, "Δ_1");
        assert!(r
            .edge_blocks
            .iter()
            .all(|b| b.hint.as_deref() == Some("L(F_3)") && b.d_w == ["v"]));
        assert!(decompose(&g, 0).is_err());
    }
}
