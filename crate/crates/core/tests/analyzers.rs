mod common;

use std::sync::Arc;

use common::{fixture, FIXTURES};
use gwstar::analyzers::{check_freeness, check_r_diagonal, decompose, LOOP_LABEL, NONLOOP_LABEL};
use gwstar::graph::EdgeId;
use gwstar::{AlgebraElement, Backend, Graph, PathWord};

const FOCK: Backend = Backend::Fock { depth: 12 };

/// Word pairs drawn from parallel edges, edge vs loop, loop vs its square,
/// and distinct loop edges at one vertex.
fn pair_matrix(g: &Graph) -> Vec<(PathWord, PathWord)> {
    let edges: Vec<EdgeId> = g.edges().collect();
    let mut pairs = Vec::new();
    for (i, &x) in edges.iter().enumerate() {
        let ex = g.edge(x);
        if ex.is_loop() {
            pairs.push((g.edge_word(x), g.edge_word(x).pow(2).unwrap()));
        }
        for &y in &edges[i + 1..] {
            let ey = g.edge(y);
            let parallel = !ex.is_loop() && ex.initial == ey.initial && ex.terminal == ey.terminal;
            let mixed = ex.is_loop() != ey.is_loop();
            let same_vertex_loops = ex.is_loop() && ey.is_loop() && ex.initial == ey.initial;
            if parallel || mixed || same_vertex_loops {
                pairs.push((g.edge_word(x), g.edge_word(y)));
            }
        }
    }
    pairs
}

fn creation(g: &Arc<Graph>, w: &PathWord) -> AlgebraElement {
    AlgebraElement::creation(g.clone(), FOCK, w).unwrap()
}

#[test]
fn freeness_agrees_with_diagram_distinctness_on_fixtures() {
    let mut checked = 0;
    for name in FIXTURES {
        let g = fixture(name);
        for (x, y) in pair_matrix(&g) {
            let r = check_freeness(&[creation(&g, &x)], &[creation(&g, &y)], 6, FOCK).unwrap();
            assert_eq!(
                r.agreement,
                "agree",
                "{name}: {} vs {}",
                g.path_name(&x),
                g.path_name(&y)
            );
            checked += 1;
        }
    }
    assert!(checked >= 15, "{checked}");
}

#[test]
fn parallel_edges_have_no_mixed_cumulants_to_order_six() {
    let g = fixture("parallel_edges");
    let e1 = creation(&g, &g.parse_path("e1").unwrap());
    let e2 = creation(&g, &g.parse_path("e2").unwrap());
    let r = check_freeness(&[e1], &[e2], 6, FOCK).unwrap();
    assert!(r.free_to_order);
    assert!(r.scan.nonzero.is_empty());
    assert!(r.scan.tuples_checked > 4000);
}

#[test]
fn single_edge_is_r_diagonal() {
    let g = fixture("single_edge");
    let e = g.parse_path("e").unwrap();
    let r = check_r_diagonal(&g, &e, 6, Backend::Fock { depth: 6 }).unwrap();
    assert!(r.verdict);
    let found: Vec<(&str, String)> = r
        .nonzero
        .iter()
        .map(|p| (p.pattern.as_str(), p.value.to_string()))
        .collect();
    assert_eq!(found, [("k_2(L*[e], L[e])", "L_v2".to_string())]);

    let r = check_r_diagonal(&g, &e, 2, Backend::Axiomatic).unwrap();
    assert!(r.verdict);
    let found: Vec<(&str, String)> = r
        .nonzero
        .iter()
        .map(|p| (p.pattern.as_str(), p.value.to_string()))
        .collect();
    assert_eq!(
        found,
        [
            ("k_2(L[e], L*[e])", "L_v1".to_string()),
            ("k_2(L*[e], L[e])", "L_v2".to_string())
        ]
    );

    // the groupoid generator is unitary-like: higher alternating cumulants survive
    let r = check_r_diagonal(&g, &e, 6, Backend::Axiomatic).unwrap();
    assert!(r.verdict);
    assert!(r.nonzero.iter().all(|p| p.alternating));
    let k4: Vec<String> = r
        .nonzero
        .iter()
        .filter(|p| p.slots.len() == 4)
        .map(|p| p.value.to_string())
        .collect();
    assert_eq!(k4, ["-1·L_v1", "-1·L_v2"]);
}

#[test]
fn decomposition_block_structure() {
    for name in FIXTURES {
        let g = fixture(name);
        let r = decompose(&g, 3).unwrap();
        assert_eq!(r.block_count, g.edge_count() + 1);
        assert_eq!(r.edge_blocks.len(), g.edge_count());
        assert_eq!(r.diagonal_block.label, format!("Δ_{}", g.vertex_count()));
        for b in &r.edge_blocks {
            match b.kind.as_str() {
                "loop" => {
                    assert_eq!(b.d_w.len(), 1);
                    assert_eq!(b.label, LOOP_LABEL);
                    assert!(b.hint.is_some());
                }
                _ => {
                    assert_eq!(b.d_w.len(), 2);
                    assert_eq!(b.label, NONLOOP_LABEL);
                }
            }
        }
        assert!(r.finer_view.basic_loops.iter().all(|l| l.generated));
    }
}

#[test]
fn decomposition_hints() {
    let r = decompose(&fixture("c3"), 3).unwrap();
    assert_eq!(r.block_count, 4);
    assert!(r.finer_view.basic_loops.iter().any(|l| l.word == "e1.e2.e3"));

    let r = decompose(&fixture("two_vertex_loops"), 2).unwrap();
    let mut hints: Vec<&str> = r.edge_blocks.iter().filter_map(|b| b.hint.as_deref()).collect();
    hints.dedup();
    assert_eq!(hints, ["L(F_2)", "L(F_3)"]);
    assert_eq!(r.block_count, 7);

    let r = decompose(&fixture("bouquet3"), 2).unwrap();
    assert!(r.edge_blocks.iter().all(|b| b.hint.as_deref() == Some("L(F_3)")));
}
