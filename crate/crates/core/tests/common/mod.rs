#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use gwstar::{parse_graph, AlgebraElement, Backend, DiagonalElement, GeneratorSymbol, Graph, PathWord, Scalar};
use gwstar_oracle::{Gen, OElement, OGraph, Q};
use num_traits::Zero;

pub const FIXTURES: [&str; 6] = [
    "one_loop",
    "single_edge",
    "parallel_edges",
    "c3",
    "two_vertex_loops",
    "bouquet3",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.graph"))
}

pub fn fixture(name: &str) -> Arc<Graph> {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    Arc::new(parse_graph(&text).expect("fixture parses"))
}

pub fn to_oracle(g: &Graph) -> OGraph {
    OGraph {
        vertices: g.vertex_count(),
        edges: g
            .edges()
            .map(|e| (g.edge(e).initial.index(), g.edge(e).terminal.index()))
            .collect(),
    }
}

pub fn from_oracle(g: &OGraph) -> Arc<Graph> {
    Arc::new(parse_graph(&gwstar_oracle::to_graph_text(g)).unwrap())
}

pub fn word(g: &Graph, edges: &[usize]) -> PathWord {
    let ids: Vec<_> = edges.iter().map(|&e| g.edges().nth(e).unwrap()).collect();
    g.path(&ids).unwrap()
}

pub fn symbol(g: &Graph, gen: &Gen) -> GeneratorSymbol {
    match gen {
        Gen::Vertex(v) => GeneratorSymbol::creation(g.vertex_word(g.vertices().nth(*v).unwrap())),
        Gen::Create(w) => GeneratorSymbol::creation(word(g, w)),
        Gen::Annihilate(w) => GeneratorSymbol::annihilation(word(g, w)),
    }
}

pub fn scalar(x: &Q) -> Scalar {
    Scalar::new(x.clone(), Q::zero())
}

/// The library element for an oracle linear combination of words.
pub fn element(g: &Arc<Graph>, b: Backend, x: &OElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(g.clone(), b);
    for (c, w) in x {
        let mut term = AlgebraElement::identity(g.clone(), b);
        for gen in w {
            term = term
                .mul(&AlgebraElement::generator(g.clone(), b, &symbol(g, gen)).unwrap())
                .unwrap();
        }
        out = out.add(&term.scale(&scalar(c))).unwrap();
    }
    out
}

pub fn diagonal(g: &Graph, values: &[Q]) -> DiagonalElement {
    g.vertices().zip(values).map(|(v, x)| (v, scalar(x))).collect()
}
