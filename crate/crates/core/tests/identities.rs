mod common;

use std::sync::Arc;

use common::{fixture, FIXTURES};
use gwstar::graph::{classify_edges, enumerate_paths, primitive_root};
use gwstar::repr::Monomial;
use gwstar::{AlgebraElement, Backend, GeneratorSymbol, Graph, PathWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FOCK: Backend = Backend::Fock { depth: 12 };

fn basic_loops(g: &Graph, max_len: usize) -> Vec<PathWord> {
    enumerate_paths(g, max_len)
        .into_iter()
        .filter(|w| !w.is_vertex() && w.is_loop() && primitive_root(w).unwrap().1 == 1)
        .collect()
}

fn vertex(g: &Arc<Graph>, b: Backend, w: &PathWord) -> AlgebraElement {
    AlgebraElement::monomial(g.clone(), b, Monomial::vertex(w.initial())).unwrap()
}

#[test]
fn loop_powers_are_compressed_by_their_vertex() {
    for name in FIXTURES {
        let g = fixture(name);
        for l in basic_loops(&g, 2) {
            for b in [Backend::Axiomatic, FOCK] {
                let a = AlgebraElement::semicircular(g.clone(), b, &l).unwrap();
                let v = vertex(&g, b, &l);
                for k in 1..=(12 / l.len()).min(6) {
                    let ak = a.pow(k).unwrap();
                    assert_eq!(
                        v.mul(&ak).unwrap().mul(&v).unwrap(),
                        ak,
                        "{name}: {} k={k}",
                        g.path_name(&l)
                    );
                }
            }
        }
    }
}

#[test]
fn non_loop_edges_are_nilpotent() {
    let mut checked = 0;
    for name in FIXTURES {
        let g = fixture(name);
        for e in classify_edges(&g).eloop_c {
            let w = g.edge_word(e);
            for b in [Backend::Axiomatic, FOCK] {
                let le = AlgebraElement::creation(g.clone(), b, &w).unwrap();
                for x in [le.clone(), le.adjoint()] {
                    for k in 2..=5 {
                        assert!(x.pow(k).unwrap().is_zero(), "{name}: {} k={k}", g.path_name(&w));
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn degree_one_span_is_closed() {
    // p(L_e, L_e*) reduces to span{L_v1, L_v2, L_e, L_e*, L_e L_e*} for a non-loop edge
    let g = fixture("single_edge");
    let e = g.parse_path("e").unwrap();
    for b in [Backend::Axiomatic, FOCK] {
        let x = AlgebraElement::creation(g.clone(), b, &e).unwrap();
        let y = x.adjoint();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let len = rng.gen_range(1..=6);
            let mut p = AlgebraElement::identity(g.clone(), b);
            for _ in 0..len {
                p = p.mul(if rng.gen_bool(0.5) { &x } else { &y }).unwrap();
            }
            assert!(p.max_term_len() <= 2);
        }
    }
}

/// Words in `L_{l^k}`, `L_{l^k}*` and vertex projections stay inside the span
/// of `L_{l^a} L_{l^b}*`, the algebra generated by `L_l` and `L_l*`.
#[test]
fn loop_power_generators_stay_in_the_basic_loop_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for name in FIXTURES {
        let g = fixture(name);
        for l in basic_loops(&g, 2) {
            let depth = 40;
            let b = Backend::Fock { depth };
            for _ in 0..20 {
                let len = rng.gen_range(1..=4);
                let mut word = Vec::new();
                for _ in 0..len {
                    let s = match rng.gen_range(0..3) {
                        0 => GeneratorSymbol::creation(g.vertex_word(l.initial())),
                        1 => GeneratorSymbol::creation(l.pow(rng.gen_range(1..=3)).unwrap()),
                        _ => GeneratorSymbol::annihilation(l.pow(rng.gen_range(1..=3)).unwrap()),
                    };
                    word.push(s);
                }
                let x = word.iter().fold(AlgebraElement::identity(g.clone(), b), |acc, s| {
                    acc.mul(&AlgebraElement::generator(g.clone(), b, s).unwrap()).unwrap()
                });
                for (m, _) in x.terms() {
                    let (p, q) = m.as_pair(&g).expect("fock normal forms have one block");
                    for side in [p, q] {
                        let is_power = side.is_vertex()
                            || (side.len() % l.len() == 0 && l.pow(side.len() / l.len()).unwrap() == side);
                        assert!(
                            is_power,
                            "{name}: {} outside the algebra of {}",
                            m.serialize(&g),
                            g.path_name(&l)
                        );
                    }
                }
            }
        }
    }
}
