use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::AlgebraElement;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::repr::{Backend, Monomial};
use crate::scalar::{parse_rational, rational_to_string, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub backend: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    pub terms: Vec<TermJson>,
}

/// One term `c · L[p]L*[q]`; axiomatic zig-zags carry further blocks in `tail`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub p: String,
    pub q: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tail: Vec<BlockJson>,
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub p: String,
    pub q: String,
}

pub(super) fn to_json(a: &AlgebraElement) -> ElementJson {
    let g = a.graph();
    let terms = a
        .terms()
        .map(|(m, c)| {
            let blocks = m.blocks(g);
            let (p, q) = &blocks[0];
            TermJson {
                p: g.path_name(p),
                q: g.path_name(q),
                tail: blocks[1..]
                    .iter()
                    .map(|(p, q)| BlockJson {
                        p: g.path_name(p),
                        q: g.path_name(q),
                    })
                    .collect(),
                re: rational_to_string(c.re()),
                im: rational_to_string(c.im()),
            }
        })
        .collect();
    ElementJson {
        backend: a.backend().kind().to_string(),
        depth: a.backend().depth(),
        terms,
    }
}

fn parse_backend(name: &str, depth: Option<usize>) -> Result<Backend> {
    match (name, depth) {
        ("axiomatic", None) => Ok(Backend::Axiomatic),
        ("fock", Some(depth)) => Ok(Backend::Fock { depth }),
        ("fock", None) => Err(Error::Json("fock backend needs a depth".into())),
        _ => Err(Error::Json(format!("unknown backend `{name}`"))),
    }
}

pub(super) fn from_json(graph: Arc<Graph>, value: &ElementJson) -> Result<AlgebraElement> {
    let backend = parse_backend(&value.backend, value.depth)?;
    let mut out = AlgebraElement::zero(graph.clone(), backend);
    for t in &value.terms {
        let mut blocks = vec![(graph.parse_path(&t.p)?, graph.parse_path(&t.q)?)];
        for b in &t.tail {
            blocks.push((graph.parse_path(&b.p)?, graph.parse_path(&b.q)?));
        }
        let m = Monomial::from_blocks(&graph, &blocks)?;
        let c = Scalar::new(parse_rational(&t.re)?, parse_rational(&t.im)?);
        let term = AlgebraElement::monomial(graph.clone(), backend, m)?;
        out = out.add(&term.scale(&c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_paths, parse_graph};
    use crate::repr::GeneratorSymbol;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn graph() -> Arc<Graph> {
        Arc::new(parse_graph("vertices: a b\nedge x: a -> b\nedge y: b -> a\nedge p: a -> a").unwrap())
    }

    #[test]
    fn schema_shape() {
        let g = Arc::new(parse_graph("vertices: v1 v2\nedge e: v1 -> v2").unwrap());
        let e = g.parse_path("e").unwrap();
        let a = AlgebraElement::creation(g.clone(), Backend::Fock { depth: 3 }, &e)
            .unwrap()
            .scale(&Scalar::ratio(-1, 2));
        let s = serde_json::to_string(&a.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"backend":"fock","depth":3,"terms":[{"p":"e","q":"@v2","re":"-1/2","im":"0/1"}]}"#
        );
    }

    #[test]
    fn rejects_bad_backend() {
        let g = graph();
        let v = ElementJson {
            backend: "fock".into(),
            depth: None,
            terms: vec![],
        };
        assert!(AlgebraElement::from_json(g, &v).is_err());
    }

    proptest! {
        #[test]
        fn json_round_trip_is_bit_exact(
            picks in proptest::collection::vec((0usize..16, 0usize..16, any::<bool>(), -5i64..6, 1i64..4, -3i64..4), 0..6),
            axiomatic in any::<bool>(),
        ) {
            let g = graph();
            let backend = if axiomatic { Backend::Axiomatic } else { Backend::Fock { depth: 8 } };
            let words = enumerate_paths(&g, 2);
            let mut a = AlgebraElement::zero(g.clone(), backend);
            for (i, j, star, num, den, im) in picks {
                let s1 = GeneratorSymbol { word: words[i % words.len()].clone(), starred: star };
                let s2 = GeneratorSymbol { word: words[j % words.len()].clone(), starred: !star };
                let t = AlgebraElement::generator(g.clone(), backend, &s1).unwrap()
                    .mul(&AlgebraElement::generator(g.clone(), backend, &s2).unwrap()).unwrap();
                let c = Scalar::new(BigRational::new(num.into(), den.into()), BigRational::from_integer(im.into()));
                a = a.add(&t.scale(&c)).unwrap();
            }
            let text = serde_json::to_string(&a.to_json()).unwrap();
            let parsed: ElementJson = serde_json::from_str(&text).unwrap();
            let back = AlgebraElement::from_json(g.clone(), &parsed).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        }
    }
}
