//! Finite linear combinations of monomials with exact scalars, the
//! conditional expectation onto the diagonal, and support extraction.

mod diagonal;
mod json;

pub use diagonal::{DiagonalElement, DiagonalTerm, NamedDiagonal};
pub use json::{BlockJson, ElementJson, TermJson};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, PathWord, VertexId};
use crate::repr::{multiply, reduce_word, Backend, GeneratorSymbol, Monomial};
use crate::scalar::Scalar;

/// An element `Σ c_m · m` over one graph, reduced under one backend.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    graph: Arc<Graph>,
    backend: Backend,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.graph.id() == other.graph.id() && self.backend == other.backend && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(graph: Arc<Graph>, backend: Backend) -> Self {
        AlgebraElement {
            graph,
            backend,
            terms: BTreeMap::new(),
        }
    }

    /// `Σ_v L_v`.
    pub fn identity(graph: Arc<Graph>, backend: Backend) -> Self {
        let d = DiagonalElement::identity(&graph);
        Self::from_diagonal(graph, backend, &d)
    }

    pub fn from_diagonal(graph: Arc<Graph>, backend: Backend, d: &DiagonalElement) -> Self {
        let mut out = Self::zero(graph, backend);
        for (v, c) in d.iter() {
            out.add_term(Monomial::vertex(v), c.clone());
        }
        out
    }

    /// Single normal-form monomial with coefficient one.
    pub fn monomial(graph: Arc<Graph>, backend: Backend, m: Monomial) -> Result<Self> {
        backend.check_depth(m.len())?;
        if !m.is_normal(&backend) {
            return Err(Error::InvalidArgument(format!(
                "{} is not in {} normal form",
                m.serialize(&graph),
                backend.kind()
            )));
        }
        let mut out = Self::zero(graph, backend);
        out.add_term(m, Scalar::one());
        Ok(out)
    }

    pub fn generator(graph: Arc<Graph>, backend: Backend, s: &GeneratorSymbol) -> Result<Self> {
        let m = reduce_word(&graph, &backend, std::slice::from_ref(s))?;
        let mut out = Self::zero(graph, backend);
        if let Some(m) = m {
            out.add_term(m, Scalar::one());
        }
        Ok(out)
    }

    /// `L_w`.
    pub fn creation(graph: Arc<Graph>, backend: Backend, w: &PathWord) -> Result<Self> {
        Self::generator(graph, backend, &GeneratorSymbol::creation(w.clone()))
    }

    /// `L_w*`.
    pub fn annihilation(graph: Arc<Graph>, backend: Backend, w: &PathWord) -> Result<Self> {
        Self::generator(graph, backend, &GeneratorSymbol::annihilation(w.clone()))
    }

    /// `a_w = L_w + L_w*`.
    pub fn semicircular(graph: Arc<Graph>, backend: Backend, w: &PathWord) -> Result<Self> {
        let c = Self::creation(graph.clone(), backend, w)?;
        let a = Self::annihilation(graph, backend, w)?;
        c.add(&a)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub(crate) fn term_map(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    /// Left vertices of all terms.
    pub fn left_vertices(&self) -> BTreeSet<VertexId> {
        self.terms.keys().map(Monomial::left).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest term, in edges.
    pub fn max_term_len(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.graph.id() != other.graph.id() {
            return Err(Error::MixedGraph);
        }
        if self.backend != other.backend {
            return Err(Error::BackendMismatch(
                self.backend.to_string(),
                other.backend.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.graph.clone(), self.backend);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Conjugate-linear involution `L_p L_q* ↦ L_q L_p*`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.graph.clone(), self.backend);
        for (m, c) in &self.terms {
            out.add_term(m.adjoint(), c.conj());
        }
        out
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.adjoint() == *self
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.graph.clone(), self.backend);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                self.backend.check_depth(a.len() + b.len())?;
                if let Some(m) = multiply(&self.graph, a, b, &self.backend) {
                    out.add_term(m, x * y);
                }
            }
        }
        Ok(out)
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("zeroth power".into()));
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `d · a`.
    pub fn left_mul_diagonal(&self, d: &DiagonalElement) -> Self {
        let mut out = Self::zero(self.graph.clone(), self.backend);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &d.get(m.left()) * c);
        }
        out
    }

    /// `a · d`.
    pub fn right_mul_diagonal(&self, d: &DiagonalElement) -> Self {
        let mut out = Self::zero(self.graph.clone(), self.backend);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &d.get(m.right()));
        }
        out
    }

    /// Splits `a = Σ_u a·L_u` by the right vertex of each term.
    pub fn right_components(&self) -> BTreeMap<VertexId, AlgebraElement> {
        let mut out: BTreeMap<VertexId, AlgebraElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.right())
                .or_insert_with(|| Self::zero(self.graph.clone(), self.backend))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// `E(a) = Σ p_v L_v`: the coefficients of vertex monomials.
    pub fn expectation(&self) -> DiagonalElement {
        self.terms
            .iter()
            .filter(|(m, _)| m.is_vertex())
            .map(|(m, c)| (m.left(), c.clone()))
            .collect()
    }

    /// Vertex support `V(G:a)` and path support `FP(G:a)`.
    pub fn support(&self) -> Support {
        let mut s = Support::default();
        for m in self.terms.keys() {
            if m.is_vertex() {
                s.vertex_support.insert(m.left());
                continue;
            }
            for (p, q) in m.blocks(&self.graph) {
                for w in [p, q] {
                    if !w.is_vertex() {
                        s.path_support.insert(w);
                    }
                }
            }
        }
        s
    }

    /// Re-reduces every term under another backend.
    pub fn with_backend(&self, backend: Backend) -> Result<Self> {
        let mut out = Self::zero(self.graph.clone(), backend);
        for (m, c) in &self.terms {
            let symbols = m.symbols(&self.graph);
            if let Some(r) = reduce_word(&self.graph, &backend, &symbols)? {
                out.add_term(r, c.clone());
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> ElementJson {
        json::to_json(self)
    }

    pub fn from_json(graph: Arc<Graph>, value: &ElementJson) -> Result<Self> {
        json::from_json(graph, value)
    }
}

impl fmt::Display for AlgebraElement {
    /// `2 L[e] + L*[e] + -1/2 L[@v]`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *c != Scalar::one() {
                write!(f, "{c} ")?;
            }
            write!(f, "{}", m.display(&self.graph))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Support {
    pub vertex_support: BTreeSet<VertexId>,
    pub path_support: BTreeSet<PathWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulnessSample {
    pub element: String,
    pub expectation_of_square: NamedDiagonal,
    pub expectation_vanishes: bool,
    pub element_vanishes: bool,
    /// `E(a*a) = 0` while `a != 0`.
    pub counterexample: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaithfulnessReport {
    pub backend: String,
    pub samples: Vec<FaithfulnessSample>,
    pub counterexamples: Vec<String>,
}

impl FaithfulnessReport {
    pub fn faithful_on_samples(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Evaluates `E(a*a)` for each sample under `backend` and collects the
/// samples violating faithfulness.
pub fn faithfulness_probe(g: &Arc<Graph>, backend: Backend, samples: &[AlgebraElement]) -> Result<FaithfulnessReport> {
    let mut out = Vec::new();
    let mut counterexamples = Vec::new();
    for a in samples {
        if a.graph().id() != g.id() {
            return Err(Error::MixedGraph);
        }
        let a = a.with_backend(backend)?;
        let e = a.adjoint().mul(&a)?.expectation();
        let sample = FaithfulnessSample {
            element: a.to_string(),
            expectation_of_square: e.named(g),
            expectation_vanishes: e.is_zero(),
            element_vanishes: a.is_zero(),
            counterexample: e.is_zero() && !a.is_zero(),
        };
        if sample.counterexample {
            counterexamples.push(sample.element.clone());
        }
        out.push(sample);
    }
    Ok(FaithfulnessReport {
        backend: backend.kind().to_string(),
        samples: out,
        counterexamples,
    })
}
