//! Generator words `L_w`, `L_w*` and their two semantics.
//!
//! Every generator word is a product of single-edge creation and annihilation
//! operators, so a [`Monomial`] is stored as a sequence of [`Letter`]s read
//! left to right as an operator product: a forward letter `e` is `L_e`, an
//! inverse letter is `L_e*`. The backends differ only in how adjacent letters
//! cancel:
//!
//! * [`Backend::Fock`]: `L_e* L_e = L_{final(e)}`, `L_e* L_f = 0` for `e != f`,
//!   and `L_e L_e*` stays (a proper subprojection of `L_{initial(e)}`). Normal
//!   forms are `L_p L_q*`.
//! * [`Backend::Axiomatic`]: both `L_e* L_e = L_{final(e)}` and
//!   `L_e L_e* = L_{initial(e)}`, i.e. free reduction in the path groupoid.
//!   Normal forms are reduced zig-zags `L_{p1} L_{q1}* L_{p2} L_{q2}* ...`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, PathWord, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BackendKind {
    Axiomatic,
    Fock,
}

impl fmt::Display for BackendKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BackendKind::Axiomatic => "axiomatic",
            BackendKind::Fock => "fock",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Rewriting under the generator relations.
    Axiomatic,
    /// Action on `l²` of the free semigroupoid, truncated at basis length `depth`.
    Fock { depth: usize },
}

impl Backend {
    pub fn kind(&self) -> BackendKind {
        match self {
            Backend::Axiomatic => BackendKind::Axiomatic,
            Backend::Fock { .. } => BackendKind::Fock,
        }
    }

    pub fn depth(&self) -> Option<usize> {
        match self {
            Backend::Axiomatic => None,
            Backend::Fock { depth } => Some(*depth),
        }
    }

    /// Fails when a word of total edge length `required` would touch the
    /// truncation boundary.
    pub fn check_depth(&self, required: usize) -> Result<()> {
        match self {
            Backend::Fock { depth } if *depth < required => Err(Error::DepthInsufficient {
                required,
                depth: *depth,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Axiomatic => write!(f, "axiomatic"),
            Backend::Fock { depth } => write!(f, "fock(depth={depth})"),
        }
    }
}

/// `L_w` or `L_w*`. For a vertex word both denote the projection `L_v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub word: PathWord,
    pub starred: bool,
}

impl GeneratorSymbol {
    pub fn creation(word: PathWord) -> Self {
        GeneratorSymbol { word, starred: false }
    }

    pub fn annihilation(word: PathWord) -> Self {
        GeneratorSymbol { word, starred: true }
    }

    pub fn adjoint(&self) -> Self {
        GeneratorSymbol {
            word: self.word.clone(),
            starred: !self.starred,
        }
    }

    /// Vertex the operator's range lives on (left end of the product).
    fn left(&self) -> VertexId {
        if self.starred {
            self.word.terminal()
        } else {
            self.word.initial()
        }
    }

    fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let edges = self.word.edges();
        let starred = self.starred;
        (0..edges.len()).map(move |i| {
            if starred {
                Letter::inverse(edges[edges.len() - 1 - i])
            } else {
                Letter::forward(edges[i])
            }
        })
    }
}

/// A single-edge factor: `L_e` (forward) or `L_e*` (inverse).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub edge: EdgeId,
    pub inverse: bool,
}

impl Letter {
    pub fn forward(edge: EdgeId) -> Self {
        Letter { edge, inverse: false }
    }

    pub fn inverse(edge: EdgeId) -> Self {
        Letter { edge, inverse: true }
    }

    fn flip(self) -> Self {
        Letter {
            edge: self.edge,
            inverse: !self.inverse,
        }
    }

    fn source(self, g: &Graph) -> VertexId {
        let e = g.edge(self.edge);
        if self.inverse {
            e.terminal
        } else {
            e.initial
        }
    }

    fn target(self, g: &Graph) -> VertexId {
        let e = g.edge(self.edge);
        if self.inverse {
            e.initial
        } else {
            e.terminal
        }
    }
}

/// A scalar-free operator word in normal form for some backend.
///
/// `left` is the vertex projection absorbing the word from the left and
/// `right` the one absorbing it from the right, so `L_left · m · L_right = m`.
/// With no letters the monomial is the vertex projection `L_left`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    left: VertexId,
    letters: Vec<Letter>,
    right: VertexId,
}

impl Monomial {
    pub fn vertex(v: VertexId) -> Self {
        Monomial {
            left: v,
            letters: Vec::new(),
            right: v,
        }
    }

    /// `L_p L_q*`; requires `final(p) = final(q)`.
    pub fn new(g: &Graph, p: &PathWord, q: &PathWord) -> Result<Self> {
        g.check_word(p)?;
        g.check_word(q)?;
        if p.terminal() != q.terminal() {
            return Err(Error::InvalidMonomial(g.path_name(p), g.path_name(q)));
        }
        let mut letters: Vec<Letter> = p.edges().iter().map(|&e| Letter::forward(e)).collect();
        letters.extend(q.edges().iter().rev().map(|&e| Letter::inverse(e)));
        Ok(Monomial {
            left: p.initial(),
            letters,
            right: q.initial(),
        })
    }

    pub fn creation(w: &PathWord) -> Self {
        Monomial {
            left: w.initial(),
            letters: w.edges().iter().map(|&e| Letter::forward(e)).collect(),
            right: w.terminal(),
        }
    }

    pub fn annihilation(w: &PathWord) -> Self {
        Monomial {
            left: w.terminal(),
            letters: w.edges().iter().rev().map(|&e| Letter::inverse(e)).collect(),
            right: w.initial(),
        }
    }

    pub fn left(&self) -> VertexId {
        self.left
    }

    pub fn right(&self) -> VertexId {
        self.right
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Total edge length, the Fock depth this monomial consumes.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn adjoint(&self) -> Self {
        Monomial {
            left: self.right,
            letters: self.letters.iter().rev().map(|l| l.flip()).collect(),
            right: self.left,
        }
    }

    /// Maximal forward/inverse runs as `(p_i, q_i)` pairs so that the word is
    /// `L_{p1} L_{q1}* L_{p2} L_{q2}* ...`. A single pair for Fock normal forms.
    pub fn blocks(&self, g: &Graph) -> Vec<(PathWord, PathWord)> {
        let mut out = Vec::new();
        let mut at = self.left;
        let mut i = 0;
        let n = self.letters.len();
        loop {
            let start = i;
            while i < n && !self.letters[i].inverse {
                i += 1;
            }
            let p_edges: Vec<EdgeId> = self.letters[start..i].iter().map(|l| l.edge).collect();
            let p = if p_edges.is_empty() {
                g.vertex_word(at)
            } else {
                g.path(&p_edges).expect("letters are composable")
            };
            at = p.terminal();
            let start = i;
            while i < n && self.letters[i].inverse {
                i += 1;
            }
            let q_edges: Vec<EdgeId> = self.letters[start..i].iter().rev().map(|l| l.edge).collect();
            let q = if q_edges.is_empty() {
                g.vertex_word(at)
            } else {
                g.path(&q_edges).expect("letters are composable")
            };
            at = q.initial();
            out.push((p, q));
            if i >= n {
                break;
            }
        }
        out
    }

    /// `(p, q)` when the monomial is a single `L_p L_q*`.
    pub fn as_pair(&self, g: &Graph) -> Option<(PathWord, PathWord)> {
        let mut blocks = self.blocks(g);
        if blocks.len() == 1 {
            blocks.pop()
        } else {
            None
        }
    }

    /// Rebuilds a monomial from `(p_i, q_i)` blocks, checking composability.
    pub fn from_blocks(g: &Graph, blocks: &[(PathWord, PathWord)]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::EmptyWord);
        };
        let mut m = Monomial::new(g, &first.0, &first.1)?;
        for (p, q) in &blocks[1..] {
            let next = Monomial::new(g, p, q)?;
            if next.left != m.right {
                return Err(Error::InvalidMonomial(g.path_name(p), g.path_name(q)));
            }
            m.letters.extend(next.letters);
            m.right = next.right;
        }
        Ok(m)
    }

    /// The generator symbols whose product is this word, one per block half.
    pub fn symbols(&self, g: &Graph) -> Vec<GeneratorSymbol> {
        if self.is_vertex() {
            return vec![GeneratorSymbol::creation(g.vertex_word(self.left))];
        }
        let mut out = Vec::new();
        for (p, q) in self.blocks(g) {
            if !p.is_vertex() {
                out.push(GeneratorSymbol::creation(p));
            }
            if !q.is_vertex() {
                out.push(GeneratorSymbol::annihilation(q));
            }
        }
        out
    }

    /// True when the letters are already in normal form for `backend`.
    pub fn is_normal(&self, backend: &Backend) -> bool {
        self.letters.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            match backend {
                Backend::Axiomatic => !(a.edge == b.edge && a.inverse != b.inverse),
                Backend::Fock { .. } => !(a.inverse && !b.inverse),
            }
        })
    }

    /// Exact `L[p]L*[q]` serialization, one group per block.
    pub fn serialize(&self, g: &Graph) -> String {
        self.blocks(g)
            .iter()
            .map(|(p, q)| format!("L[{}]L*[{}]", g.path_name(p), g.path_name(q)))
            .collect()
    }

    /// Short human form: `L[@v]`, `L[p]`, `L*[q]`, `L[p] L*[q] ...`.
    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, g }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    g: &'a Graph,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_vertex() {
            return write!(f, "L[@{}]", self.g.vertex_name(self.m.left));
        }
        let parts: Vec<String> = self
            .m
            .symbols(self.g)
            .iter()
            .map(|s| format!("L{}[{}]", if s.starred { "*" } else { "" }, self.g.path_name(&s.word)))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Appends one letter under the backend's cancellation rules. Returns `false`
/// when the product vanishes.
fn push_letter(g: &Graph, m: &mut Monomial, letter: Letter, backend: &Backend) -> bool {
    if letter.source(g) != m.right {
        return false;
    }
    match m.letters.last().copied() {
        Some(last) if last.edge == letter.edge && last.inverse != letter.inverse => {
            let cancels = match backend {
                Backend::Axiomatic => true,
                // L_e* L_e = L_{final(e)}; L_e L_e* survives
                Backend::Fock { .. } => last.inverse,
            };
            if cancels {
                m.letters.pop();
                m.right = last.source(g);
                return true;
            }
        }
        // L_e* L_f = 0 for distinct edges
        Some(last) if matches!(backend, Backend::Fock { .. }) && last.inverse && !letter.inverse => {
            return false;
        }
        _ => {}
    }
    m.letters.push(letter);
    m.right = letter.target(g);
    true
}

/// Product of two normal-form monomials, or `None` for zero.
pub fn multiply(g: &Graph, a: &Monomial, b: &Monomial, backend: &Backend) -> Option<Monomial> {
    if a.right != b.left {
        return None;
    }
    let mut m = a.clone();
    for &letter in &b.letters {
        if !push_letter(g, &mut m, letter, backend) {
            return None;
        }
    }
    Some(m)
}

/// Minimal Fock depth for exact evaluation of `word` on vertex vectors.
pub fn required_depth(word: &[GeneratorSymbol]) -> usize {
    word.iter().map(|s| s.word.len()).sum()
}

/// Reduces a generator word to a normal-form monomial, or `None` for zero.
///
/// Under the Fock backend the result is the unique `L_p L_q*` inducing the
/// word's partial action on basis vectors; the depth must cover the whole word.
pub fn reduce_word(g: &Graph, backend: &Backend, word: &[GeneratorSymbol]) -> Result<Option<Monomial>> {
    let Some(first) = word.first() else {
        return Err(Error::EmptyWord);
    };
    for s in word {
        g.check_word(&s.word)?;
    }
    backend.check_depth(required_depth(word))?;
    let mut m = Monomial::vertex(first.left());
    for s in word {
        if s.left() != m.right {
            return Ok(None);
        }
        for letter in s.letters() {
            if !push_letter(g, &mut m, letter, backend) {
                return Ok(None);
            }
        }
    }
    Ok(Some(m))
}

/// Action of one generator on a Fock basis vector `ξ_basis`.
pub fn fock_apply(g: &Graph, backend: &Backend, s: &GeneratorSymbol, basis: &PathWord) -> Result<Option<PathWord>> {
    let Backend::Fock { depth } = *backend else {
        return Err(Error::BackendMismatch("fock".into(), backend.to_string()));
    };
    g.check_word(&s.word)?;
    g.check_word(basis)?;
    if basis.len() > depth {
        return Err(Error::BasisExceedsDepth {
            length: basis.len(),
            depth,
        });
    }
    if s.starred {
        return Ok(basis.strip_prefix(&s.word));
    }
    Ok(s.word.concat(basis)?.filter(|w| w.len() <= depth))
}

/// Applies `word` (rightmost symbol first) to `ξ_basis`.
pub fn fock_apply_word(
    g: &Graph,
    backend: &Backend,
    word: &[GeneratorSymbol],
    basis: &PathWord,
) -> Result<Option<PathWord>> {
    let mut cur = basis.clone();
    for s in word.iter().rev() {
        match fock_apply(g, backend, s, &cur)? {
            Some(next) => cur = next,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}
