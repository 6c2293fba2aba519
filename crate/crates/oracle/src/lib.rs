//! Reference computations by exhaustive enumeration. Nothing here uses the
//! gwstar library: graphs are plain edge lists, operators act on an
//! untruncated Fock basis, and the relation-based semantics is free
//! reduction of letter strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Vertices are `0..vertices`; edge `i` runs `edges[i].0 -> edges[i].1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl OGraph {
    pub fn is_path(&self, edges: &[usize]) -> bool {
        !edges.is_empty() && edges.windows(2).all(|w| self.edges[w[0]].1 == self.edges[w[1]].0)
    }

    /// Every basis vector whose word has at most `max_len` edges.
    pub fn basis_up_to(&self, max_len: usize) -> Vec<Basis> {
        let mut out: Vec<Basis> = (0..self.vertices)
            .map(|v| Basis {
                start: v,
                edges: vec![],
            })
            .collect();
        let mut level: Vec<Basis> = Vec::new();
        for (i, &(s, _)) in self.edges.iter().enumerate() {
            level.push(Basis {
                start: s,
                edges: vec![i],
            });
        }
        for _ in 0..max_len {
            out.extend(level.iter().cloned());
            let mut next = Vec::new();
            for b in &level {
                let end = self.edges[*b.edges.last().unwrap()].1;
                for (i, &(s, _)) in self.edges.iter().enumerate() {
                    if s == end {
                        let mut edges = b.edges.clone();
                        edges.push(i);
                        next.push(Basis { start: b.start, edges });
                    }
                }
            }
            level = next;
        }
        out
    }

    /// All nonempty paths with at most `max_len` edges.
    pub fn paths_up_to(&self, max_len: usize) -> Vec<Vec<usize>> {
        self.basis_up_to(max_len)
            .into_iter()
            .filter(|b| !b.edges.is_empty())
            .map(|b| b.edges)
            .collect()
    }
}

/// A basis vector `ξ_u`: a vertex (`edges` empty) or a path from `start`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Basis {
    pub start: usize,
    pub edges: Vec<usize>,
}

/// A generator: `L_v`, `L_w` or `L_w*` with `w` a nonempty edge path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gen {
    Vertex(usize),
    Create(Vec<usize>),
    Annihilate(Vec<usize>),
}

/// Linear combination of generator words.
pub type OElement = Vec<(Q, Vec<Gen>)>;

pub fn generator(g: Gen) -> OElement {
    vec![(Q::one(), vec![g])]
}

/// `L_w + L_w*`.
pub fn semicircular(w: &[usize]) -> OElement {
    vec![
        (Q::one(), vec![Gen::Create(w.to_vec())]),
        (Q::one(), vec![Gen::Annihilate(w.to_vec())]),
    ]
}

/// `L_w ξ_u = ξ_{wu}`, `L_w* ξ_{wu} = ξ_u`, `L_v ξ_u = ξ_u` when `u` starts at `v`.
pub fn fock_apply(g: &OGraph, gen: &Gen, b: &Basis) -> Option<Basis> {
    match gen {
        Gen::Vertex(v) => (b.start == *v).then(|| b.clone()),
        Gen::Create(w) => {
            if g.edges[*w.last().unwrap()].1 != b.start {
                return None;
            }
            let mut edges = w.clone();
            edges.extend_from_slice(&b.edges);
            Some(Basis {
                start: g.edges[w[0]].0,
                edges,
            })
        }
        Gen::Annihilate(w) => {
            if b.edges.len() < w.len() || b.edges[..w.len()] != w[..] {
                return None;
            }
            Some(Basis {
                start: g.edges[*w.last().unwrap()].1,
                edges: b.edges[w.len()..].to_vec(),
            })
        }
    }
}

/// Rightmost generator acts first.
pub fn fock_apply_word(g: &OGraph, word: &[Gen], b: &Basis) -> Option<Basis> {
    let mut cur = b.clone();
    for gen in word.iter().rev() {
        cur = fock_apply(g, gen, &cur)?;
    }
    Some(cur)
}

/// `⟨x ξ_v, ξ_v⟩` per vertex for a single word.
pub fn fock_word_expectation(g: &OGraph, word: &[Gen]) -> Vec<Q> {
    (0..g.vertices)
        .map(|v| {
            let xi = Basis {
                start: v,
                edges: vec![],
            };
            if fock_apply_word(g, word, &xi).as_ref() == Some(&xi) {
                Q::one()
            } else {
                Q::zero()
            }
        })
        .collect()
}

/// Free reduction in the path groupoid; `Some(v)` when the word reduces to
/// the unit at `v`, `None` when it is zero or a nontrivial reduced word.
pub fn groupoid_word_vertex(g: &OGraph, word: &[Gen]) -> Option<usize> {
    // (edge, inverse) letters with their endpoints
    let mut letters: Vec<(usize, bool)> = Vec::new();
    let mut start: Option<usize> = None;
    let mut cur: Option<usize> = None;
    let step = |from: usize, to: usize, cur: &mut Option<usize>, start: &mut Option<usize>| -> bool {
        if let Some(c) = *cur {
            if c != from {
                return false;
            }
        }
        if start.is_none() {
            *start = Some(from);
        }
        *cur = Some(to);
        true
    };
    for gen in word {
        match gen {
            Gen::Vertex(v) => {
                if !step(*v, *v, &mut cur, &mut start) {
                    return None;
                }
            }
            Gen::Create(w) => {
                for &e in w {
                    let (s, t) = g.edges[e];
                    if !step(s, t, &mut cur, &mut start) {
                        return None;
                    }
                    letters.push((e, false));
                }
            }
            Gen::Annihilate(w) => {
                for &e in w.iter().rev() {
                    let (s, t) = g.edges[e];
                    if !step(t, s, &mut cur, &mut start) {
                        return None;
                    }
                    letters.push((e, true));
                }
            }
        }
    }
    let mut stack: Vec<(usize, bool)> = Vec::new();
    for l in letters {
        match stack.last() {
            Some(&(e, inv)) if e == l.0 && inv != l.1 => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    if stack.is_empty() {
        start
    } else {
        None
    }
}

pub fn groupoid_word_expectation(g: &OGraph, word: &[Gen]) -> Vec<Q> {
    let mut out = vec![Q::zero(); g.vertices];
    if let Some(v) = groupoid_word_vertex(g, word) {
        out[v] = Q::one();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    Fock,
    Groupoid,
}

/// `E(x_1···x_n)` per vertex by expanding every product of terms.
pub fn moment(g: &OGraph, sem: Semantics, elems: &[OElement]) -> Vec<Q> {
    let mut out = vec![Q::zero(); g.vertices];
    let mut choice = vec![0usize; elems.len()];
    if elems.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let mut coeff = Q::one();
        let mut word = Vec::new();
        for (i, &c) in choice.iter().enumerate() {
            let (x, w) = &elems[i][c];
            coeff *= x;
            word.extend(w.iter().cloned());
        }
        let e = match sem {
            Semantics::Fock => fock_word_expectation(g, &word),
            Semantics::Groupoid => groupoid_word_expectation(g, &word),
        };
        for (o, x) in out.iter_mut().zip(e) {
            *o += &coeff * x;
        }
        let mut i = elems.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < elems[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// `C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> BigInt {
    binomial(2 * k, k) / BigInt::from(k + 1)
}

/// Counts non-crossing set partitions of `n` points by generating every
/// restricted growth string and testing all index quadruples.
pub fn nc_count_bruteforce(n: usize) -> usize {
    fn rec(n: usize, rgs: &mut Vec<usize>, count: &mut usize) {
        if rgs.len() == n {
            let crossing = (0..n).any(|a| {
                (a + 1..n).any(|b| {
                    (b + 1..n).any(|c| (c + 1..n).any(|d| rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]))
                })
            });
            if !crossing {
                *count += 1;
            }
            return;
        }
        let next = rgs.iter().max().map_or(0, |m| m + 1);
        for k in 0..=next {
            rgs.push(k);
            rec(n, rgs, count);
            rgs.pop();
        }
    }
    let mut count = 0;
    rec(n, &mut Vec::new(), &mut count);
    count
}

/// Scalar free cumulants `k_1..k_N` from moments `m_1..m_N` through
/// `m_n = Σ_s k_s Σ_{i_1+..+i_s = n-s} m_{i_1}···m_{i_s}` (with `m_0 = 1`).
pub fn scalar_free_cumulants(moments: &[Q]) -> Vec<Q> {
    let n_max = moments.len();
    let m = |i: usize| if i == 0 { Q::one() } else { moments[i - 1].clone() };
    // comp[s][r] = Σ over compositions of r into s nonnegative parts
    let mut comp = vec![vec![Q::zero(); n_max + 1]; n_max + 1];
    comp[0][0] = Q::one();
    for s in 1..=n_max {
        for r in 0..=n_max {
            let mut acc = Q::zero();
            for i in 0..=r {
                acc += m(i) * &comp[s - 1][r - i];
            }
            comp[s][r] = acc;
        }
    }
    let mut k: Vec<Q> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut v = m(n);
        for s in 1..n {
            v -= &k[s - 1] * &comp[s][n - s];
        }
        k.push(v);
    }
    k
}

/// A random graph with `1..=max_vertices` vertices and `0..=max_edges` edges.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> OGraph {
    let vertices = rng.gen_range(1..=max_vertices);
    let n_edges = rng.gen_range(0..=max_edges);
    let edges = (0..n_edges)
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    OGraph { vertices, edges }
}

/// A random walk of `1..=max_len` edges, if the graph has edges.
pub fn random_path<R: Rng>(rng: &mut R, g: &OGraph, max_len: usize) -> Option<Vec<usize>> {
    if g.edges.is_empty() {
        return None;
    }
    let len = rng.gen_range(1..=max_len);
    let mut path = vec![rng.gen_range(0..g.edges.len())];
    while path.len() < len {
        let end = g.edges[*path.last().unwrap()].1;
        let out: Vec<usize> = (0..g.edges.len()).filter(|&e| g.edges[e].0 == end).collect();
        if out.is_empty() {
            break;
        }
        path.push(out[rng.gen_range(0..out.len())]);
    }
    Some(path)
}

/// Renders a graph in the gwstar text format with vertices `v0, v1, ..`
/// and edges `e0, e1, ..`.
pub fn to_graph_text(g: &OGraph) -> String {
    let names: Vec<String> = (0..g.vertices).map(|v| format!("v{v}")).collect();
    let mut s = format!("vertices: {}\n", names.join(" "));
    for (i, (a, b)) in g.edges.iter().enumerate() {
        s.push_str(&format!("edge e{i}: v{a} -> v{b}\n"));
    }
    s
}
