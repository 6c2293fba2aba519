//! Diagonal-valued moments and cumulants over non-crossing partitions.
//!
//! Cumulants come from the subtraction recursion
//! `k_n = E(a_1···a_n) − Σ_{π ≠ 1_n} k_π`, where in `k_π` the value of a
//! nested sub-partition right-multiplies the argument to its left.

mod nc;

pub use nc::{enumerate_nc, NcPartition, NC_BOUND};

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraElement, DiagonalElement, NamedDiagonal};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::repr::{Backend, Monomial};
use crate::scalar::Scalar;

/// Default largest cumulant order the algebra engine accepts.
pub const ENGINE_BOUND: usize = 8;

/// A cumulant argument that a diagonal element can right-multiply.
pub trait Slot: Clone {
    fn right_mul(&self, d: &DiagonalElement) -> Self;
}

impl Slot for AlgebraElement {
    fn right_mul(&self, d: &DiagonalElement) -> Self {
        self.right_mul_diagonal(d)
    }
}

/// A family of multilinear maps `k_m : A^m → D_G`.
pub trait CumulantSource<A> {
    fn cumulant(&mut self, args: &[A]) -> Result<DiagonalElement>;
}

/// Bracket evaluation `k_π(args)` against `source`.
pub fn nested_evaluate<A: Slot, S: CumulantSource<A>>(
    pi: &NcPartition,
    args: &[A],
    source: &mut S,
) -> Result<DiagonalElement> {
    if args.len() != pi.n() {
        return Err(Error::ArityMismatch {
            expected: pi.n(),
            got: args.len(),
        });
    }
    Ok(eval_interval(pi, args, source, 0, pi.n())?.unwrap_or_default())
}

/// Product in `D_G` of the outer blocks of `pi` inside `[lo, hi)`; `None`
/// for an empty interval.
fn eval_interval<A: Slot, S: CumulantSource<A>>(
    pi: &NcPartition,
    args: &[A],
    source: &mut S,
    lo: usize,
    hi: usize,
) -> Result<Option<DiagonalElement>> {
    let mut acc: Option<DiagonalElement> = None;
    let mut pos = lo;
    while pos < hi {
        let block = &pi.blocks()[pi.block_of(pos)];
        let mut slots = Vec::with_capacity(block.len());
        for (t, &b) in block.iter().enumerate() {
            let slot = match block.get(t + 1) {
                Some(&next) => match eval_interval(pi, args, source, b + 1, next)? {
                    Some(gap) => args[b].right_mul(&gap),
                    None => args[b].clone(),
                },
                None => args[b].clone(),
            };
            slots.push(slot);
        }
        let value = source.cumulant(&slots)?;
        let next = match acc {
            Some(a) => a.mul(&value),
            None => value,
        };
        if next.is_zero() {
            return Ok(Some(next));
        }
        acc = Some(next);
        pos = block[block.len() - 1] + 1;
    }
    Ok(acc)
}

/// `Σ_{π ∈ NC(n)} k_π(args)`.
pub fn cumulant_to_moment<A: Slot, S: CumulantSource<A>>(args: &[A], source: &mut S) -> Result<DiagonalElement> {
    let mut out = DiagonalElement::zero();
    for pi in enumerate_nc(args.len())? {
        out.add_assign(&nested_evaluate(pi, args, source)?);
    }
    Ok(out)
}

/// `k_n(args)` with a fresh engine.
pub fn moment_to_cumulant(args: &[AlgebraElement]) -> Result<DiagonalElement> {
    let first = args
        .first()
        .ok_or_else(|| Error::InvalidArgument("cumulant of an empty tuple".into()))?;
    CumulantEngine::new(first.graph().clone(), first.backend()).cumulant(args)
}

/// A right-supported piece `x` with `x = x·L_u`, interned in the engine.
struct Atom {
    element: AlgebraElement,
    right: VertexId,
    left: BTreeSet<VertexId>,
}

/// Memoizing evaluator of moments and cumulants of algebra elements.
///
/// Arguments are split into right-vertex components and normalized up to a
/// scalar, so a nested diagonal value acts on a component as a scalar and
/// memo entries are shared across tuples.
pub struct CumulantEngine {
    graph: Arc<Graph>,
    backend: Backend,
    bound: usize,
    atoms: Vec<Atom>,
    index: HashMap<std::collections::BTreeMap<Monomial, Scalar>, u32>,
    cumulants: HashMap<Vec<u32>, DiagonalElement>,
    products: HashMap<Vec<u32>, AlgebraElement>,
}

impl CumulantEngine {
    pub fn new(graph: Arc<Graph>, backend: Backend) -> Self {
        Self::with_bound(graph, backend, ENGINE_BOUND)
    }

    pub fn with_bound(graph: Arc<Graph>, backend: Backend, bound: usize) -> Self {
        CumulantEngine {
            graph,
            backend,
            bound: bound.min(NC_BOUND),
            atoms: Vec::new(),
            index: HashMap::new(),
            cumulants: HashMap::new(),
            products: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check_args(&self, args: &[AlgebraElement]) -> Result<()> {
        if args.is_empty() {
            return Err(Error::InvalidArgument("empty tuple".into()));
        }
        if args.len() > self.bound {
            return Err(Error::ArityBound {
                n: args.len(),
                bound: self.bound,
            });
        }
        for a in args {
            if a.graph().id() != self.graph.id() {
                return Err(Error::MixedGraph);
            }
            if a.backend() != self.backend {
                return Err(Error::BackendMismatch(
                    self.backend.to_string(),
                    a.backend().to_string(),
                ));
            }
        }
        Ok(())
    }

    /// `a = Σ c · atom`.
    fn expand(&mut self, a: &AlgebraElement) -> Vec<(Scalar, u32)> {
        let mut out = Vec::new();
        for (right, part) in a.right_components() {
            let lead = part
                .terms()
                .next()
                .map(|(_, c)| c.clone())
                .expect("components are nonzero");
            let normalized = part.scale(&lead.inv().expect("nonzero"));
            let id = match self.index.get(normalized.term_map()) {
                Some(&id) => id,
                None => {
                    let id = self.atoms.len() as u32;
                    self.index.insert(normalized.term_map().clone(), id);
                    self.atoms.push(Atom {
                        left: normalized.left_vertices(),
                        element: normalized,
                        right,
                    });
                    id
                }
            };
            out.push((lead, id));
        }
        out
    }

    /// `E(a_1···a_n)`.
    pub fn moment(&mut self, args: &[AlgebraElement]) -> Result<DiagonalElement> {
        self.check_args(args)?;
        self.multilinear(args, |engine, atoms| Ok(engine.product(atoms)?.expectation()))
    }

    /// `k_n(a_1, ..., a_n)`.
    pub fn cumulant(&mut self, args: &[AlgebraElement]) -> Result<DiagonalElement> {
        self.check_args(args)?;
        self.multilinear(args, |engine, atoms| engine.atom_cumulant(atoms))
    }

    fn multilinear<F>(&mut self, args: &[AlgebraElement], mut f: F) -> Result<DiagonalElement>
    where
        F: FnMut(&mut Self, &[u32]) -> Result<DiagonalElement>,
    {
        let expanded: Vec<Vec<(Scalar, u32)>> = args.iter().map(|a| self.expand(a)).collect();
        let mut out = DiagonalElement::zero();
        if expanded.iter().any(Vec::is_empty) {
            return Ok(out);
        }
        let mut choice = vec![0usize; args.len()];
        let mut atoms = vec![0u32; args.len()];
        loop {
            let mut coeff = Scalar::one();
            for (i, &c) in choice.iter().enumerate() {
                let (x, id) = &expanded[i][c];
                coeff = &coeff * x;
                atoms[i] = *id;
            }
            let value = f(self, &atoms)?;
            out.add_assign(&value.scale(&coeff));
            // odometer over the component choices
            let mut i = args.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < expanded[i].len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    fn product(&mut self, atoms: &[u32]) -> Result<AlgebraElement> {
        if atoms.len() == 1 {
            return Ok(self.atoms[atoms[0] as usize].element.clone());
        }
        if let Some(p) = self.products.get(atoms) {
            return Ok(p.clone());
        }
        let (last, prefix) = atoms.split_last().expect("nonempty");
        let head = self.product(prefix)?;
        let p = if head.is_zero() {
            head
        } else {
            head.mul(&self.atoms[*last as usize].element)?
        };
        self.products.insert(atoms.to_vec(), p.clone());
        Ok(p)
    }

    /// Balancedness: `k(.., x·L_u, y, ..) = k(.., x, L_u·y, ..)` vanishes
    /// when `L_u·y = 0`.
    fn chain_breaks(&self, atoms: &[u32]) -> bool {
        atoms.windows(2).any(|w| {
            let right = self.atoms[w[0] as usize].right;
            !self.atoms[w[1] as usize].left.contains(&right)
        })
    }

    fn atom_cumulant(&mut self, atoms: &[u32]) -> Result<DiagonalElement> {
        if let Some(k) = self.cumulants.get(atoms) {
            return Ok(k.clone());
        }
        let k = if self.chain_breaks(atoms) {
            DiagonalElement::zero()
        } else if atoms.len() == 1 {
            self.atoms[atoms[0] as usize].element.expectation()
        } else {
            let mut k = self.product(atoms)?.expectation();
            for pi in enumerate_nc(atoms.len())? {
                if pi.is_full() {
                    continue;
                }
                if let Some(v) = self.atom_interval(pi, atoms, 0, atoms.len())? {
                    k = k.sub(&v);
                }
            }
            k
        };
        self.cumulants.insert(atoms.to_vec(), k.clone());
        Ok(k)
    }

    /// Specialization of the bracket evaluation to atoms: a gap value `d`
    /// acts on an atom with right vertex `u` as the scalar `d_u`.
    fn atom_interval(
        &mut self,
        pi: &NcPartition,
        atoms: &[u32],
        lo: usize,
        hi: usize,
    ) -> Result<Option<DiagonalElement>> {
        let mut acc: Option<DiagonalElement> = None;
        let mut pos = lo;
        while pos < hi {
            let block = &pi.blocks()[pi.block_of(pos)];
            let mut coeff = Scalar::one();
            for t in 0..block.len() - 1 {
                let (b, next) = (block[t], block[t + 1]);
                if b + 1 == next {
                    continue;
                }
                let gap = self.atom_interval(pi, atoms, b + 1, next)?.unwrap_or_default();
                coeff = &coeff * &gap.get(self.atoms[atoms[b] as usize].right);
                if coeff.is_zero() {
                    return Ok(Some(DiagonalElement::zero()));
                }
            }
            let sub: Vec<u32> = block.iter().map(|&b| atoms[b]).collect();
            let value = self.atom_cumulant(&sub)?.scale(&coeff);
            let next = match acc {
                Some(a) => a.mul(&value),
                None => value,
            };
            if next.is_zero() {
                return Ok(Some(next));
            }
            acc = Some(next);
            pos = block[block.len() - 1] + 1;
        }
        Ok(acc)
    }
}

impl CumulantSource<AlgebraElement> for CumulantEngine {
    fn cumulant(&mut self, args: &[AlgebraElement]) -> Result<DiagonalElement> {
        CumulantEngine::cumulant(self, args)
    }
}

/// A symbolic argument carrying only its accumulated right multiplier.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AbstractSlot {
    pub right: Option<DiagonalElement>,
}

impl Slot for AbstractSlot {
    fn right_mul(&self, d: &DiagonalElement) -> Self {
        AbstractSlot {
            right: Some(match &self.right {
                Some(r) => r.mul(d),
                None => d.clone(),
            }),
        }
    }
}

/// The source whose only nonzero cumulant is `k_2(x·d, x·d′) = γ·d_v·d′_v·L_v`.
#[derive(Debug, Clone)]
pub struct SemicircularSource {
    pub vertex: VertexId,
    pub gamma: Scalar,
}

impl CumulantSource<AbstractSlot> for SemicircularSource {
    fn cumulant(&mut self, args: &[AbstractSlot]) -> Result<DiagonalElement> {
        if args.len() != 2 {
            return Ok(DiagonalElement::zero());
        }
        let mut c = self.gamma.clone();
        for a in args {
            if let Some(r) = &a.right {
                c = &c * &r.get(self.vertex);
            }
        }
        Ok(DiagonalElement::projection(self.vertex, c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedCumulant {
    pub order: usize,
    pub tuple: Vec<String>,
    pub value: NamedDiagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedScanReport {
    pub family_a: Vec<String>,
    pub family_b: Vec<String>,
    pub max_checked_order: usize,
    pub tuples_checked: usize,
    pub nonzero: Vec<MixedCumulant>,
}

impl MixedScanReport {
    /// No mixed cumulant survived: free to the scanned order.
    pub fn is_free(&self) -> bool {
        self.nonzero.is_empty()
    }
}

/// Adds each missing adjoint, keeping first-seen order.
pub fn close_under_adjoint(family: &[AlgebraElement]) -> Vec<AlgebraElement> {
    let mut out: Vec<AlgebraElement> = Vec::new();
    for a in family {
        for x in [a.clone(), a.adjoint()] {
            if !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

/// Every cumulant of order `2..=max_order` whose tuple draws from both
/// adjoint-closed families; nonzero values are reported in lexicographic
/// tuple order.
pub fn mixed_cumulant_scan(a: &[AlgebraElement], b: &[AlgebraElement], max_order: usize) -> Result<MixedScanReport> {
    let fa = close_under_adjoint(a);
    let fb = close_under_adjoint(b);
    let mut report = MixedScanReport {
        family_a: fa.iter().map(ToString::to_string).collect(),
        family_b: fb.iter().map(ToString::to_string).collect(),
        max_checked_order: max_order,
        tuples_checked: 0,
        nonzero: Vec::new(),
    };
    if max_order > ENGINE_BOUND {
        return Err(Error::ArityBound {
            n: max_order,
            bound: ENGINE_BOUND,
        });
    }
    let Some(first) = fa.first().or(fb.first()) else {
        return Ok(report);
    };
    if fa.is_empty() || fb.is_empty() {
        return Ok(report);
    }
    let mut engine = CumulantEngine::new(first.graph().clone(), first.backend());
    let members: Vec<(bool, &AlgebraElement)> = fa
        .iter()
        .map(|x| (true, x))
        .chain(fb.iter().map(|x| (false, x)))
        .collect();
    let s = members.len();
    for n in 2..=max_order {
        let mut idx = vec![0usize; n];
        loop {
            let in_a = idx.iter().any(|&i| members[i].0);
            let in_b = idx.iter().any(|&i| !members[i].0);
            if in_a && in_b {
                let args: Vec<AlgebraElement> = idx.iter().map(|&i| members[i].1.clone()).collect();
                let k = engine.cumulant(&args)?;
                report.tuples_checked += 1;
                if !k.is_zero() {
                    report.nonzero.push(MixedCumulant {
                        order: n,
                        tuple: args.iter().map(ToString::to_string).collect(),
                        value: k.named(engine.graph()),
                    });
                }
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < s {
                    break;
                }
                idx[i] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(report)
}
