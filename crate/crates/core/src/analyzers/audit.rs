use std::sync::Arc;

use serde::Serialize;

use super::semicircular::check_semicircular;
use super::table::Table;
use crate::algebra::{faithfulness_probe, AlgebraElement, DiagonalElement};
use crate::cumulant::CumulantEngine;
use crate::error::Result;
use crate::graph::{classify_edges, Graph, PathWord};
use crate::repr::{Backend, BackendKind, Monomial};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BackendValue {
    pub backend: String,
    pub value: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub id: String,
    pub claim: String,
    /// The recomputed quantity, e.g. `E(a_l^4)` with `l` resolved.
    pub quantity: String,
    pub stated: String,
    pub computed: Vec<BackendValue>,
    /// `match`, `mismatch` or `backend-dependent`.
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub graph: String,
    pub backends: Vec<String>,
    pub rows: Vec<AuditRow>,
    pub skipped: Vec<String>,
}

impl AuditReport {
    pub fn row(&self, id: &str) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut headers = vec!["id".to_string(), "quantity".into(), "stated".into()];
        headers.extend(self.backends.iter().cloned());
        headers.push("verdict".into());
        let mut t = Table::new(headers);
        for r in &self.rows {
            let mut cells = vec![r.id.clone(), r.quantity.clone(), r.stated.clone()];
            cells.extend(r.computed.iter().map(|c| c.value.clone()));
            cells.push(r.verdict.clone());
            t.row(cells);
        }
        let mut s = format!("graph: {}\n\n{}", self.graph, t.render());
        s.push_str("\nclaims:\n");
        for r in &self.rows {
            s.push_str(&format!("{}: {}\n", r.id, r.claim));
        }
        for k in &self.skipped {
            s.push_str(&format!("skipped: {k}\n"));
        }
        s
    }
}

/// All backends agree with the stated value, none does, or it depends.
fn verdict(values: &[BackendValue]) -> String {
    let hits = values.iter().filter(|v| v.matches).count();
    if hits == values.len() {
        "match"
    } else if hits == 0 {
        "mismatch"
    } else {
        "backend-dependent"
    }
    .to_string()
}

/// Fock depth used by the audit; covers every word it multiplies.
pub fn audit_depth(max_order: usize) -> usize {
    max_order.max(4)
}

fn backend_of(kind: BackendKind, max_order: usize) -> Backend {
    match kind {
        BackendKind::Axiomatic => Backend::Axiomatic,
        BackendKind::Fock => Backend::Fock {
            depth: audit_depth(max_order),
        },
    }
}

struct Ctx<'a> {
    g: &'a Arc<Graph>,
    backends: Vec<Backend>,
}

impl Ctx<'_> {
    fn row<F>(&self, id: &str, claim: &str, quantity: String, stated: String, mut f: F) -> Result<AuditRow>
    where
        F: FnMut(Backend) -> Result<(String, bool)>,
    {
        let mut computed = Vec::new();
        for &b in &self.backends {
            let (value, matches) = f(b)?;
            computed.push(BackendValue {
                backend: b.kind().to_string(),
                value,
                matches,
            });
        }
        Ok(AuditRow {
            id: id.into(),
            claim: claim.into(),
            quantity,
            stated,
            verdict: verdict(&computed),
            computed,
        })
    }
}

/// Recomputes the stated constants and relations on `g` under each backend.
/// Rows that need a loop edge, or any edge, are skipped when none exists.
pub fn claims_audit(g: &Arc<Graph>, kinds: &[BackendKind], max_order: usize) -> Result<AuditReport> {
    let ctx = Ctx {
        g,
        backends: kinds.iter().map(|&k| backend_of(k, max_order)).collect(),
    };
    let classes = classify_edges(g);
    let mut rows = Vec::new();
    let mut skipped = Vec::new();

    match g.edges().next() {
        Some(e) => {
            let w = g.edge_word(e);
            rows.push(relation_row(&ctx, &w)?);
            rows.push(faithfulness_row(&ctx, &w)?);
        }
        None => skipped.push("R1, R4: the graph has no edges".to_string()),
    }

    match classes.eloop.first() {
        Some(&l) => {
            let l = g.edge_word(l);
            let v = l.initial();
            let name = g.path_name(&l);
            let vname = g.vertex_name(v).to_string();
            let a = |b: Backend| AlgebraElement::semicircular(g.clone(), b, &l);
            let proj = |c: Scalar| DiagonalElement::projection(v, c);
            let show = |d: &DiagonalElement| d.named(g).to_string();

            rows.push(ctx.row(
                "R2",
                "the second cumulant of the loop semicircular element is 2·L_v",
                format!("k_2(a_{name}, a_{name})"),
                format!("2·L_{vname}"),
                |b| {
                    let x = a(b)?;
                    let k = CumulantEngine::new(g.clone(), b).cumulant(&[x.clone(), x])?;
                    Ok((show(&k), k == proj(Scalar::int(2))))
                },
            )?);

            rows.push(ctx.row(
                "R3",
                "even moments are c_{n/2}·(2L_v)^{n/2}, so the fourth is 8·L_v",
                format!("E(a_{name}^4)"),
                format!("8·L_{vname}"),
                |b| {
                    let m = CumulantEngine::new(g.clone(), b).moment(&vec![a(b)?; 4])?;
                    Ok((show(&m), m == proj(Scalar::int(8))))
                },
            )?);

            rows.push(ctx.row(
                "R5",
                "a_l = L_l + L_l* is semicircular over the diagonal",
                format!("k_n(a_{name}, ..., a_{name}), n <= {max_order}"),
                "only k_2 nonzero".to_string(),
                |b| {
                    let r = check_semicircular(&a(b)?, max_order, b)?;
                    let text = match r.offenders.first() {
                        None => format!("semicircular to order {max_order}"),
                        Some(o) => format!("k_{} = {}", o.order, o.value),
                    };
                    Ok((text, r.verdict))
                },
            )?);

            rows.push(ctx.row(
                "R6",
                "rescaling a_l by 1/√2 gives second cumulant L_v",
                format!("k_2(a_{name}/√2, a_{name}/√2) = 1/2·k_2(a_{name}, a_{name})"),
                format!("L_{vname}"),
                |b| {
                    let x = a(b)?;
                    let k = CumulantEngine::new(g.clone(), b).cumulant(&[x.scale(&Scalar::ratio(1, 2)), x])?;
                    Ok((show(&k), k == proj(Scalar::one())))
                },
            )?);
        }
        None => skipped.push("R2, R3, R5, R6: the graph has no loop edge".to_string()),
    }

    rows.sort_by(|x, y| x.id.cmp(&y.id));
    Ok(AuditReport {
        graph: g.to_string(),
        backends: ctx.backends.iter().map(|b| b.kind().to_string()).collect(),
        rows,
        skipped,
    })
}

fn relation_row(ctx: &Ctx<'_>, w: &PathWord) -> Result<AuditRow> {
    let g = ctx.g;
    let name = g.path_name(w);
    let v1 = g.vertex_name(w.initial()).to_string();
    ctx.row(
        "R1",
        "L_w L_w* = L_{v1} for every edge w with initial vertex v1",
        format!("L_{name} L_{name}*"),
        format!("L_{v1}"),
        |b| {
            let lw = AlgebraElement::creation(g.clone(), b, w)?;
            let p = lw.mul(&lw.adjoint())?;
            let target = AlgebraElement::monomial(g.clone(), b, Monomial::vertex(w.initial()))?;
            if p == target {
                return Ok((format!("L_{v1}"), true));
            }
            let idempotent = p.mul(&p)? == p;
            let kind = if idempotent { "idempotent" } else { "element" };
            Ok((format!("{p} (non-vertex {kind})"), false))
        },
    )
}

fn faithfulness_row(ctx: &Ctx<'_>, w: &PathWord) -> Result<AuditRow> {
    let g = ctx.g;
    let name = g.path_name(w);
    ctx.row(
        "R4",
        "E is faithful: E(a*a) = 0 forces a = 0",
        format!("E(a*a) for a in {{L_{name}, L_{name}*, L_{name} + L_{name}*}}"),
        "faithful".to_string(),
        |b| {
            let lw = AlgebraElement::creation(g.clone(), b, w)?;
            let samples = [lw.clone(), lw.adjoint(), lw.add(&lw.adjoint())?];
            let r = faithfulness_probe(g, b, &samples)?;
            Ok(match r.counterexamples.first() {
                None => (format!("faithful on {} samples", r.samples.len()), true),
                Some(c) => (format!("counterexample {c}"), false),
            })
        },
    )
}
