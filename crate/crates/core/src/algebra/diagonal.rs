use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::scalar::{rational_to_string, Scalar};

/// An element `Σ p_v L_v` of the diagonal subalgebra. Products are pointwise.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DiagonalElement {
    coeffs: BTreeMap<VertexId, Scalar>,
}

impl DiagonalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c · L_v`.
    pub fn projection(v: VertexId, c: Scalar) -> Self {
        let mut d = Self::zero();
        d.add_at(v, &c);
        d
    }

    /// `Σ_v L_v`, the unit of the diagonal.
    pub fn identity(g: &Graph) -> Self {
        g.vertices().map(|v| (v, Scalar::one())).collect()
    }

    pub fn get(&self, v: VertexId) -> Scalar {
        self.coeffs.get(&v).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Scalar)> {
        self.coeffs.iter().map(|(v, c)| (*v, c))
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_at(&mut self, v: VertexId, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(v).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.add_at(v, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            out.add_at(v, &-c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (v, c) in other.iter() {
            self.add_at(v, c);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .iter()
            .filter_map(|(v, a)| large.coeffs.get(&v).map(|b| (v, a * b)))
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.iter().map(|(v, x)| (v, x * c)).collect()
    }

    pub fn conj(&self) -> Self {
        self.iter().map(|(v, x)| (v, x.conj())).collect()
    }

    /// Compression onto the sub-diagonal spanned by `subset`.
    pub fn restrict(&self, g: &Graph, subset: &BTreeSet<VertexId>) -> Result<Self> {
        if let Some(v) = subset.iter().find(|v| !g.contains_vertex(**v)) {
            return Err(Error::UnknownVertex(format!("#{}", v.0)));
        }
        Ok(self
            .iter()
            .filter(|(v, _)| subset.contains(v))
            .map(|(v, c)| (v, c.clone()))
            .collect())
    }

    /// Graph-resolved form used in reports and JSON.
    pub fn named(&self, g: &Graph) -> NamedDiagonal {
        NamedDiagonal(
            self.iter()
                .map(|(v, c)| DiagonalTerm {
                    vertex: g.vertex_name(v).to_string(),
                    re: rational_to_string(c.re()),
                    im: rational_to_string(c.im()),
                    text: c.to_string(),
                })
                .collect(),
        )
    }
}

impl FromIterator<(VertexId, Scalar)> for DiagonalElement {
    fn from_iter<I: IntoIterator<Item = (VertexId, Scalar)>>(iter: I) -> Self {
        let mut d = DiagonalElement::zero();
        for (v, c) in iter {
            d.add_at(v, &c);
        }
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalTerm {
    pub vertex: String,
    pub re: String,
    pub im: String,
    #[serde(skip)]
    text: String,
}

/// A diagonal element with vertex names, e.g. `6·L_v + 1/2·L_w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NamedDiagonal(pub Vec<DiagonalTerm>);

impl NamedDiagonal {
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for NamedDiagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let text = if t.text.is_empty() {
                // deserialized values carry no display text
                if t.im == "0/1" {
                    t.re.trim_end_matches("/1").to_string()
                } else {
                    format!("({}+{}i)", t.re, t.im)
                }
            } else {
                t.text.clone()
            };
            if text == "1" {
                write!(f, "L_{}", t.vertex)?;
            } else {
                write!(f, "{}·L_{}", text, t.vertex)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn g2() -> Graph {
        parse_graph("vertices: v1 v2").unwrap()
    }

    #[test]
    fn restrict_examples() {
        let g = g2();
        let (v1, v2) = (g.vertex("v1").unwrap(), g.vertex("v2").unwrap());
        let d: DiagonalElement = [(v1, Scalar::int(1)), (v2, Scalar::int(5))].into_iter().collect();
        let s: BTreeSet<_> = [v1].into();
        let r = d.restrict(&g, &s).unwrap();
        assert_eq!(r, DiagonalElement::projection(v1, Scalar::int(1)));
        assert_eq!(d.restrict(&g, &g.vertex_set()).unwrap(), d);
        assert_eq!(r.restrict(&g, &s).unwrap(), r);
        let bogus: BTreeSet<_> = [VertexId(9)].into();
        assert!(d.restrict(&g, &bogus).is_err());
    }

    #[test]
    fn pointwise_products_and_display() {
        let g = g2();
        let (v1, v2) = (g.vertex("v1").unwrap(), g.vertex("v2").unwrap());
        let a: DiagonalElement = [(v1, Scalar::int(2)), (v2, Scalar::ratio(1, 2))].into_iter().collect();
        let b = DiagonalElement::projection(v2, Scalar::int(4));
        assert_eq!(a.mul(&b), DiagonalElement::projection(v2, Scalar::int(2)));
        assert_eq!(a.named(&g).to_string(), "2·L_v1 + 1/2·L_v2");
        assert_eq!(DiagonalElement::identity(&g).named(&g).to_string(), "L_v1 + L_v2");
        assert_eq!(a.sub(&a), DiagonalElement::zero());
        assert_eq!(DiagonalElement::zero().named(&g).to_string(), "0");
    }
}
