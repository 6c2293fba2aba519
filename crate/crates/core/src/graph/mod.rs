//! Finite directed multigraphs and the free semigroupoid of admissible paths.
//!
//! A [`Graph`] owns its vertex and edge identifiers; everything else refers to
//! them through the dense indices [`VertexId`] and [`EdgeId`], assigned in
//! declaration order. Words over a graph are [`PathWord`]s.

mod parse;
mod path;

pub use parse::parse_graph;
pub use path::{classify_edges, diagram_distinct, enumerate_paths, primitive_root, EdgeClasses, PathWord};

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

/// Process-unique tag of a constructed graph, used to reject mixed-graph operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphId(u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub initial: VertexId,
    pub terminal: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.initial == self.terminal
    }
}

/// A finite directed multigraph. Parallel edges and loop edges are allowed.
#[derive(Debug, Clone)]
pub struct Graph {
    id: GraphId,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from vertex names and `(edge, initial, terminal)` triples.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), VertexId(i as u32)).is_some() {
                return Err(Error::DuplicateIdentifier(v.clone()));
            }
        }
        let mut edge_index = HashMap::new();
        let mut out = Vec::new();
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (i, (id, from, to)) in edges.into_iter().enumerate() {
            if vertex_index.contains_key(&id) || edge_index.contains_key(&id) {
                return Err(Error::DuplicateIdentifier(id));
            }
            let lookup = |v: &str| {
                vertex_index.get(v).copied().ok_or_else(|| Error::UndeclaredVertex {
                    edge: id.clone(),
                    vertex: v.to_string(),
                })
            };
            let initial = lookup(&from)?;
            let terminal = lookup(&to)?;
            let eid = EdgeId(i as u32);
            edge_index.insert(id.clone(), eid);
            out_edges[initial.index()].push(eid);
            out.push(Edge { id, initial, terminal });
        }
        Ok(Graph {
            id: GraphId(NEXT_GRAPH_ID.fetch_add(1, Ordering::Relaxed)),
            vertices,
            edges: out,
            vertex_index,
            edge_index,
            out_edges,
        })
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.index()].id
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId> {
        self.edge_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(name.to_string()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertices.len()
    }

    /// Outgoing edges of `v` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices().collect()
    }

    /// The vertex word (unit of the semigroupoid) at `v`.
    pub fn vertex_word(&self, v: VertexId) -> PathWord {
        PathWord::vertex(self.id, v)
    }

    /// The length-one path of edge `e`.
    pub fn edge_word(&self, e: EdgeId) -> PathWord {
        let edge = self.edge(e);
        PathWord::from_parts(self.id, edge.initial, edge.terminal, vec![e])
    }

    /// Checks admissibility of an edge sequence and wraps it as a path.
    pub fn path(&self, edges: &[EdgeId]) -> Result<PathWord> {
        let Some(first) = edges.first() else {
            return Err(Error::InvalidArgument("empty edge sequence needs a vertex".into()));
        };
        for pair in edges.windows(2) {
            if self.edge(pair[0]).terminal != self.edge(pair[1]).initial {
                return Err(Error::NotAdmissible(
                    self.edge_name(pair[0]).to_string(),
                    self.edge_name(pair[1]).to_string(),
                ));
            }
        }
        let last = edges[edges.len() - 1];
        Ok(PathWord::from_parts(
            self.id,
            self.edge(*first).initial,
            self.edge(last).terminal,
            edges.to_vec(),
        ))
    }

    /// Parses `@v` (vertex word) or `.`-joined edge identifiers.
    pub fn parse_path(&self, text: &str) -> Result<PathWord> {
        let text = text.trim();
        if let Some(v) = text.strip_prefix('@') {
            return Ok(self.vertex_word(self.vertex(v)?));
        }
        if text.is_empty() {
            return Err(Error::InvalidArgument("empty path".into()));
        }
        let edges = text
            .split('.')
            .map(|e| self.edge_id(e.trim()))
            .collect::<Result<Vec<_>>>()?;
        self.path(&edges)
    }

    /// Renders a path as `@v` or `.`-joined edge identifiers.
    pub fn path_name(&self, w: &PathWord) -> String {
        if w.is_vertex() {
            format!("@{}", self.vertex_name(w.initial()))
        } else {
            let names: Vec<&str> = w.edges().iter().map(|&e| self.edge_name(e)).collect();
            names.join(".")
        }
    }

    /// Serializes the graph back into the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertices.join(" "));
        for e in &self.edges {
            s.push_str(&format!(
                "edge {}: {} -> {}\n",
                e.id,
                self.vertex_name(e.initial),
                self.vertex_name(e.terminal)
            ));
        }
        s
    }

    pub(crate) fn check_word(&self, w: &PathWord) -> Result<()> {
        if w.graph() == self.id {
            Ok(())
        } else {
            Err(Error::MixedGraph)
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vertex_count();
        let e = self.edge_count();
        write!(
            f,
            "{} vert{}, {} edge{}",
            v,
            if v == 1 { "ex" } else { "ices" },
            e,
            if e == 1 { "" } else { "s" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(e: &str, a: &str, b: &str) -> (String, String, String) {
        (e.into(), a.into(), b.into())
    }

    #[test]
    fn rejects_duplicate_and_clashing_ids() {
        assert_eq!(
            Graph::new(["v", "v"], []).unwrap_err(),
            Error::DuplicateIdentifier("v".into())
        );
        assert_eq!(
            Graph::new(["v"], [triple("v", "v", "v")]).unwrap_err(),
            Error::DuplicateIdentifier("v".into())
        );
        assert_eq!(
            Graph::new(["v"], [triple("e", "v", "v"), triple("e", "v", "v")]).unwrap_err(),
            Error::DuplicateIdentifier("e".into())
        );
    }

    #[test]
    fn summary_line() {
        let g = Graph::new(["v1", "v2"], [triple("e", "v1", "v2")]).unwrap();
        assert_eq!(g.to_string(), "2 vertices, 1 edge");
    }

    #[test]
    fn path_parsing_and_naming() {
        let g = Graph::new(["v"], [triple("l", "v", "v")]).unwrap();
        let w = g.parse_path("l.l").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(g.path_name(&w), "l.l");
        assert_eq!(g.path_name(&g.parse_path("@v").unwrap()), "@v");
        assert!(g.parse_path("x").is_err());
    }
}
