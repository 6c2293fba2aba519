use super::{EdgeId, Graph, GraphId, VertexId};
use crate::error::{Error, Result};

/// An element of the free semigroupoid: a vertex word or an admissible finite
/// path, travelled left to right (`final(e_i) = initial(e_{i+1})`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    graph: GraphId,
    initial: VertexId,
    terminal: VertexId,
    edges: Vec<EdgeId>,
}

impl PathWord {
    pub(crate) fn vertex(graph: GraphId, v: VertexId) -> Self {
        PathWord {
            graph,
            initial: v,
            terminal: v,
            edges: Vec::new(),
        }
    }

    pub(crate) fn from_parts(graph: GraphId, initial: VertexId, terminal: VertexId, edges: Vec<EdgeId>) -> Self {
        PathWord {
            graph,
            initial,
            terminal,
            edges,
        }
    }

    pub fn graph(&self) -> GraphId {
        self.graph
    }

    pub fn initial(&self) -> VertexId {
        self.initial
    }

    pub fn terminal(&self) -> VertexId {
        self.terminal
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// A finite path whose endpoints coincide. Vertex words are not loops.
    pub fn is_loop(&self) -> bool {
        !self.edges.is_empty() && self.initial == self.terminal
    }

    /// Travel `self` then `other`. `None` when `final(self) != initial(other)`.
    pub fn concat(&self, other: &PathWord) -> Result<Option<PathWord>> {
        if self.graph != other.graph {
            return Err(Error::MixedGraph);
        }
        if self.terminal != other.initial {
            return Ok(None);
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(Some(PathWord {
            graph: self.graph,
            initial: self.initial,
            terminal: other.terminal,
            edges,
        }))
    }

    /// `self^k` for a loop (or vertex word); `k = 0` gives the base vertex word.
    pub fn pow(&self, k: usize) -> Option<PathWord> {
        if !self.is_vertex() && !self.is_loop() && k > 1 {
            return None;
        }
        if k == 0 {
            return Some(PathWord::vertex(self.graph, self.initial));
        }
        Some(PathWord {
            graph: self.graph,
            initial: self.initial,
            terminal: self.terminal,
            edges: self.edges.repeat(k),
        })
    }

    /// If `self = prefix · rest`, returns `rest` (a vertex word when equal).
    pub fn strip_prefix(&self, prefix: &PathWord) -> Option<PathWord> {
        if self.graph != prefix.graph || self.initial != prefix.initial {
            return None;
        }
        let rest = self.edges.strip_prefix(prefix.edges.as_slice())?;
        Some(PathWord {
            graph: self.graph,
            initial: prefix.terminal,
            terminal: self.terminal,
            edges: rest.to_vec(),
        })
    }
}

/// All elements of the free semigroupoid with length at most `max_len`:
/// vertex words first, then paths by length, then lexicographically by edge
/// declaration index.
pub fn enumerate_paths(g: &Graph, max_len: usize) -> Vec<PathWord> {
    let mut out: Vec<PathWord> = g.vertices().map(|v| g.vertex_word(v)).collect();
    if max_len == 0 {
        return out;
    }
    let mut level: Vec<PathWord> = g.edges().map(|e| g.edge_word(e)).collect();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for w in &level {
            for &e in g.out_edges(w.terminal) {
                let mut edges = w.edges.clone();
                edges.push(e);
                next.push(PathWord {
                    graph: w.graph,
                    initial: w.initial,
                    terminal: g.edge(e).terminal,
                    edges,
                });
            }
        }
        // out_edges are in index order, so the level stays lexicographic
        out.append(&mut level);
        level = next;
    }
    out.append(&mut level);
    out
}

/// Shortest loop `p` and power `k` with `w = p^k`.
pub fn primitive_root(w: &PathWord) -> Result<(PathWord, usize)> {
    if !w.is_loop() {
        return Err(Error::NotALoop(format!("{:?}", w.edges)));
    }
    let n = w.len();
    let period = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| w.edges[i] == w.edges[i - d]))
        .unwrap_or(n);
    let root = PathWord {
        graph: w.graph,
        initial: w.initial,
        terminal: w.initial,
        edges: w.edges[..period].to_vec(),
    };
    Ok((root, n / period))
}

/// Graphical inequality of two finite paths. Equal words, and loops that are
/// powers of one primitive loop, are not diagram-distinct; rotations of a
/// cycle (`ef` vs `fe`) count as distinct.
pub fn diagram_distinct(w1: &PathWord, w2: &PathWord) -> Result<bool> {
    if w1.graph != w2.graph {
        return Err(Error::MixedGraph);
    }
    for w in [w1, w2] {
        if w.is_vertex() {
            return Err(Error::VertexWord(format!("{:?}", w.initial)));
        }
    }
    if w1 == w2 {
        return Ok(false);
    }
    if w1.is_loop() && w2.is_loop() {
        let (r1, _) = primitive_root(w1)?;
        let (r2, _) = primitive_root(w2)?;
        return Ok(r1 != r2);
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClasses {
    /// Loop edges; a length-one loop is always basic.
    pub eloop: Vec<EdgeId>,
    pub eloop_c: Vec<EdgeId>,
}

pub fn classify_edges(g: &Graph) -> EdgeClasses {
    let (eloop, eloop_c) = g.edges().partition(|&e| g.edge(e).is_loop());
    EdgeClasses { eloop, eloop_c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use proptest::prelude::*;

    fn one_loop() -> Graph {
        parse_graph("vertices: v\nedge l: v -> v").unwrap()
    }

    fn single_edge() -> Graph {
        parse_graph("vertices: v1 v2\nedge e: v1 -> v2").unwrap()
    }

    fn names(g: &Graph, ws: &[PathWord]) -> Vec<String> {
        ws.iter().map(|w| g.path_name(w)).collect()
    }

    /// Independent oracle: every edge sequence of length <= max_len, filtered
    /// by admissibility.
    fn brute_force_paths(g: &Graph, max_len: usize) -> Vec<Vec<EdgeId>> {
        let mut all: Vec<Vec<EdgeId>> = vec![vec![]];
        let mut out = Vec::new();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for seq in &all {
                for e in g.edges() {
                    let mut s = seq.clone();
                    s.push(e);
                    next.push(s);
                }
            }
            for s in &next {
                if g.path(s).is_ok() {
                    out.push(s.clone());
                }
            }
            all = next;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    #[test]
    fn concat_examples() {
        let g = single_edge();
        let v1 = g.vertex_word(g.vertex("v1").unwrap());
        let e = g.parse_path("e").unwrap();
        assert_eq!(v1.concat(&e).unwrap(), Some(e.clone()));
        assert_eq!(e.concat(&e).unwrap(), None);

        let g = one_loop();
        let l = g.parse_path("l").unwrap();
        let ll = l.concat(&l).unwrap().unwrap();
        assert_eq!(ll.len(), 2);
        assert!(ll.is_loop());
    }

    #[test]
    fn concat_rejects_mixed_graphs() {
        let a = one_loop();
        let b = one_loop();
        let la = a.parse_path("l").unwrap();
        let lb = b.parse_path("l").unwrap();
        assert_eq!(la.concat(&lb), Err(Error::MixedGraph));
    }

    #[test]
    fn enumerate_examples() {
        let g = one_loop();
        assert_eq!(names(&g, &enumerate_paths(&g, 2)), ["@v", "l", "l.l"]);
        let g = single_edge();
        assert_eq!(names(&g, &enumerate_paths(&g, 3)), ["@v1", "@v2", "e"]);
        assert_eq!(enumerate_paths(&g, 0).len(), g.vertex_count());
    }

    #[test]
    fn enumerate_matches_brute_force() {
        let g = parse_graph(
            "vertices: a b c\nedge x: a -> b\nedge y: b -> a\nedge z: b -> c\nedge w: a -> a\nedge u: c -> a",
        )
        .unwrap();
        for k in 0..=4 {
            let got: Vec<Vec<EdgeId>> = enumerate_paths(&g, k)
                .into_iter()
                .filter(|w| !w.is_vertex())
                .map(|w| w.edges().to_vec())
                .collect();
            assert_eq!(got, brute_force_paths(&g, k), "max_len {k}");
        }
        assert_eq!(enumerate_paths(&g, 1).len(), g.vertex_count() + g.edge_count());
    }

    #[test]
    fn primitive_root_examples() {
        let g = one_loop();
        let l = g.parse_path("l").unwrap();
        assert_eq!(primitive_root(&l).unwrap(), (l.clone(), 1));
        assert_eq!(primitive_root(&g.parse_path("l.l").unwrap()).unwrap(), (l, 2));

        let g = parse_graph("vertices: a b\nedge e: a -> b\nedge f: b -> a").unwrap();
        let ef = g.parse_path("e.f").unwrap();
        assert_eq!(primitive_root(&g.parse_path("e.f.e.f").unwrap()).unwrap(), (ef, 2));
        assert!(primitive_root(&g.parse_path("e").unwrap()).is_err());
        assert!(primitive_root(&g.parse_path("@a").unwrap()).is_err());
    }

    #[test]
    fn diagram_distinct_examples() {
        let g = one_loop();
        let l = g.parse_path("l").unwrap();
        let ll = g.parse_path("l.l").unwrap();
        assert!(!diagram_distinct(&l, &ll).unwrap());
        assert!(!diagram_distinct(&ll, &ll).unwrap());
        assert!(diagram_distinct(&l, &g.parse_path("@v").unwrap()).is_err());

        let g = parse_graph("vertices: v1 v2\nedge e1: v1 -> v2\nedge e2: v1 -> v2").unwrap();
        let e1 = g.parse_path("e1").unwrap();
        let e2 = g.parse_path("e2").unwrap();
        assert!(diagram_distinct(&e1, &e2).unwrap());

        // rotations of one cycle are kept apart
        let g = parse_graph("vertices: a b\nedge e: a -> b\nedge f: b -> a").unwrap();
        let ef = g.parse_path("e.f").unwrap();
        let fe = g.parse_path("f.e").unwrap();
        assert!(diagram_distinct(&ef, &fe).unwrap());
    }

    #[test]
    fn classify_examples() {
        let g = one_loop();
        let c = classify_edges(&g);
        assert_eq!(c.eloop.len(), 1);
        assert!(c.eloop_c.is_empty());

        let g = parse_graph(
            "vertices: v1 v2\nedge l1_1: v1 -> v1\nedge l1_2: v1 -> v1\nedge l2_1: v2 -> v2\n\
             edge l2_2: v2 -> v2\nedge l2_3: v2 -> v2\nedge e: v1 -> v2",
        )
        .unwrap();
        let c = classify_edges(&g);
        let loops: Vec<&str> = c.eloop.iter().map(|&e| g.edge_name(e)).collect();
        assert_eq!(loops, ["l1_1", "l1_2", "l2_1", "l2_2", "l2_3"]);
        assert_eq!(c.eloop_c, vec![g.edge_id("e").unwrap()]);

        let g = parse_graph("vertices: v1 v2 v3\nedge e1: v1 -> v2\nedge e2: v2 -> v3\nedge e3: v3 -> v1").unwrap();
        let c = classify_edges(&g);
        assert!(c.eloop.is_empty());
        assert_eq!(c.eloop_c.len(), 3);
    }

    fn cyclic_graph() -> Graph {
        parse_graph("vertices: a b\nedge x: a -> b\nedge y: b -> a\nedge p: a -> a\nedge q: b -> b\nedge r: a -> b")
            .unwrap()
    }

    proptest! {
        #[test]
        fn concat_is_associative(i in 0usize..40, j in 0usize..40, k in 0usize..40) {
            let g = cyclic_graph();
            let ws = enumerate_paths(&g, 2);
            let (a, b, c) = (&ws[i % ws.len()], &ws[j % ws.len()], &ws[k % ws.len()]);
            let left = a.concat(b).unwrap().map(|ab| ab.concat(c).unwrap());
            let right = b.concat(c).unwrap().map(|bc| a.concat(&bc).unwrap());
            if let (Some(l), Some(r)) = (left, right) {
                prop_assert_eq!(l, r);
            }
        }

        #[test]
        fn primitive_root_reconcatenates(i in 0usize..200, k in 1usize..4) {
            let g = cyclic_graph();
            let loops: Vec<PathWord> = enumerate_paths(&g, 3).into_iter().filter(|w| w.is_loop()).collect();
            let w = loops[i % loops.len()].pow(k).unwrap();
            let (root, power) = primitive_root(&w).unwrap();
            prop_assert!(power >= k);
            prop_assert_eq!(root.pow(power).unwrap(), w);
            prop_assert_eq!(primitive_root(&root).unwrap().1, 1);
        }

        #[test]
        fn diagram_distinct_symmetric(i in 0usize..200, j in 0usize..200) {
            let g = cyclic_graph();
            let ws: Vec<PathWord> = enumerate_paths(&g, 3).into_iter().filter(|w| !w.is_vertex()).collect();
            let (a, b) = (&ws[i % ws.len()], &ws[j % ws.len()]);
            let d = diagram_distinct(a, b).unwrap();
            prop_assert_eq!(d, diagram_distinct(b, a).unwrap());
            if !a.is_loop() || !b.is_loop() {
                prop_assert_eq!(d, a.edges() != b.edges());
            }
        }
    }
}
