//! Reports that only the command line produces: graph summaries, path
//! listings and raw moment/cumulant series.

use serde::Serialize;

use gwstar::algebra::ElementJson;
use gwstar::analyzers::table::Table;
use gwstar::graph::{enumerate_paths, primitive_root};
use gwstar::{Graph, NamedDiagonal, Result};

#[derive(Debug, Serialize)]
pub struct EdgeSummary {
    pub id: String,
    pub from: String,
    pub to: String,
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub summary: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSummary>,
}

fn count(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

pub fn validate(g: &Graph) -> ValidateReport {
    ValidateReport {
        summary: format!(
            "{}, {}",
            count(g.vertex_count(), "vertex", "vertices"),
            count(g.edge_count(), "edge", "edges")
        ),
        vertices: g.vertices().map(|v| g.vertex_name(v).to_string()).collect(),
        edges: g
            .edges()
            .map(|e| {
                let edge = g.edge(e);
                EdgeSummary {
                    id: g.edge_name(e).to_string(),
                    from: g.vertex_name(edge.initial).to_string(),
                    to: g.vertex_name(edge.terminal).to_string(),
                    kind: if edge.is_loop() { "loop" } else { "edge" },
                }
            })
            .collect(),
    }
}

impl ValidateReport {
    pub fn to_text(&self) -> String {
        let mut t = Table::new(["edge", "from", "to", "kind"]);
        for e in &self.edges {
            t.row([e.id.as_str(), &e.from, &e.to, e.kind]);
        }
        format!(
            "{}\nvertices: {}\n\n{}",
            self.summary,
            self.vertices.join(" "),
            t.render()
        )
    }
}

#[derive(Debug, Serialize)]
pub struct PathEntry {
    pub word: String,
    pub length: usize,
    pub initial: String,
    pub terminal: String,
    /// `vertex`, `path`, `basic loop`, or `loop` for a proper power.
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct PathsReport {
    pub max_length: usize,
    pub count: usize,
    pub paths: Vec<PathEntry>,
}

pub fn paths(g: &Graph, max_length: usize) -> Result<PathsReport> {
    let mut out = Vec::new();
    for w in enumerate_paths(g, max_length) {
        let kind = if w.is_vertex() {
            "vertex"
        } else if !w.is_loop() {
            "path"
        } else if primitive_root(&w)?.1 == 1 {
            "basic loop"
        } else {
            "loop"
        };
        out.push(PathEntry {
            word: g.path_name(&w),
            length: w.len(),
            initial: g.vertex_name(w.initial()).to_string(),
            terminal: g.vertex_name(w.terminal()).to_string(),
            kind,
        });
    }
    Ok(PathsReport {
        max_length,
        count: out.len(),
        paths: out,
    })
}

impl PathsReport {
    pub fn to_text(&self) -> String {
        let mut t = Table::new(["path", "length", "from", "to", "kind"]);
        for p in &self.paths {
            t.row([
                p.word.clone(),
                p.length.to_string(),
                p.initial.clone(),
                p.terminal.clone(),
                p.kind.to_string(),
            ]);
        }
        format!(
            "{} paths of length <= {}\n\n{}",
            self.count,
            self.max_length,
            t.render()
        )
    }
}

#[derive(Debug, Serialize)]
pub struct SeriesRow {
    pub order: usize,
    pub quantity: String,
    pub value: NamedDiagonal,
}

/// Moments or cumulants: powers of one element, or a single mixed value.
#[derive(Debug, Serialize)]
pub struct SeriesReport {
    pub kind: &'static str,
    pub backend: String,
    pub elements: Vec<String>,
    /// The same elements in the element JSON schema.
    pub element_terms: Vec<ElementJson>,
    pub rows: Vec<SeriesRow>,
}

impl SeriesReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\nbackend: {}\n", self.kind, self.backend);
        for (i, e) in self.elements.iter().enumerate() {
            let name = if self.elements.len() == 1 {
                "a".to_string()
            } else {
                format!("a{}", i + 1)
            };
            s.push_str(&format!("{name} = {e}\n"));
        }
        let mut t = Table::new(["n", "quantity", "value"]);
        for r in &self.rows {
            t.row([r.order.to_string(), r.quantity.clone(), r.value.to_string()]);
        }
        s.push('\n');
        s.push_str(&t.render());
        s
    }
}

/// `E(a^n)` / `k_n(a, ..., a)` for one element, otherwise the mixed label.
pub fn quantity(kind: &str, n: usize, elements: usize) -> String {
    let names: Vec<String> = if elements == 1 {
        vec!["a".into(); n]
    } else {
        (1..=n).map(|i| format!("a{i}")).collect()
    };
    match (kind, elements) {
        ("moments", 1) => format!("E(a^{n})"),
        ("moments", _) => format!("E({})", names.join(" ")),
        (_, 1) if n > 3 => format!("k_{n}(a, ..., a)"),
        _ => format!("k_{n}({})", names.join(", ")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gwstar::parse_graph;

    #[test]
    fn summary_wording() {
        let g = parse_graph("vertices: v1 v2\nedge e: v1 -> v2").unwrap();
        assert_eq!(validate(&g).summary, "2 vertices, 1 edge");
        let g = parse_graph("vertices: v\nedge a: v -> v\nedge b: v -> v").unwrap();
        assert_eq!(validate(&g).summary, "1 vertex, 2 edges");
    }

    #[test]
    fn path_kinds() {
        let g = parse_graph("vertices: v w\nedge l: v -> v\nedge e: v -> w").unwrap();
        let r = paths(&g, 2).unwrap();
        let kinds: Vec<(&str, &str)> = r.paths.iter().map(|p| (p.word.as_str(), p.kind)).collect();
        assert!(kinds.contains(&("l", "basic loop")));
        assert!(kinds.contains(&("l.l", "loop")));
        assert!(kinds.contains(&("l.e", "path")));
        assert!(kinds.iter().filter(|k| k.1 == "vertex").count() == 2);
    }

    #[test]
    fn labels() {
        assert_eq!(quantity("moments", 4, 1), "E(a^4)");
        assert_eq!(quantity("moments", 3, 3), "E(a1 a2 a3)");
        assert_eq!(quantity("cumulants", 2, 1), "k_2(a, a)");
        assert_eq!(quantity("cumulants", 5, 1), "k_5(a, ..., a)");
        assert_eq!(quantity("cumulants", 2, 2), "k_2(a1, a2)");
    }
}
