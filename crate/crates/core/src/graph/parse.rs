use super::Graph;
use crate::error::{Error, Result};

/// Parses the line-oriented graph description format:
///
/// ```text
/// # comment
/// vertices: v1 v2
/// edge e: v1 -> v2
/// ```
///
/// Edge declaration order is preserved.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut cur = Cursor::new(line, lineno + 1);
        cur.skip_ws();
        if cur.at_end() {
            continue;
        }
        let keyword_col = cur.column();
        let keyword = cur.ident()?;
        match keyword.as_str() {
            "vertices" => {
                cur.skip_ws();
                cur.expect(':')?;
                if vertices.is_some() {
                    return Err(cur.error_at(keyword_col, "second `vertices:` line"));
                }
                let mut names = Vec::new();
                loop {
                    cur.skip_ws();
                    if cur.at_end() {
                        break;
                    }
                    names.push(cur.ident()?);
                }
                vertices = Some(names);
            }
            "edge" => {
                cur.require_ws()?;
                let id = cur.ident()?;
                cur.skip_ws();
                cur.expect(':')?;
                cur.skip_ws();
                let from = cur.ident()?;
                cur.skip_ws();
                cur.expect('-')?;
                cur.expect('>')?;
                cur.skip_ws();
                let to = cur.ident()?;
                cur.skip_ws();
                if !cur.at_end() {
                    return Err(cur.error("trailing characters after edge declaration"));
                }
                edges.push((id, from, to));
            }
            other => return Err(cur.error_at(keyword_col, &format!("expected `vertices:` or `edge`, found `{other}`"))),
        }
    }

    Graph::new(vertices.unwrap_or_default(), edges)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn require_ws(&mut self) -> Result<()> {
        if !matches!(self.peek(), Some(c) if c.is_whitespace()) {
            return Err(self.error("expected whitespace"));
        }
        self.skip_ws();
        Ok(())
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.pos += 1,
            _ => return Err(self.error("expected identifier")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn error(&self, message: &str) -> Error {
        self.error_at(self.column(), message)
    }

    fn error_at(&self, column: usize, message: &str) -> Error {
        Error::Syntax {
            line: self.line,
            column,
            message: message.to_string(),
        }
    }
}
