//! The `--element` mini-language.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := item+                      juxtaposition is the product
//! item   := rational | 'L[' path ']' | 'L*[' path ']' | 'a:' path | '(' expr ')'
//! path   := '@' ident | ident ('.' ident)*
//! ```

use std::fmt;
use std::sync::Arc;

use gwstar::scalar::parse_rational;
use gwstar::{AlgebraElement, Backend, Graph, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "element expression, column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq)]
pub enum Item {
    Scalar(Scalar),
    Create(String),
    Annihilate(String),
    Semicircular(String),
    Group(Expr),
}

/// Signed sum of products.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr(pub Vec<(bool, Vec<Item>)>);

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.starts_with(s) {
            self.pos += s.chars().count();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut terms = Vec::new();
        let mut negative = self.eat("-");
        loop {
            terms.push((negative, self.term()?));
            if self.eat("+") {
                negative = false;
            } else if self.eat("-") {
                negative = true;
            } else {
                return Ok(Expr(terms));
            }
        }
    }

    fn term(&mut self) -> Result<Vec<Item>, ExprError> {
        let mut items = Vec::new();
        while let Some(item) = self.item()? {
            items.push(item);
        }
        if items.is_empty() {
            return Err(self.error("expected a scalar, `L[..]`, `L*[..]`, `a:..` or `(`"));
        }
        Ok(items)
    }

    fn item(&mut self) -> Result<Option<Item>, ExprError> {
        let Some(c) = self.peek() else {
            return Ok(None);
        };
        if c.is_ascii_digit() {
            return self.scalar().map(Some);
        }
        if self.eat("L*[") {
            let p = self.path()?;
            self.close(']')?;
            return Ok(Some(Item::Annihilate(p)));
        }
        if self.eat("L[") {
            let p = self.path()?;
            self.close(']')?;
            return Ok(Some(Item::Create(p)));
        }
        if self.eat("a:") {
            return Ok(Some(Item::Semicircular(self.path()?)));
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.close(')')?;
            return Ok(Some(Item::Group(e)));
        }
        if c == '+' || c == '-' || c == ')' {
            return Ok(None);
        }
        Err(self.error(format!("unexpected `{c}`")))
    }

    fn close(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(&c.to_string()) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn scalar(&mut self) -> Result<Item, ExprError> {
        let start = self.pos;
        let allowed = |c: char| c.is_ascii_digit() || c == '/';
        while self.chars.get(self.pos).is_some_and(|&c| allowed(c)) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let q = parse_rational(&text).map_err(|_| ExprError {
            column: start + 1,
            message: format!("invalid rational `{text}`"),
        })?;
        Ok(Item::Scalar(Scalar::new(q, Scalar::zero().im().clone())))
    }

    fn path(&mut self) -> Result<String, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let ok = |c: char| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '@';
        while self.chars.get(self.pos).is_some_and(|&c| ok(c)) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a path"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

impl Expr {
    /// Evaluates under `backend`.
    pub fn eval(&self, g: &Arc<Graph>, backend: Backend) -> gwstar::Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(g.clone(), backend);
        for (negative, items) in &self.0 {
            let mut term = AlgebraElement::identity(g.clone(), backend);
            for item in items {
                term = match item {
                    Item::Scalar(c) => term.scale(c),
                    Item::Create(p) => term.mul(&AlgebraElement::creation(g.clone(), backend, &g.parse_path(p)?)?)?,
                    Item::Annihilate(p) => {
                        term.mul(&AlgebraElement::annihilation(g.clone(), backend, &g.parse_path(p)?)?)?
                    }
                    Item::Semicircular(p) => {
                        term.mul(&AlgebraElement::semicircular(g.clone(), backend, &g.parse_path(p)?)?)?
                    }
                    Item::Group(e) => term.mul(&e.eval(g, backend)?)?,
                };
            }
            if *negative {
                term = term.scale(&Scalar::int(-1));
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Sum of generator lengths along the longest product; bounds every
    /// term length of the value.
    pub fn length_bound(&self) -> usize {
        self.0
            .iter()
            .map(|(_, items)| {
                items
                    .iter()
                    .map(|i| match i {
                        Item::Scalar(_) => 0,
                        Item::Create(p) | Item::Annihilate(p) | Item::Semicircular(p) => {
                            if p.starts_with('@') {
                                0
                            } else {
                                p.split('.').count()
                            }
                        }
                        Item::Group(e) => e.length_bound(),
                    })
                    .sum::<usize>()
            })
            .max()
            .unwrap_or(0)
    }
}
