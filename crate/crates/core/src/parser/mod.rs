//! Text form of operator expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' int | '^' '(' ['-'] int ['/' int] ')')?
//! atom  := int | 'i' | symbol | generator
//!        | 'comm' '(' expr ',' expr ')' | 'adj' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Division is only by scalars, and fractional powers only apply to scalar
//! monomials. Products of operators keep the written order; [`parse`]
//! normal-orders the result.

mod lexer;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::{builtin, AlgebraError, AlgebraTable, Expr};
use crate::coeff::{CoeffError, Coefficient, Exponent};

use lexer::{tokenize, Tok};

/// Scalar symbols the parser accepts.
pub const SYMBOLS: &[&str] = &[
    "hbar", "theta", "eta", "mu", "omega", "xi", "gamma", "c2p", "q", "c", "B3", "c1", "c2", "alpha1",
    "alpha2", "K",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("unknown generator `{name}` at {line}:{col}")]
    UnknownGenerator { name: String, line: usize, col: usize },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid expression at {line}:{col}: {message}")]
    Invalid { line: usize, col: usize, message: String },
}

#[derive(Clone, Debug, PartialEq)]
pub enum NodeKind {
    Int(BigInt),
    Imag,
    Name(String),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Exponent),
    Comm(Box<Node>, Box<Node>),
    Adj(Box<Node>),
}

/// AST node with the position of its first token.
#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub span: Span,
}

/// Source text together with its syntax tree.
#[derive(Clone, Debug, PartialEq)]
pub struct SourceExpr {
    pub text: String,
    pub root: Node,
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, what: &str) -> Result<T, ParseError> {
        let s = self.span();
        Err(ParseError::Syntax {
            line: s.line,
            col: s.col,
            message: format!("expected {what}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(&t.describe())
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let span = lhs.span;
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let r = self.term()?;
                    lhs = Node { kind: NodeKind::Add(Box::new(lhs), Box::new(r)), span };
                }
                Tok::Minus => {
                    self.bump();
                    let r = self.term()?;
                    lhs = Node { kind: NodeKind::Sub(Box::new(lhs), Box::new(r)), span };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let span = lhs.span;
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    let r = self.unary()?;
                    lhs = Node { kind: NodeKind::Mul(Box::new(lhs), Box::new(r)), span };
                }
                Tok::Slash => {
                    self.bump();
                    let r = self.unary()?;
                    lhs = Node { kind: NodeKind::Div(Box::new(lhs), Box::new(r)), span };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if *self.peek() == Tok::Minus {
            let (_, span) = self.bump();
            let inner = self.unary()?;
            return Ok(Node { kind: NodeKind::Neg(Box::new(inner)), span });
        }
        self.power()
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                let s = self.span();
                self.bump();
                i64::try_from(n).map_err(|_| ParseError::Syntax {
                    line: s.line,
                    col: s.col,
                    message: "exponent out of range".into(),
                })
            }
            _ => self.fail("an integer"),
        }
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let e = if *self.peek() == Tok::LParen {
            self.bump();
            let neg = if *self.peek() == Tok::Minus {
                self.bump();
                true
            } else {
                false
            };
            let n = self.int()?;
            let d = if *self.peek() == Tok::Slash {
                self.bump();
                let s = self.span();
                let d = self.int()?;
                if d == 0 {
                    return Err(ParseError::Syntax { line: s.line, col: s.col, message: "zero denominator".into() });
                }
                d
            } else {
                1
            };
            self.expect(Tok::RParen)?;
            Exponent::new(if neg { -n } else { n }, d)
        } else {
            Exponent::from_integer(self.int()?)
        };
        let span = base.span;
        Ok(Node { kind: NodeKind::Pow(Box::new(base), e), span })
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Node { kind: NodeKind::Int(n), span })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "i" => Ok(Node { kind: NodeKind::Imag, span }),
                    "comm" => {
                        self.expect(Tok::LParen)?;
                        let a = self.expr()?;
                        self.expect(Tok::Comma)?;
                        let b = self.expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(Node { kind: NodeKind::Comm(Box::new(a), Box::new(b)), span })
                    }
                    "adj" => {
                        self.expect(Tok::LParen)?;
                        let a = self.expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(Node { kind: NodeKind::Adj(Box::new(a)), span })
                    }
                    _ => Ok(Node { kind: NodeKind::Name(name), span }),
                }
            }
            _ => self.fail("a number, name or `(`"),
        }
    }
}

/// Parses text into a syntax tree without resolving names.
pub fn parse_source(text: &str) -> Result<SourceExpr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let root = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.fail("an operator or end of input");
    }
    Ok(SourceExpr { text: text.to_string(), root })
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Coefficient),
    Op(Expr),
}

struct Eval<'a> {
    alg: Option<&'a Arc<AlgebraTable>>,
}

fn invalid(span: Span, message: impl Into<String>) -> ParseError {
    ParseError::Invalid { line: span.line, col: span.col, message: message.into() }
}

fn coeff_err(span: Span, e: CoeffError) -> ParseError {
    invalid(span, e.to_string())
}

fn alg_err(span: Span, e: AlgebraError) -> ParseError {
    invalid(span, e.to_string())
}

impl Eval<'_> {
    fn promote(&self, v: Value) -> Expr {
        match v {
            Value::Op(e) => e,
            Value::Scalar(c) => Expr::scalar(self.alg.expect("operators imply an algebra"), c),
        }
    }

    fn eval(&self, n: &Node) -> Result<Value, ParseError> {
        let span = n.span;
        Ok(match &n.kind {
            NodeKind::Int(k) => Value::Scalar(Coefficient::from(k.clone())),
            NodeKind::Imag => Value::Scalar(Coefficient::i()),
            NodeKind::Name(name) => {
                if let Some(g) = self.alg.and_then(|a| a.lookup(name).ok()) {
                    Value::Op(Expr::letter(self.alg.unwrap(), g))
                } else if SYMBOLS.contains(&name.as_str()) {
                    Value::Scalar(Coefficient::symbol(name))
                } else {
                    return Err(ParseError::UnknownGenerator { name: name.clone(), line: span.line, col: span.col });
                }
            }
            NodeKind::Neg(a) => match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(-c),
                Value::Op(e) => Value::Op(-e),
            },
            NodeKind::Add(a, b) | NodeKind::Sub(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                let sub = matches!(n.kind, NodeKind::Sub(..));
                match (x, y) {
                    (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if sub { x - y } else { x + y }),
                    (x, y) => {
                        let (x, y) = (self.promote(x), self.promote(y));
                        Value::Op(if sub { x - y } else { x + y })
                    }
                }
            }
            NodeKind::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
                (Value::Scalar(x), Value::Op(e)) | (Value::Op(e), Value::Scalar(x)) => Value::Op(e.scale(&x)),
                (Value::Op(x), Value::Op(y)) => Value::Op(x * y),
            },
            NodeKind::Div(a, b) => {
                let d = match self.eval(b)? {
                    Value::Scalar(d) => d,
                    Value::Op(_) => return Err(invalid(b.span, "division by an operator")),
                };
                let inv = d.inv().map_err(|e| coeff_err(b.span, e))?;
                match self.eval(a)? {
                    Value::Scalar(x) => Value::Scalar(x * inv),
                    Value::Op(e) => Value::Op(e.scale(&inv)),
                }
            }
            NodeKind::Pow(a, q) => match self.eval(a)? {
                Value::Scalar(x) => Value::Scalar(x.pow(*q).map_err(|e| coeff_err(span, e))?),
                Value::Op(e) => {
                    if !q.is_integer() || *q.numer() < 0 {
                        return Err(invalid(span, "operators only take non-negative integer powers"));
                    }
                    let mut acc = Expr::identity(e.algebra());
                    for _ in 0..q.to_integer() {
                        acc = &acc * &e;
                    }
                    Value::Op(acc)
                }
            },
            NodeKind::Comm(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Scalar(_), Value::Scalar(_)) => Value::Scalar(Coefficient::zero()),
                (x, y) => {
                    let (x, y) = (self.promote(x), self.promote(y));
                    Value::Op(crate::algebra::commutator(&x, &y).map_err(|e| alg_err(span, e))?)
                }
            },
            NodeKind::Adj(a) => match self.eval(a)? {
                Value::Scalar(c) => Value::Scalar(c.conj()),
                Value::Op(e) => Value::Op(e.adjoint()),
            },
        })
    }
}

/// Parses `text` over the named algebra and normal-orders the result.
pub fn parse(text: &str, algebra: &str) -> Result<Expr, ParseError> {
    let alg = builtin::lookup(algebra).map_err(|_| ParseError::UnknownAlgebra(algebra.to_string()))?;
    parse_in(text, &alg)
}

/// [`parse`] over an explicit table.
pub fn parse_in(text: &str, alg: &Arc<AlgebraTable>) -> Result<Expr, ParseError> {
    let src = parse_source(text)?;
    let ev = Eval { alg: Some(alg) };
    let v = ev.eval(&src.root)?;
    Ok(ev.promote(v).normal_order())
}

/// Parses a scalar expression; generator names are rejected.
pub fn parse_coefficient(text: &str) -> Result<Coefficient, ParseError> {
    let src = parse_source(text)?;
    match (Eval { alg: None }).eval(&src.root)? {
        Value::Scalar(c) => Ok(c),
        Value::Op(_) => unreachable!("no algebra, no operators"),
    }
}

/// Canonical text of an expression; `parse(render(e), ..) == e` for
/// normal-ordered `e`.
pub fn render(e: &Expr) -> String {
    e.render()
}

/// Exact rational from a decimal string such as `0.25` or `3/4`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{ip}{fp}").parse().ok()?;
    let scale = BigInt::from(10).pow(fp.len() as u32);
    let r = BigRational::new(digits, scale);
    Some(if neg { -r } else { r })
}

/// Coefficient helper used by the catalog for constants written in the DSL.
pub(crate) fn coeff(text: &str) -> Coefficient {
    parse_coefficient(text).unwrap_or_else(|e| panic!("constant `{text}`: {e}"))
}

#[cfg(test)]
mod tests;
