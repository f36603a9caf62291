use num_bigint::BigInt;

use super::{ParseError, Span};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

pub fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut chars = text.char_indices().peekable();
    while let Some(&(off, ch)) = chars.peek() {
        let span = Span { line, col, offset: off };
        if ch == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(s.parse().expect("digits")), span));
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                s.push(c);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), span));
            continue;
        }
        let t = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => {
                return Err(ParseError::Syntax { line, col, message: format!("unexpected character `{ch}`") });
            }
        };
        chars.next();
        col += 1;
        out.push((t, span));
    }
    out.push((Tok::Eof, Span { line, col, offset: text.len() }));
    Ok(out)
}
