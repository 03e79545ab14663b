//! Text form of expressions.
//!
//! ```text
//! expr := "(" "create" label vertex ")"
//!       | "(" "union" expr expr ")"
//!       | "(" "join" label label expr ")"
//!       | "(" "rename" label label expr ")"
//! ```
//!
//! Labels and vertex ids are decimal integers; whitespace (including
//! newlines) separates tokens. Printing is the `Display` impl of
//! [`CwdExpr`].

use super::{CwdExpr, Label};
use crate::error::{Error, Result};

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(Token<'_>, usize)> {
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let mut rest = line;
        loop {
            rest = rest.trim_start();
            let Some(c) = rest.chars().next() else { break };
            match c {
                '(' => {
                    out.push((Token::Open, line_no + 1));
                    rest = &rest[1..];
                }
                ')' => {
                    out.push((Token::Close, line_no + 1));
                    rest = &rest[1..];
                }
                _ => {
                    let end = rest
                        .find(|ch: char| ch.is_whitespace() || ch == '(' || ch == ')')
                        .unwrap_or(rest.len());
                    out.push((Token::Atom(&rest[..end]), line_no + 1));
                    rest = &rest[end..];
                }
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<(Token<'a>, usize)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn line(&self) -> usize {
        self.tokens
            .get(self.pos)
            .or(self.tokens.last())
            .map_or(1, |(_, l)| *l)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line(),
            message: message.into(),
        }
    }

    fn next(&mut self) -> Result<&Token<'a>> {
        let line = self.line();
        let t = self.tokens.get(self.pos).map(|(t, _)| t).ok_or(Error::Parse {
            line,
            message: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        match self.next()? {
            Token::Atom(s) => {
                let s = *s;
                s.parse().map_err(|_| {
                    self.pos -= 1;
                    self.err(format!("expected {what}, found `{s}`"))
                })
            }
            _ => {
                self.pos -= 1;
                Err(self.err(format!("expected {what}")))
            }
        }
    }

    fn expr(&mut self) -> Result<CwdExpr> {
        if *self.next()? != Token::Open {
            self.pos -= 1;
            return Err(self.err("expected `(`"));
        }
        let op = match self.next()? {
            Token::Atom(s) => *s,
            _ => {
                self.pos -= 1;
                return Err(self.err("expected an operation name"));
            }
        };
        let e = match op {
            "create" => {
                let label: Label = self.number("a label")?;
                let vertex: usize = self.number("a vertex id")?;
                CwdExpr::create(label, vertex)
            }
            "union" => {
                let a = self.expr()?;
                let b = self.expr()?;
                CwdExpr::union(a, b)
            }
            "join" => {
                let i: Label = self.number("a label")?;
                let j: Label = self.number("a label")?;
                CwdExpr::join(i, j, self.expr()?)
            }
            "rename" => {
                let i: Label = self.number("a label")?;
                let j: Label = self.number("a label")?;
                CwdExpr::rename(i, j, self.expr()?)
            }
            other => {
                self.pos -= 1;
                return Err(self.err(format!("unknown operation `{other}`")));
            }
        };
        if *self.next()? != Token::Close {
            self.pos -= 1;
            return Err(self.err("expected `)`"));
        }
        Ok(e)
    }
}

/// Parses one expression. Errors carry the 1-based line of the offending
/// token.
pub fn parse_sexpr(text: &str) -> Result<CwdExpr> {
    let mut p = Parser {
        tokens: tokenize(text),
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.err("trailing input after the expression"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwd::expr_complete;

    #[test]
    fn round_trip() {
        let e = expr_complete(4).unwrap();
        let text = e.to_string();
        assert_eq!(parse_sexpr(&text).unwrap(), e);
    }

    #[test]
    fn multi_line_and_errors() {
        let e = parse_sexpr("(join 1 2\n  (union (create 1 0)\n         (create 2 1)))").unwrap();
        assert_eq!(e.width(), 2);
        match parse_sexpr("(union (create 1 0)\n (crate 2 1))") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_sexpr("(create 1 0) x").is_err());
        assert!(parse_sexpr("(create 1").is_err());
        assert!(parse_sexpr("(create -1 0)").is_err());
    }
}
