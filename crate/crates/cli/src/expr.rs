//! Polynomial expressions: `+ - * ^`, parentheses, integer literals and
//! single-letter variables. Evaluation happens in any ring.

use std::fmt;

use globfactor::Ring;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// Largest degree an expression may produce.
pub const MAX_DEGREE: usize = 1 << 16;
const MAX_NESTING: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { offset, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Var(char, usize),
    Int(BigInt),
    Ratio(BigInt, BigInt, usize),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, u64, usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn describe(&mut self) -> String {
        match self.peek() {
            None => "unexpected end of input".into(),
            Some(c) if c.is_ascii_graphic() => format!("unexpected '{}'", c as char),
            Some(_) => "unexpected character".into(),
        }
    }

    fn expr(&mut self) -> Result<Node, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return err(self.pos, "expression nested too deeply");
        }
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { Node::Add(acc.into(), rhs.into()) } else { Node::Sub(acc.into(), rhs.into()) };
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Node, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = Node::Mul(acc.into(), self.factor()?.into());
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Node, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let Some(e) = self.uint() else {
                let msg = self.describe();
                return err(self.pos, format!("{msg}, expected a nonnegative integer exponent"));
            };
            let e = e.to_u64().filter(|&e| e as usize <= MAX_DEGREE);
            let Some(e) = e else { return err(at, "exponent overflow") };
            return Ok(Node::Pow(base.into(), e, at));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn base(&mut self) -> Result<Node, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    let msg = self.describe();
                    return err(self.pos, format!("{msg}, expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    return err(self.pos, "expression nested too deeply");
                }
                let f = self.factor()?;
                self.depth -= 1;
                Ok(Node::Neg(f.into()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint().expect("digit present");
                if self.peek() == Some(b'/') {
                    let slash = self.pos;
                    self.pos += 1;
                    self.skip_ws();
                    let Some(d) = self.uint() else {
                        return err(self.pos, "'/' must be followed by an integer literal");
                    };
                    return Ok(Node::Ratio(n, d, slash));
                }
                Ok(Node::Int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return err(at, "variables are single letters");
                }
                Ok(Node::Var(c as char, at))
            }
            _ => {
                let msg = self.describe();
                err(self.pos, msg)
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Node, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, depth: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        let msg = p.describe();
        return err(p.pos, msg);
    }
    Ok(e)
}

/// How literals and variables map into a ring.
pub struct Target<'a, R: Ring> {
    pub ring: &'a R,
    pub vars: Vec<(char, R::Elem)>,
    pub int: &'a dyn Fn(&BigInt) -> R::Elem,
    /// `None` if division of literals is not allowed.
    pub ratio: Option<&'a dyn Fn(&BigInt, &BigInt) -> Option<R::Elem>>,
    pub degree: &'a dyn Fn(&R::Elem) -> usize,
    pub ring_name: &'a str,
}

impl<R: Ring> Target<'_, R> {
    pub fn eval(&self, node: &Node) -> Result<R::Elem, ParseError> {
        let r = self.ring;
        Ok(match node {
            Node::Var(c, at) => match self.vars.iter().find(|(v, _)| v == c) {
                Some((_, e)) => e.clone(),
                None => return err(*at, format!("variable '{c}' is not allowed in ring {}", self.ring_name)),
            },
            Node::Int(n) => (self.int)(n),
            Node::Ratio(n, d, at) => match self.ratio {
                None => return err(*at, format!("division is not allowed in ring {}", self.ring_name)),
                Some(f) => match f(n, d) {
                    Some(v) => v,
                    None => return err(*at, "division by zero"),
                },
            },
            Node::Add(a, b) => r.add(&self.eval(a)?, &self.eval(b)?),
            Node::Sub(a, b) => r.sub(&self.eval(a)?, &self.eval(b)?),
            Node::Mul(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                if (self.degree)(&x) + (self.degree)(&y) > MAX_DEGREE {
                    return err(0, "degree too large");
                }
                r.mul(&x, &y)
            }
            Node::Neg(a) => r.neg(&self.eval(a)?),
            Node::Pow(a, e, at) => {
                let x = self.eval(a)?;
                if (self.degree)(&x).saturating_mul(*e as usize) > MAX_DEGREE {
                    return err(*at, "exponent overflow");
                }
                r.pow(&x, *e)
            }
        })
    }
}
