//! Expression grammar shared by every element type.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := (atom | '(' expr ')') ('^' integer)?
//! atom   := generator | rational | 'q'
//! ```

use std::fmt;

use qgroup::CycScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((pos, Tok::Int(chars[start..i].iter().map(|p| p.1).collect())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|p| p.1).collect())));
        } else {
            return err(pos, format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal in decimal.
    Int(String),
    Q,
    Gen { name: String, position: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow { base: Box<Expr>, exp: i64, position: usize },
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |t| t.0)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let pos = self.pos();
                    match self.toks.get(self.i) {
                        Some((_, Tok::Int(s))) => {
                            let s = s.clone();
                            self.i += 1;
                            acc = Expr::Div(Box::new(acc), Box::new(Expr::Int(s)));
                        }
                        _ => return err(pos, "expected an integer denominator"),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        let base = match self.toks.get(self.i).cloned() {
            Some((_, Tok::LParen)) => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return err(self.pos(), "expected ')'");
                }
                self.i += 1;
                e
            }
            Some((_, Tok::Int(s))) => {
                self.i += 1;
                Expr::Int(s)
            }
            Some((_, Tok::Ident(name))) => {
                self.i += 1;
                if name == "q" {
                    Expr::Q
                } else {
                    Expr::Gen { name, position: pos }
                }
            }
            Some(_) => return err(pos, "expected a generator, number, 'q' or '('"),
            None => return err(pos, "unexpected end of input"),
        };
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.i += 1;
        let epos = self.pos();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            true
        } else {
            false
        };
        let exp = match self.toks.get(self.i) {
            Some((_, Tok::Int(s))) => match s.parse::<i64>() {
                Ok(v) => v,
                Err(_) => return err(epos, "exponent too large"),
            },
            _ => return err(self.pos(), "expected an integer exponent"),
        };
        self.i += 1;
        Ok(Expr::Pow { base: Box::new(base), exp: if neg { -exp } else { exp }, position: epos })
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, i: 0, end: text.len() };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(e)
}

/// Operations an element type needs for evaluation.
pub trait Evaluate {
    type Value: Clone;

    fn scalar(&self, c: CycScalar) -> Self::Value;
    /// `None` if `name` is not a generator of this algebra.
    fn generator(&self, name: &str) -> Option<Self::Value>;
    /// Generators that may carry a negative exponent.
    fn invertible(&self, name: &str) -> bool;
    fn order(&self) -> u32;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn field(&self) -> &std::sync::Arc<qgroup::CycField>;
    fn algebra_name(&self) -> &'static str;
}

/// Evaluation result: either a plain scalar or an algebra element.
enum Val<V> {
    S(CycScalar),
    E(V),
}

pub fn evaluate<A: Evaluate>(alg: &A, e: &Expr) -> Result<A::Value, ParseError> {
    Ok(match eval(alg, e)? {
        Val::S(c) => alg.scalar(c),
        Val::E(v) => v,
    })
}

fn lift<A: Evaluate>(alg: &A, v: Val<A::Value>) -> A::Value {
    match v {
        Val::S(c) => alg.scalar(c),
        Val::E(v) => v,
    }
}

fn int_scalar(field: &std::sync::Arc<qgroup::CycField>, digits: &str) -> CycScalar {
    let ten = CycScalar::from_int(field, 10);
    digits.bytes().fold(CycScalar::zero(field), |acc, d| &(&acc * &ten) + &CycScalar::from_int(field, (d - b'0') as i64))
}

fn eval<A: Evaluate>(alg: &A, e: &Expr) -> Result<Val<A::Value>, ParseError> {
    let field = alg.field();
    Ok(match e {
        Expr::Int(s) => Val::S(int_scalar(field, s)),
        Expr::Q => Val::S(CycScalar::q(field)),
        Expr::Gen { name, position } => match alg.generator(name) {
            Some(v) => Val::E(v),
            None => return err(*position, format!("'{name}' is not a generator of {}", alg.algebra_name())),
        },
        Expr::Neg(a) => match eval(alg, a)? {
            Val::S(c) => Val::S(-c),
            Val::E(v) => Val::E(alg.sub(&alg.scalar(CycScalar::zero(field)), &v)),
        },
        Expr::Add(a, b) => match (eval(alg, a)?, eval(alg, b)?) {
            (Val::S(x), Val::S(y)) => Val::S(&x + &y),
            (x, y) => Val::E(alg.add(&lift(alg, x), &lift(alg, y))),
        },
        Expr::Sub(a, b) => match (eval(alg, a)?, eval(alg, b)?) {
            (Val::S(x), Val::S(y)) => Val::S(&x - &y),
            (x, y) => Val::E(alg.sub(&lift(alg, x), &lift(alg, y))),
        },
        Expr::Mul(a, b) => match (eval(alg, a)?, eval(alg, b)?) {
            (Val::S(x), Val::S(y)) => Val::S(&x * &y),
            (x, y) => Val::E(alg.mul(&lift(alg, x), &lift(alg, y))),
        },
        Expr::Div(a, b) => {
            let Val::S(den) = eval(alg, b)? else { unreachable!("denominators are integer literals") };
            let inv = den.inv().map_err(|_| ParseError { position: 0, message: "division by zero".into() })?;
            match eval(alg, a)? {
                Val::S(x) => Val::S(&x * &inv),
                Val::E(v) => Val::E(alg.mul(&alg.scalar(inv), &v)),
            }
        }
        Expr::Pow { base, exp, position } => {
            if let Expr::Q = **base {
                return Ok(Val::S(CycScalar::qpow(field, *exp)));
            }
            let mut k = *exp;
            if k < 0 {
                match &**base {
                    Expr::Gen { name, .. } if alg.invertible(name) => {
                        // g^-1 = g^(N-1)
                        k = (-k) * (alg.order() as i64 - 1);
                    }
                    Expr::Gen { name, .. } => return err(*position, format!("negative power of '{name}' is not allowed")),
                    _ => return err(*position, "negative powers are only allowed on q, x, y and K"),
                }
            }
            match eval(alg, base)? {
                Val::S(c) => Val::S(c.pow(k).map_err(|_| ParseError { position: *position, message: "division by zero".into() })?),
                Val::E(v) => {
                    let mut acc = alg.scalar(CycScalar::one(field));
                    for _ in 0..k {
                        acc = alg.mul(&acc, &v);
                    }
                    Val::E(acc)
                }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors() {
        assert_eq!(parse("x^").unwrap_err().position, 2);
        assert!(parse("x +").is_err());
        assert!(parse("(x").is_err());
        assert!(parse("x $ y").is_err());
        assert!(parse("2/q").is_err());
    }

    #[test]
    fn shapes() {
        assert!(matches!(parse("-x*y + 3/2").unwrap(), Expr::Add(..)));
        assert!(matches!(parse("K^-1").unwrap(), Expr::Pow { exp: -1, .. }));
        assert!(matches!(parse("(1 + q)*x").unwrap(), Expr::Mul(..)));
    }
}
