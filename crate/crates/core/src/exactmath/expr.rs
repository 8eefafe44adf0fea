//! Small arithmetic expression language for transcribing curve equations and
//! rational maps, evaluable in any [`Ring`].

use std::fmt;

use num_bigint::BigInt;

use super::field::Ring;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Rational),
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Parses `+ - * / ^`, parentheses, integer literals and the named
    /// variables. Juxtaposition means multiplication (`2x^2`, `(x+1)(x-1)`).
    pub fn parse(src: &str, vars: &[&str]) -> Result<Expr> {
        let mut p = Parser { src, pos: 0, vars };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return Err(p.err());
        }
        Ok(e)
    }

    /// `None` when a division fails in `r` (zero or inexact divisor).
    pub fn eval<R: Ring>(&self, r: &R, vals: &[R::Elem]) -> Option<R::Elem> {
        Some(match self {
            Expr::Const(q) => r.from_rational(q)?,
            Expr::Var(i) => vals[*i].clone(),
            Expr::Neg(a) => r.neg(&a.eval(r, vals)?),
            Expr::Add(a, b) => r.add(&a.eval(r, vals)?, &b.eval(r, vals)?),
            Expr::Sub(a, b) => r.sub(&a.eval(r, vals)?, &b.eval(r, vals)?),
            Expr::Mul(a, b) => r.mul(&a.eval(r, vals)?, &b.eval(r, vals)?),
            Expr::Div(a, b) => r.div(&a.eval(r, vals)?, &b.eval(r, vals)?)?,
            Expr::Pow(a, e) => r.pow(&a.eval(r, vals)?, *e as u64),
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Const(q) if !q.is_integer() || *q < Rational::from_integer(0.into()) => 1,
            Expr::Const(_) | Expr::Var(_) => 4,
            Expr::Pow(..) => 3,
            Expr::Neg(_) => 2,
            Expr::Mul(..) | Expr::Div(..) => 1,
            Expr::Add(..) | Expr::Sub(..) => 0,
        }
    }

    pub fn display<'a>(&'a self, vars: &'a [&'a str]) -> ExprDisplay<'a> {
        ExprDisplay { e: self, vars }
    }
}

pub struct ExprDisplay<'a> {
    e: &'a Expr,
    vars: &'a [&'a str],
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |e: &Expr, min: u8, f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({})", e.display(self.vars))
            } else {
                write!(f, "{}", e.display(self.vars))
            }
        };
        match self.e {
            Expr::Const(q) => write!(f, "{q}"),
            Expr::Var(i) => f.write_str(self.vars[*i]),
            Expr::Neg(a) => {
                f.write_str("-")?;
                sub(a, 3, f)
            }
            Expr::Add(a, b) => {
                sub(a, 0, f)?;
                f.write_str(" + ")?;
                sub(b, 1, f)
            }
            Expr::Sub(a, b) => {
                sub(a, 0, f)?;
                f.write_str(" - ")?;
                sub(b, 1, f)
            }
            Expr::Mul(a, b) => {
                sub(a, 1, f)?;
                f.write_str("*")?;
                sub(b, 2, f)
            }
            Expr::Div(a, b) => {
                sub(a, 1, f)?;
                f.write_str("/")?;
                sub(b, 3, f)
            }
            Expr::Pow(a, e) => {
                sub(a, 4, f)?;
                write!(f, "^{e}")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::Parse(format!("{} (at byte {})", self.src, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.unary()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.unary()?));
            } else if self.peek().is_some_and(|c| c == '(' || c.is_ascii_alphanumeric()) {
                acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.eat('^') {
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            let e: u32 = digits.parse().map_err(|_| self.err())?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next().filter(|&c| pred(c)) {
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err());
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let n: BigInt = digits.parse().map_err(|_| self.err())?;
                Ok(Expr::Const(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
                // longest variable name that is a prefix, so `xy` reads as x*y
                let mut best: Option<(usize, usize)> = None;
                for (i, v) in self.vars.iter().enumerate() {
                    if name.starts_with(v) && best.is_none_or(|(_, l)| v.len() > l) {
                        best = Some((i, v.len()));
                    }
                }
                let (i, len) = best.ok_or_else(|| self.err())?;
                self.pos -= name.len() - len;
                Ok(Expr::Var(i))
            }
            _ => Err(self.err()),
        }
    }
}

/// A rational map between curves: one expression per target coordinate, in
/// the source coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMap {
    pub source_vars: Vec<String>,
    pub components: Vec<Expr>,
    pub text: Vec<String>,
}

impl RationalMap {
    pub fn parse(source_vars: &[&str], components: &[&str]) -> Result<Self> {
        let parsed = components.iter().map(|c| Expr::parse(c, source_vars)).collect::<Result<Vec<_>>>()?;
        Ok(RationalMap {
            source_vars: source_vars.iter().map(|s| s.to_string()).collect(),
            components: parsed,
            text: components.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Images of the coordinates; `None` if a denominator vanishes.
    pub fn apply<R: Ring>(&self, r: &R, point: &[R::Elem]) -> Option<Vec<R::Elem>> {
        self.components.iter().map(|c| c.eval(r, point)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{PrimeField, Rationals};
    use crate::exactmath::rational::{int, rat};

    #[test]
    fn parse_and_eval() {
        let e = Expr::parse("(t+2)/(eta-1)^2", &["eta", "t"]).unwrap();
        assert_eq!(e.eval(&Rationals, &[int(3), int(2)]), Some(int(1)));
        assert_eq!(e.eval(&Rationals, &[int(1), int(2)]), None);
        let e = Expr::parse("2x^4 - 8x^2 y + 8xy - 8", &["x", "y"]).unwrap();
        assert_eq!(e.eval(&Rationals, &[int(1), int(1)]), Some(int(-6)));
        let e = Expr::parse("-x^2", &["x"]).unwrap();
        assert_eq!(e.eval(&Rationals, &[int(3)]), Some(int(-9)));
        assert_eq!(Expr::parse("1/2", &[]).unwrap().eval(&PrimeField::new(7), &[]), Some(4));
        assert_eq!(Expr::parse("3/4", &[]).unwrap().eval(&Rationals, &[]), Some(rat(3, 4)));
    }

    #[test]
    fn parse_errors() {
        for bad in ["x+", "(x", "z", "x^", "x ) "] {
            assert!(Expr::parse(bad, &["x"]).is_err(), "{bad}");
        }
    }

    #[test]
    fn display_reparses() {
        let vars = ["x", "y"];
        for src in ["-(x+1)^2/(y-3)", "x - (y - 1)", "2*x*y^3 + 1/2", "-x^2", "x/(y*x)"] {
            let e = Expr::parse(src, &vars).unwrap();
            let shown = e.display(&vars).to_string();
            let again = Expr::parse(&shown, &vars).unwrap();
            for (a, b) in [(2, 5), (-1, 7), (3, 3)] {
                assert_eq!(e.eval(&Rationals, &[int(a), int(b)]), again.eval(&Rationals, &[int(a), int(b)]), "{src} vs {shown}");
            }
        }
    }
}
