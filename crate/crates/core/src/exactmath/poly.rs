//! Dense univariate polynomials over any [`Ring`], coefficients lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rationals, Ring};
use super::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

pub type QPoly = Poly<Rational>;

impl<E: Clone + PartialEq + fmt::Debug> Poly<E> {
    pub fn new<R: Ring<Elem = E>>(r: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| r.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Elem = E>>(r: &R, c: E) -> Self {
        Self::new(r, vec![c])
    }

    /// c * x^k
    pub fn monomial<R: Ring<Elem = E>>(r: &R, c: E, k: usize) -> Self {
        let mut v = vec![r.zero(); k];
        v.push(c);
        Self::new(r, v)
    }

    pub fn x<R: Ring<Elem = E>>(r: &R) -> Self {
        Self::monomial(r, r.one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff<R: Ring<Elem = E>>(&self, r: &R, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| r.zero())
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| r.add(&self.coeff(r, i), &o.coeff(r, i))).collect();
        Self::new(r, v)
    }

    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| r.neg(c)).collect() }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        self.add(r, &o.neg(r))
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![r.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = r.add(&v[i + j], &r.mul(a, b));
            }
        }
        Self::new(r, v)
    }

    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, c: &E) -> Self {
        Self::new(r, self.coeffs.iter().map(|a| r.mul(a, c)).collect())
    }

    pub fn pow<R: Ring<Elem = E>>(&self, r: &R, e: u32) -> Self {
        let mut acc = Self::constant(r, r.one());
        for _ in 0..e {
            acc = acc.mul(r, self);
        }
        acc
    }

    pub fn eval<R: Ring<Elem = E>>(&self, r: &R, x: &E) -> E {
        self.coeffs.iter().rev().fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// Evaluates at a point of an extension ring, given the coefficient embedding.
    pub fn eval_in<S: Ring>(&self, s: &S, embed: impl Fn(&E) -> S::Elem, x: &S::Elem) -> S::Elem {
        self.coeffs.iter().rev().fold(s.zero(), |acc, c| s.add(&s.mul(&acc, x), &embed(c)))
    }

    pub fn derivative<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| r.mul(c, &r.from_i64(i as i64)))
            .collect();
        Self::new(r, v)
    }

    /// self(inner(x))
    pub fn compose<R: Ring<Elem = E>>(&self, r: &R, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(r, inner).add(r, &Self::constant(r, c.clone())))
    }

    /// Maps coefficients into another ring.
    pub fn map<S: Ring>(&self, s: &S, f: impl Fn(&E) -> S::Elem) -> Poly<S::Elem> {
        Poly::new(s, self.coeffs.iter().map(f).collect())
    }

    /// Exact division over a ring in which leading coefficients divide exactly.
    pub fn exact_div<R: Ring<Elem = E>>(&self, r: &R, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.lc()?;
        let mut rem = self.clone();
        if rem.is_zero() {
            return Some(Self::zero());
        }
        let n = rem.degree()?;
        if n < dd {
            return None;
        }
        let mut q = vec![r.zero(); n - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let c = r.div(rem.lc()?, lc)?;
            let term = Self::monomial(r, c.clone(), rd - dd);
            q[rd - dd] = c;
            rem = rem.sub(r, &term.mul(r, d));
            if rem.degree() == Some(rd) {
                return None;
            }
        }
        Some(Self::new(r, q))
    }

    /// Long division over a field; `None` when dividing by zero.
    pub fn divrem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lc_inv = f.inv(d.lc()?)?;
        let mut rem = self.clone();
        let mut q = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = f.mul(rem.lc()?, &lc_inv);
            rem = rem.sub(f, &Self::monomial(f, c.clone(), rd - dd).mul(f, d));
            q[rd - dd] = c;
        }
        Some((Self::new(f, q), rem))
    }

    pub fn rem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Self {
        self.divrem(f, d).expect("nonzero modulus").1
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(lc) => self.scale(f, &f.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd<F: Field<Elem = E>>(f: &F, a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Returns (g, s, t) with s*a + t*b = g, g monic.
    pub fn ext_gcd<F: Field<Elem = E>>(f: &F, a: &Self, b: &Self) -> (Self, Self, Self) {
        let one = Self::constant(f, f.one());
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(f, &q.mul(f, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(f, &q.mul(f, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let li = f.inv(&lc).expect("nonzero");
                (r0.scale(f, &li), s0.scale(f, &li), t0.scale(f, &li))
            }
        }
    }

    /// self^e mod m.
    pub fn pow_mod<F: Field<Elem = E>>(&self, f: &F, e: &BigInt, m: &Self) -> Self {
        let mut acc = Self::constant(f, f.one()).rem(f, m);
        let mut base = self.rem(f, m);
        let mut e = e.clone();
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e /= &two;
        }
        acc
    }
}

/// Polynomials over a ring, themselves forming a ring (used for bivariate work).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PolyRing<R> {
    pub base: R,
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        Poly::constant(&self.base, self.base.one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(&self.base, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.base)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(&self.base, b)
    }
    fn from_rational(&self, q: &Rational) -> Option<Self::Elem> {
        Some(Poly::constant(&self.base, self.base.from_rational(q)?))
    }
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        a.exact_div(&self.base, b)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
}

impl QPoly {
    /// From integer coefficients, lowest degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(&Rationals, c.iter().map(|&n| Rational::from_integer(n.into())).collect())
    }

    pub fn from_rationals(c: Vec<Rational>) -> Self {
        Poly::new(&Rationals, c)
    }

    pub fn var() -> Self {
        Poly::x(&Rationals)
    }

    pub fn constant_q(c: Rational) -> Self {
        Poly::constant(&Rationals, c)
    }

    pub fn eval_q(&self, x: &Rational) -> Rational {
        self.eval(&Rationals, x)
    }

    /// Scales to primitive integer coefficients with positive leading coefficient;
    /// returns (integer polynomial, factor) with self = factor * result.
    pub fn primitive_part(&self) -> (Vec<BigInt>, Rational) {
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let prim = ints.iter().map(|c| c / &content).collect();
        (prim, Rational::new(content, den))
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        Poly::add(self, &Rationals, o)
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        Poly::sub(self, &Rationals, o)
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        Poly::mul(self, &Rationals, o)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        Poly::neg(self, &Rationals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::PrimeField;

    #[test]
    fn display_and_arith() {
        let g = QPoly::from_ints(&[1, 2, 5, -2, 0, 0, 1]);
        assert_eq!(g.to_string(), "x^6 - 2*x^3 + 5*x^2 + 2*x + 1");
        let x = QPoly::var();
        let sq = &(&x * &x) - &QPoly::from_ints(&[1]);
        let (q, r) = sq.divrem(&Rationals, &(&x - &QPoly::from_ints(&[1]))).unwrap();
        assert_eq!(q, QPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_over_fp() {
        let f = PrimeField::new(5);
        let a = Poly::new(&f, vec![4, 0, 1]); // x^2 - 1
        let b = Poly::new(&f, vec![4, 1]); // x - 1
        assert_eq!(Poly::gcd(&f, &a, &b), b);
        let (g, s, t) = Poly::ext_gcd(&f, &a, &Poly::new(&f, vec![2, 1]));
        assert_eq!(g, Poly::constant(&f, 1));
        assert_eq!(s.mul(&f, &a).add(&f, &t.mul(&f, &Poly::new(&f, vec![2, 1]))), g);
    }

    #[test]
    fn primitive_parts() {
        let p = QPoly::from_rationals(vec![Rational::new(1.into(), 2.into()), Rational::from_integer((-3).into())]);
        let (ints, k) = p.primitive_part();
        assert_eq!(ints, vec![BigInt::from(-1), BigInt::from(6)]);
        assert_eq!(k, Rational::new((-1).into(), 2.into()));
    }

    #[test]
    fn exact_division_in_nested_ring() {
        let r = PolyRing { base: Rationals };
        let a = QPoly::from_ints(&[-1, 0, 1]);
        let b = QPoly::from_ints(&[1, 1]);
        assert_eq!(r.div(&a, &b), Some(QPoly::from_ints(&[-1, 1])));
        assert_eq!(r.div(&a, &QPoly::from_ints(&[2, 1])), None);
    }
}
