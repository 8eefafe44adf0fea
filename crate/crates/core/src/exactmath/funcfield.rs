//! Function fields Q(x)[y]/(y^2 - f(x)) of hyperelliptic-type curves.
//!
//! An element is stored as (a + b*y)/d with a, b, d in Q[x], d monic and
//! gcd(a, b, d) = 1, which makes the representation canonical: an identity
//! holds on the curve iff both sides have the same normal form. Products use
//! y^2 = f(x), so no Groebner machinery is needed.

use super::field::{Field, Rationals, Ring};
use super::poly::{Poly, QPoly};
use super::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct CurveFunction {
    pub a: QPoly,
    pub b: QPoly,
    pub d: QPoly,
}

/// With `f = None` this is the rational function field Q(x).
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionField {
    f: Option<QPoly>,
}

impl FunctionField {
    pub fn hyperelliptic(f: QPoly) -> Self {
        FunctionField { f: Some(f) }
    }

    pub fn rational() -> Self {
        FunctionField { f: None }
    }

    pub fn x(&self) -> CurveFunction {
        self.normalize(QPoly::var(), QPoly::zero(), QPoly::from_ints(&[1]))
    }

    pub fn y(&self) -> CurveFunction {
        assert!(self.f.is_some(), "y is undefined on the rational function field");
        self.normalize(QPoly::zero(), QPoly::from_ints(&[1]), QPoly::from_ints(&[1]))
    }

    pub fn poly(&self, p: &QPoly) -> CurveFunction {
        self.normalize(p.clone(), QPoly::zero(), QPoly::from_ints(&[1]))
    }

    fn normalize(&self, a: QPoly, b: QPoly, d: QPoly) -> CurveFunction {
        let q = &Rationals;
        if a.is_zero() && b.is_zero() {
            return CurveFunction { a, b, d: QPoly::from_ints(&[1]) };
        }
        let g = Poly::gcd(q, &Poly::gcd(q, &a, &b), &d);
        let (a, b, d) = if g.degree() == Some(0) {
            (a, b, d)
        } else {
            (
                a.divrem(q, &g).expect("nonzero").0,
                b.divrem(q, &g).expect("nonzero").0,
                d.divrem(q, &g).expect("nonzero").0,
            )
        };
        let lc_inv = d.lc().expect("nonzero denominator").recip();
        CurveFunction { a: a.scale(q, &lc_inv), b: b.scale(q, &lc_inv), d: d.scale(q, &lc_inv) }
    }

    fn f_or_zero(&self) -> QPoly {
        self.f.clone().unwrap_or_else(QPoly::zero)
    }
}

impl Ring for FunctionField {
    type Elem = CurveFunction;

    fn zero(&self) -> CurveFunction {
        self.poly(&QPoly::zero())
    }
    fn one(&self) -> CurveFunction {
        self.poly(&QPoly::from_ints(&[1]))
    }
    fn add(&self, u: &CurveFunction, v: &CurveFunction) -> CurveFunction {
        let q = &Rationals;
        let g = Poly::gcd(q, &u.d, &v.d);
        let (cu, cv) = (v.d.divrem(q, &g).expect("nonzero").0, u.d.divrem(q, &g).expect("nonzero").0);
        let a = &(&u.a * &cu) + &(&v.a * &cv);
        let b = &(&u.b * &cu) + &(&v.b * &cv);
        self.normalize(a, b, &u.d * &cu)
    }
    fn neg(&self, u: &CurveFunction) -> CurveFunction {
        CurveFunction { a: -&u.a, b: -&u.b, d: u.d.clone() }
    }
    fn mul(&self, u: &CurveFunction, v: &CurveFunction) -> CurveFunction {
        let f = self.f_or_zero();
        let a = &(&u.a * &v.a) + &(&(&u.b * &v.b) * &f);
        let b = &(&u.a * &v.b) + &(&u.b * &v.a);
        self.normalize(a, b, &u.d * &v.d)
    }
    fn from_rational(&self, c: &Rational) -> Option<CurveFunction> {
        Some(self.poly(&QPoly::constant_q(c.clone())))
    }
    fn div(&self, u: &CurveFunction, v: &CurveFunction) -> Option<CurveFunction> {
        Some(self.mul(u, &self.inv(v)?))
    }
    fn is_zero(&self, u: &CurveFunction) -> bool {
        u.a.is_zero() && u.b.is_zero()
    }
}

impl Field for FunctionField {
    /// 1/((a + b y)/d) = d (a - b y) / (a^2 - b^2 f)
    fn inv(&self, u: &CurveFunction) -> Option<CurveFunction> {
        let f = self.f_or_zero();
        let n = &(&u.a * &u.a) - &(&(&u.b * &u.b) * &f);
        if n.is_zero() {
            return None;
        }
        Some(self.normalize(&u.d * &u.a, -&(&u.d * &u.b), n))
    }
}
