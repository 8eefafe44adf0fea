//! Context-style algebraic structures.
//!
//! Elements are plain values; every operation goes through the structure
//! object, which carries the characteristic, the modulus of an extension, or
//! the defining equation of a function field. This lets a single polynomial
//! and expression engine run over Q, F_p, F_{p^2}, F_{2^k} and curve function
//! fields alike.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{invmod, mulmod, powmod, reduce_mod, Rational};

pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Image of a rational constant; `None` when its denominator is not invertible.
    fn from_rational(&self, q: &Rational) -> Option<Self::Elem>;
    /// Exact division; `None` when `b` does not divide `a` (or is zero).
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(BigInt::from(n)))
            .expect("integers embed in every ring")
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigInt) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e.clone();
        let two = BigInt::from(2);
        while e.is_positive() {
            if e.is_odd() {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e /= &two;
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn from_rational(&self, q: &Rational) -> Option<Rational> {
        Some(q.clone())
    }
    fn div(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        (!b.is_zero()).then(|| a / b)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// Common interface of the finite fields used for point counting.
pub trait FiniteField: Field {
    fn characteristic(&self) -> u64;
    fn order(&self) -> u64;
    /// Every element, in a fixed deterministic order.
    fn elements(&self) -> Vec<Self::Elem>;

    /// Quadratic character: 0, 1 or -1.
    fn quadratic_character(&self, a: &Self::Elem) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        if self.characteristic() == 2 {
            return 1;
        }
        let e = self.pow(a, (self.order() - 1) / 2);
        if e == self.one() {
            1
        } else {
            -1
        }
    }
}

/// The prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(super::rational::is_prime(p), "{p} is not prime");
        PrimeField { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_big(&self, n: &BigInt) -> u64 {
        super::rational::to_u64(&n.mod_floor(&BigInt::from(self.p)))
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn from_rational(&self, q: &Rational) -> Option<u64> {
        reduce_mod(q, self.p)
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn div(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(self.mul(a, &self.inv(b)?))
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        powmod(*a, e, self.p)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| invmod(*a, self.p)).flatten()
    }
}

impl FiniteField for PrimeField {
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> u64 {
        self.p
    }
    fn elements(&self) -> Vec<u64> {
        (0..self.p).collect()
    }
}

/// Element a + b*i of F_p(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp2 {
    pub a: u64,
    pub b: u64,
}

impl std::fmt::Display for Fp2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}+{}i", self.a, self.b)
    }
}

/// F_{p^2} = F_p(i) with i^2 a fixed non-residue: -1 when p = 3 (mod 4),
/// otherwise the least positive non-residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticExtension {
    base: PrimeField,
    nonresidue: u64,
}

impl QuadraticExtension {
    pub fn new(p: u64) -> Self {
        assert!(p > 2, "F_4 is not of the form F_p(i)");
        let base = PrimeField::new(p);
        let nonresidue = if p % 4 == 3 {
            p - 1
        } else {
            (2..p).find(|&a| base.quadratic_character(&a) == -1).expect("non-residue exists")
        };
        QuadraticExtension { base, nonresidue }
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn embed(&self, a: u64) -> Fp2 {
        Fp2 { a: a % self.base.p, b: 0 }
    }

    pub fn element(&self, a: i64, b: i64) -> Fp2 {
        Fp2 { a: self.base.reduce(a), b: self.base.reduce(b) }
    }

    pub fn conjugate(&self, x: &Fp2) -> Fp2 {
        Fp2 { a: x.a, b: self.base.neg(&x.b) }
    }

    /// Norm to F_p: a^2 - n b^2.
    pub fn norm(&self, x: &Fp2) -> u64 {
        let f = &self.base;
        f.sub(&f.mul(&x.a, &x.a), &f.mul(&self.nonresidue, &f.mul(&x.b, &x.b)))
    }
}

impl Ring for QuadraticExtension {
    type Elem = Fp2;

    fn zero(&self) -> Fp2 {
        Fp2 { a: 0, b: 0 }
    }
    fn one(&self) -> Fp2 {
        Fp2 { a: 1, b: 0 }
    }
    fn add(&self, x: &Fp2, y: &Fp2) -> Fp2 {
        Fp2 { a: self.base.add(&x.a, &y.a), b: self.base.add(&x.b, &y.b) }
    }
    fn neg(&self, x: &Fp2) -> Fp2 {
        Fp2 { a: self.base.neg(&x.a), b: self.base.neg(&x.b) }
    }
    fn mul(&self, x: &Fp2, y: &Fp2) -> Fp2 {
        let f = &self.base;
        let ac = f.mul(&x.a, &y.a);
        let bd = f.mul(&x.b, &y.b);
        Fp2 {
            a: f.add(&ac, &f.mul(&self.nonresidue, &bd)),
            b: f.add(&f.mul(&x.a, &y.b), &f.mul(&x.b, &y.a)),
        }
    }
    fn from_rational(&self, q: &Rational) -> Option<Fp2> {
        Some(self.embed(self.base.from_rational(q)?))
    }
    fn div(&self, x: &Fp2, y: &Fp2) -> Option<Fp2> {
        Some(self.mul(x, &self.inv(y)?))
    }
}

impl Field for QuadraticExtension {
    fn inv(&self, x: &Fp2) -> Option<Fp2> {
        let n_inv = self.base.inv(&self.norm(x))?;
        let c = self.conjugate(x);
        Some(Fp2 { a: self.base.mul(&c.a, &n_inv), b: self.base.mul(&c.b, &n_inv) })
    }
}

impl FiniteField for QuadraticExtension {
    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn order(&self) -> u64 {
        self.base.p * self.base.p
    }
    fn elements(&self) -> Vec<Fp2> {
        let p = self.base.p;
        (0..p).flat_map(|a| (0..p).map(move |b| Fp2 { a, b })).collect()
    }
}

/// F_{2^k} for small k, elements as bit vectors of polynomial coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryField {
    k: u32,
    modulus: u64,
}

impl BinaryField {
    pub fn new(k: u32) -> Self {
        assert!((1..=16).contains(&k));
        let modulus = (1u64 << k..1u64 << (k + 1))
            .find(|&m| binary_irreducible(m, k))
            .expect("irreducible polynomials exist in every degree");
        BinaryField { k, modulus }
    }

    pub fn degree(&self) -> u32 {
        self.k
    }
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    for i in 0..32 {
        if (b >> i) & 1 == 1 {
            acc ^= a << i;
        }
    }
    acc
}

fn clrem(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= dm {
        a ^= m << (63 - a.leading_zeros() - dm);
    }
    a
}

fn binary_irreducible(m: u64, k: u32) -> bool {
    (2u64..1u64 << (k / 2 + 1)).all(|d| {
        let deg = 63 - d.leading_zeros();
        deg == 0 || deg > k / 2 || clrem(m, d) != 0
    })
}

impl Ring for BinaryField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn neg(&self, a: &u64) -> u64 {
        *a
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        clrem(clmul(*a, *b), self.modulus)
    }
    fn from_rational(&self, q: &Rational) -> Option<u64> {
        reduce_mod(q, 2)
    }
    fn div(&self, a: &u64, b: &u64) -> Option<u64> {
        Some(self.mul(a, &self.inv(b)?))
    }
}

impl Field for BinaryField {
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(a, (1u64 << self.k) - 2))
    }
}

impl FiniteField for BinaryField {
    fn characteristic(&self) -> u64 {
        2
    }
    fn order(&self) -> u64 {
        1 << self.k
    }
    fn elements(&self) -> Vec<u64> {
        (0..1u64 << self.k).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_axioms<F: FiniteField>(f: &F) {
        let els = f.elements();
        assert_eq!(els.len() as u64, f.order());
        for a in &els {
            if !f.is_zero(a) {
                let ai = f.inv(a).unwrap();
                assert_eq!(f.mul(a, &ai), f.one());
            }
            for b in els.iter().take(7) {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.sub(&f.add(a, b), b), *a);
            }
        }
        let squares = els.iter().filter(|a| f.quadratic_character(a) == 1).count() as u64;
        if f.characteristic() != 2 {
            assert_eq!(squares, (f.order() - 1) / 2);
        }
    }

    #[test]
    fn finite_fields_are_fields() {
        field_axioms(&PrimeField::new(7));
        field_axioms(&QuadraticExtension::new(3));
        field_axioms(&QuadraticExtension::new(5));
        for k in 1..=6 {
            field_axioms(&BinaryField::new(k));
        }
    }

    #[test]
    fn extension_generator_choice() {
        assert_eq!(QuadraticExtension::new(743).nonresidue(), 742);
        assert_eq!(QuadraticExtension::new(5).nonresidue(), 2);
        let f = QuadraticExtension::new(743);
        let i = f.element(0, 1);
        assert_eq!(f.mul(&i, &i), f.element(-1, 0));
    }
}
