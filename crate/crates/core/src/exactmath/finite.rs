//! Quadratic residues, square roots and small-degree factorization over finite fields.

use num_bigint::BigInt;

use super::field::{FiniteField, PrimeField, Ring};
use super::poly::{Poly, QPoly};
use super::rational::is_prime;
use crate::error::{Error, Result};

/// Legendre symbol (a/p) by Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not an odd prime")));
    }
    let f = PrimeField::new(p);
    Ok(f.quadratic_character(&f.reduce_big(a)))
}

/// Square root in a finite field of odd characteristic (Tonelli-Shanks).
///
/// Of the two roots the one that compares smaller under `Ord` is returned, so
/// the answer is deterministic.
pub fn ff_sqrt<F>(f: &F, a: &F::Elem) -> Option<F::Elem>
where
    F: FiniteField,
    F::Elem: Ord,
{
    if f.is_zero(a) {
        return Some(f.zero());
    }
    if f.characteristic() == 2 {
        // Frobenius is bijective: sqrt(a) = a^(q/2)
        let r = f.pow(a, f.order() / 2);
        return Some(r);
    }
    if f.quadratic_character(a) != 1 {
        return None;
    }
    let q = f.order();
    let mut s = 0;
    let mut odd = q - 1;
    while odd % 2 == 0 {
        odd /= 2;
        s += 1;
    }
    let z = f.elements().into_iter().find(|e| f.quadratic_character(e) == -1)?;
    let mut m = s;
    let mut c = f.pow(&z, odd);
    let mut t = f.pow(a, odd);
    let mut r = f.pow(a, odd.div_ceil(2));
    let one = f.one();
    while t != one {
        let mut i = 0;
        let mut t2 = t.clone();
        while t2 != one {
            t2 = f.mul(&t2, &t2);
            i += 1;
        }
        let mut b = c.clone();
        for _ in 0..(m - i - 1) {
            b = f.mul(&b, &b);
        }
        m = i;
        c = f.mul(&b, &b);
        t = f.mul(&t, &c);
        r = f.mul(&r, &b);
    }
    let other = f.neg(&r);
    Some(if other < r { other } else { r })
}

/// An irreducible factor over F_p together with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub factor: Poly<u64>,
    pub multiplicity: usize,
}

impl Factor {
    pub fn degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }
}

/// Factors a rational polynomial of degree at most 6 modulo p into monic
/// irreducibles (the leading coefficient is dropped).
///
/// Linear factors come from root exhaustion. The root-free remainder is split
/// by gcd with x^(p^k) - x for k = 2, 3; anything left after that has no factor
/// of degree at most 3 and is therefore irreducible.
pub fn factor_mod_p(g: &QPoly, p: u64) -> Result<Vec<Factor>> {
    let f = PrimeField::new(p);
    let lc = g.lc().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if f.from_rational(lc).is_none_or(|c| c == 0) {
        return Err(Error::InvalidInput(format!("{p} divides the leading coefficient")));
    }
    if g.degree().unwrap_or(0) > 6 {
        return Err(Error::InvalidInput("degree above 6".into()));
    }
    let mut h = g
        .map(&f, |c| f.from_rational(c).expect("denominators coprime to p"))
        .monic(&f);
    let mut out = Vec::new();

    for a in 0..p {
        let lin = Poly::new(&f, vec![f.neg(&a), 1]);
        let mult = strip(&f, &mut h, &lin);
        if mult > 0 {
            out.push(Factor { factor: lin, multiplicity: mult });
        }
    }

    for k in 2..=3u32 {
        if h.degree().unwrap_or(0) < k as usize {
            break;
        }
        let frob = Poly::x(&f).pow_mod(&f, &BigInt::from(p).pow(k), &h);
        let d = Poly::gcd(&f, &h, &frob.sub(&f, &Poly::x(&f)));
        for irr in split_equal_degree(&f, &d, k as usize) {
            let mult = strip(&f, &mut h, &irr);
            out.push(Factor { factor: irr, multiplicity: mult });
        }
    }
    if h.degree().unwrap_or(0) > 0 {
        let irr = h.clone();
        let mult = strip(&f, &mut h, &irr);
        out.push(Factor { factor: irr, multiplicity: mult });
    }
    Ok(out)
}

fn strip(f: &PrimeField, h: &mut Poly<u64>, d: &Poly<u64>) -> usize {
    let mut mult = 0;
    loop {
        let (q, r) = h.divrem(f, d).expect("nonzero divisor");
        if !r.is_zero() {
            return mult;
        }
        *h = q;
        mult += 1;
    }
}

/// Splits a squarefree product of distinct monic irreducibles of degree k.
fn split_equal_degree(f: &PrimeField, d: &Poly<u64>, k: usize) -> Vec<Poly<u64>> {
    let n = d.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == k {
        return vec![d.clone()];
    }
    let p = f.p();
    let split = if p == 2 {
        // tiny field: enumerate monic candidates of degree k
        (0..1u64 << k).map(|bits| {
            let mut c: Vec<u64> = (0..k).map(|i| (bits >> i) & 1).collect();
            c.push(1);
            Poly::new(f, c)
        }).find(|cand| {
            let g = Poly::gcd(f, d, cand);
            g.degree().is_some_and(|e| e > 0 && e < n)
        }).map(|cand| Poly::gcd(f, d, &cand))
    } else {
        let e = (BigInt::from(p).pow(k as u32) - 1) / 2;
        (0..p).flat_map(|a| (0..p).map(move |b| (a, b))).find_map(|(a, b)| {
            let probe = Poly::new(f, vec![a, b, 1]).rem(f, d);
            let w = probe.pow_mod(f, &e, d).sub(f, &Poly::constant(f, 1));
            let g = Poly::gcd(f, d, &w);
            g.degree().is_some_and(|e| e > 0 && e < n).then_some(g)
        })
    }
    .expect("equal-degree splitting finds a proper factor");
    let rest = d.divrem(f, &split).expect("nonzero").0;
    let mut out = split_equal_degree(f, &split, k);
    out.extend(split_equal_degree(f, &rest, k));
    out
}

/// Product of the factors with multiplicity (monic).
pub fn expand_factors(p: u64, factors: &[Factor]) -> Poly<u64> {
    let f = PrimeField::new(p);
    factors.iter().fold(Poly::constant(&f, 1), |acc, fa| acc.mul(&f, &fa.factor.pow(&f, fa.multiplicity as u32)))
}

/// Shape as sorted (degree, multiplicity) pairs.
pub fn factor_shape(factors: &[Factor]) -> Vec<(usize, usize)> {
    let mut s: Vec<_> = factors.iter().map(|fa| (fa.degree(), fa.multiplicity)).collect();
    s.sort();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::QuadraticExtension;

    #[test]
    fn legendre_basics() {
        assert_eq!(legendre_symbol(&BigInt::from(33), 743).unwrap(), 1);
        assert_eq!(legendre_symbol(&BigInt::from(-1), 743).unwrap(), -1);
        assert_eq!(legendre_symbol(&BigInt::from(1486), 743).unwrap(), 0);
        assert!(legendre_symbol(&BigInt::from(1), 2).is_err());
        assert!(legendre_symbol(&BigInt::from(1), 9).is_err());
    }

    #[test]
    fn square_roots() {
        let f = PrimeField::new(743);
        let r = ff_sqrt(&f, &33).unwrap();
        assert_eq!(f.mul(&r, &r), 33);
        assert!(r <= 743 - r);
        assert_eq!(ff_sqrt(&PrimeField::new(3), &2), None);
        assert_eq!(ff_sqrt(&PrimeField::new(3), &0), Some(0));
        let e = QuadraticExtension::new(743);
        // every element of F_p is a square in F_{p^2}
        let r = ff_sqrt(&e, &e.embed(5)).unwrap();
        assert_eq!(e.mul(&r, &r), e.embed(5));
    }

    #[test]
    fn factor_x2_plus_1_mod_5() {
        let fs = factor_mod_p(&QPoly::from_ints(&[1, 0, 1]), 5).unwrap();
        let f = PrimeField::new(5);
        assert_eq!(
            fs,
            vec![
                Factor { factor: Poly::new(&f, vec![3, 1]), multiplicity: 1 },
                Factor { factor: Poly::new(&f, vec![2, 1]), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn repeated_and_higher_degree() {
        // (x^2+1)^2 (x^2+x+1) mod 7: x^2+1 irreducible since 7 = 3 mod 4
        let a = QPoly::from_ints(&[1, 0, 1]);
        let b = QPoly::from_ints(&[1, 1, 1]);
        let g = &(&a * &a) * &b;
        let fs = factor_mod_p(&g, 7).unwrap();
        // x^2+x+1 has roots mod 7 (7 = 1 mod 3)
        assert_eq!(factor_shape(&fs), vec![(1, 1), (1, 1), (2, 2)]);
        // x^5 - x - 1 is irreducible mod 5? check via reconstruction only
        let h = QPoly::from_ints(&[-1, -1, 0, 0, 0, 1]);
        let fs = factor_mod_p(&h, 5).unwrap();
        assert_eq!(expand_factors(5, &fs), h.map(&PrimeField::new(5), |c| PrimeField::new(5).from_rational(c).unwrap()));
    }
}
