use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Zero;
use rayon::prelude::*;

use super::elliptic::{EllipticModel, EllipticPoint};
use super::CurvePoint;
use crate::error::{Error, Result};
use crate::exactmath::{rational::rational_sqrt, QPoly, Rational};

fn integral_coeffs(coeffs: &[Rational]) -> Result<Vec<i128>> {
    coeffs
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::InvalidInput(format!("coefficient {c} is not integral")));
            }
            i128::try_from(c.numer()).map_err(|_| Error::InvalidInput(format!("coefficient {c} too large")))
        })
        .collect()
}

fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let s = (n as u128).sqrt();
    (s * s == n as u128).then_some(s as i128)
}

fn overflow(h: u64) -> Error {
    Error::Budget(h)
}

/// Sum of c_i a^i b^(e-i), checked.
fn homogeneous(coeffs: &[i128], e: usize, a: i128, b: i128) -> Option<i128> {
    let mut acc: i128 = 0;
    let mut apow: i128 = 1;
    for (i, &c) in coeffs.iter().enumerate() {
        let bpow = b.checked_pow((e - i) as u32)?;
        acc = acc.checked_add(c.checked_mul(apow)?.checked_mul(bpow)?)?;
        if i + 1 < coeffs.len() {
            apow = apow.checked_mul(a)?;
        }
    }
    Some(acc)
}

/// All rational points of y^2 = g(x) with x = a/b, |a| <= h, 1 <= b <= h, plus
/// the points at infinity. Sorted.
pub fn rational_points_bounded(g: &QPoly, h: u64) -> Result<Vec<CurvePoint>> {
    if h == 0 {
        return Err(Error::InvalidInput("height bound must be at least 1".into()));
    }
    let n = g.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    let coeffs = integral_coeffs(g.coeffs())?;
    let e = n + n % 2;
    let hi = h as i128;
    let per_a: Vec<Result<Vec<CurvePoint>>> = (-hi..=hi)
        .into_par_iter()
        .map(|a| {
            let mut out = Vec::new();
            for b in 1..=hi {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let v = homogeneous(&coeffs, e, a, b).ok_or_else(|| overflow(h))?;
                if let Some(s) = exact_sqrt(v) {
                    let x = Rational::new(BigInt::from(a), BigInt::from(b));
                    let den = BigInt::from(b).pow((e / 2) as u32);
                    let y = Rational::new(BigInt::from(s), den);
                    if !y.is_zero() {
                        out.push(CurvePoint::affine(x.clone(), -y.clone()));
                    }
                    out.push(CurvePoint::affine(x, y));
                }
            }
            Ok(out)
        })
        .collect();
    let mut points = Vec::new();
    for r in per_a {
        points.extend(r?);
    }
    if n % 2 == 1 {
        points.push(CurvePoint::Infinity { sign: 0 });
    } else if rational_sqrt(g.lc().expect("nonzero")).is_some() {
        points.push(CurvePoint::Infinity { sign: 1 });
        points.push(CurvePoint::Infinity { sign: -1 });
    }
    points.sort();
    Ok(points)
}

/// All rational points of an integral Weierstrass model with x = a/d^2,
/// |a| <= h and d^2 <= h, plus the point at infinity. Sorted.
pub fn elliptic_points_bounded(e: &EllipticModel, h: u64) -> Result<Vec<EllipticPoint>> {
    if h == 0 {
        return Err(Error::InvalidInput("height bound must be at least 1".into()));
    }
    let c = integral_coeffs(&e.a)?;
    let (a1, a2, a3, a4, a6) = (c[0], c[1], c[2], c[3], c[4]);
    let hi = h as i128;
    let per_a: Vec<Result<Vec<EllipticPoint>>> = (-hi..=hi)
        .into_par_iter()
        .map(|a| {
            let mut out = Vec::new();
            let mut d: i128 = 1;
            while d * d <= hi {
                if a.gcd(&d) == 1 {
                    let eval = || -> Option<(i128, i128)> {
                        let d2 = d * d;
                        let lin = a1.checked_mul(a)?.checked_add(a3.checked_mul(d2)?)?;
                        let rhs = a
                            .checked_pow(3)?
                            .checked_add(a2.checked_mul(a * a)?.checked_mul(d2)?)?
                            .checked_add(a4.checked_mul(a)?.checked_mul(d2 * d2)?)?
                            .checked_add(a6.checked_mul(d2.checked_pow(3)?)?)?;
                        let n = d2.checked_mul(lin.checked_mul(lin)?)?.checked_add(rhs.checked_mul(4)?)?;
                        Some((n, lin.checked_mul(d)?))
                    };
                    let (n, shift) = eval().ok_or_else(|| overflow(h))?;
                    if let Some(s) = exact_sqrt(n) {
                        let x = Rational::new(BigInt::from(a), BigInt::from(d * d));
                        let den = BigInt::from(d).pow(3);
                        for s in if s == 0 { vec![0] } else { vec![s, -s] } {
                            // 2Y = s - (a1 a + a3 d^2) d with y = Y/d^3
                            let y = Rational::new(BigInt::from(s - shift), BigInt::from(2) * &den);
                            out.push(EllipticPoint::affine(x.clone(), y));
                        }
                    }
                }
                d += 1;
            }
            Ok(out)
        })
        .collect();
    let mut points = vec![EllipticPoint::Infinity];
    for r in per_a {
        points.extend(r?);
    }
    debug_assert!(points.iter().all(|p| e.contains(p)));
    points.sort();
    points.dedup();
    Ok(points)
}
