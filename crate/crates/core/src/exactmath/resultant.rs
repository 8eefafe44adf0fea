//! Resultants and discriminants.
//!
//! Convention: Res(p, q) = lc(p)^deg(q) * prod q(a) over the roots a of p,
//! which is the determinant of the Sylvester matrix.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

pub fn resultant<F: Field>(f: &F, p: &Poly<F::Elem>, q: &Poly<F::Elem>) -> Result<F::Elem> {
    match (p.degree(), q.degree()) {
        (None, None) => Err(Error::InvalidInput("resultant of two zero polynomials".into())),
        (None, _) | (_, None) => Ok(f.zero()),
        (Some(_), Some(_)) => Ok(euclid_resultant(f, p, q)),
    }
}

fn euclid_resultant<F: Field>(f: &F, p: &Poly<F::Elem>, q: &Poly<F::Elem>) -> F::Elem {
    let dp = p.degree().expect("nonzero");
    let dq = q.degree().expect("nonzero");
    if dp == 0 {
        return f.pow(&p.coeffs()[0], dq as u64);
    }
    if dq == 0 {
        return f.pow(&q.coeffs()[0], dp as u64);
    }
    // q(a) = r(a) at every root a of p
    let r = q.rem(f, p);
    let Some(dr) = r.degree() else {
        return f.zero();
    };
    let lc = p.lc().expect("nonzero");
    let scale = f.pow(lc, (dq - dr) as u64);
    let swapped = euclid_resultant(f, &r, p);
    let sign = if (dp * dr) % 2 == 1 { f.neg(&f.one()) } else { f.one() };
    f.mul(&f.mul(&scale, &sign), &swapped)
}

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p).
pub fn discriminant<F: Field>(f: &F, p: &Poly<F::Elem>) -> Result<F::Elem> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::InvalidInput("discriminant of a constant polynomial".into())),
    };
    let res = resultant(f, p, &p.derivative(f))?;
    let lc_inv = f.inv(p.lc().expect("nonzero")).ok_or(Error::DivisionByZero)?;
    let v = f.mul(&res, &lc_inv);
    Ok(if (n * (n - 1) / 2) % 2 == 1 { f.neg(&v) } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::Rationals;
    use crate::exactmath::poly::QPoly;
    use crate::exactmath::rational::int;

    #[test]
    fn small_resultants() {
        let r = |a: &[i64], b: &[i64]| resultant(&Rationals, &QPoly::from_ints(a), &QPoly::from_ints(b)).unwrap();
        assert_eq!(r(&[-1, 1], &[-2, 1]), int(-1));
        assert_eq!(r(&[1, 0, 1], &[0, 1]), int(1));
        assert_eq!(r(&[0, 2], &[-1, 1]), int(-2));
        assert_eq!(r(&[3], &[1, 1, 1]), int(9));
        assert_eq!(r(&[1, 1], &[]), int(0));
        assert!(resultant(&Rationals, &QPoly::zero(), &QPoly::zero()).is_err());
    }

    #[test]
    fn quadratic_discriminant() {
        assert_eq!(discriminant(&Rationals, &QPoly::from_ints(&[1, 0, 1])).unwrap(), int(-4));
        assert_eq!(discriminant(&Rationals, &QPoly::from_ints(&[3, 5, 2])).unwrap(), int(1));
        assert!(discriminant(&Rationals, &QPoly::from_ints(&[7])).is_err());
    }
}
