//! Arithmetic in Q[T]/(g(T)) for a fixed monic squarefree modulus g.

use std::sync::Arc;

use super::field::Rationals;
use super::poly::{Poly, QPoly};
use super::rational::Rational;
use super::resultant::resultant;
use crate::error::{Error, Result};

/// The residue algebra Q[T]/(g).
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueAlgebra {
    modulus: Arc<QPoly>,
}

/// An element of [`ResidueAlgebra`], stored as its reduced representative.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberFieldResidue {
    rep: QPoly,
    modulus: Arc<QPoly>,
}

impl ResidueAlgebra {
    pub fn new(g: QPoly) -> Result<Self> {
        match g.lc() {
            Some(lc) if *lc == Rational::from_integer(1.into()) && g.degree() >= Some(1) => {
                Ok(ResidueAlgebra { modulus: Arc::new(g) })
            }
            _ => Err(Error::InvalidInput("residue modulus must be monic of positive degree".into())),
        }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn element(&self, rep: &QPoly) -> NumberFieldResidue {
        NumberFieldResidue { rep: rep.rem(&Rationals, &self.modulus), modulus: self.modulus.clone() }
    }

    pub fn constant(&self, c: Rational) -> NumberFieldResidue {
        self.element(&QPoly::constant_q(c))
    }

    /// The class of T.
    pub fn generator(&self) -> NumberFieldResidue {
        self.element(&QPoly::var())
    }
}

impl NumberFieldResidue {
    pub fn rep(&self) -> &QPoly {
        &self.rep
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.modulus, o.modulus, "residues modulo different polynomials");
    }

    fn wrap(&self, rep: QPoly) -> Self {
        NumberFieldResidue { rep: rep.rem(&Rationals, &self.modulus), modulus: self.modulus.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        self.wrap(&self.rep + &o.rep)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        self.wrap(&self.rep - &o.rep)
    }

    pub fn neg(&self) -> Self {
        self.wrap(-&self.rep)
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        self.wrap(&self.rep * &o.rep)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.wrap(QPoly::from_ints(&[1])), |acc, _| acc.mul(self))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.rep.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = Poly::ext_gcd(&Rationals, &self.rep, &self.modulus);
        if g.degree() != Some(0) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(s))
    }

    /// Norm to Q, Res(g, rep) for monic g.
    pub fn norm(&self) -> Rational {
        if self.rep.is_zero() {
            return Rational::from_integer(0.into());
        }
        resultant(&Rationals, &self.modulus, &self.rep).expect("modulus is nonzero")
    }

    pub fn is_constant(&self, c: &Rational) -> bool {
        self.rep == QPoly::constant_q(c.clone())
    }
}
