//! Exact arithmetic substrate.

pub mod expr;
pub mod field;
pub mod finite;
pub mod funcfield;
pub mod poly;
pub mod rational;
pub mod residue;
pub mod resultant;

pub use expr::{Expr, RationalMap};
pub use field::{BinaryField, Field, FiniteField, Fp2, PrimeField, QuadraticExtension, Rationals, Ring};
pub use finite::{factor_mod_p, ff_sqrt, legendre_symbol, Factor};
pub use funcfield::{CurveFunction, FunctionField};
pub use poly::{Poly, PolyRing, QPoly};
pub use rational::{int, parse_rational, rat, Rational};
pub use residue::{NumberFieldResidue, ResidueAlgebra};
pub use resultant::{discriminant, resultant};
