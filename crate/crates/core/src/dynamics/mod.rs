//! Exact orbits of z^2 + c and the complete set of rational preperiodic points.

mod catalog;
mod preper;
pub mod scan;
mod shape;

pub use catalog::{admissible_shapes, catalog_entries, catalog_entry, CatalogEntry};
pub use preper::{preper_points, PreperGraph};
pub use scan::{m1_rule_holds, scan, scan_parameters, scan_with_jobs, CensusRow, ScanResult};
pub use shape::{graph_shape, FunctionalGraph, GraphShape};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::{exact_isqrt, Rational};

/// The map z -> z^2 + c.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadMap {
    pub c: Rational,
}

impl QuadMap {
    pub fn new(c: Rational) -> Self {
        QuadMap { c }
    }

    pub fn apply(&self, z: &Rational) -> Rational {
        z * z + &self.c
    }

    /// The d with denominator(c) = d^2, if the denominator is a perfect square.
    /// Only then can z^2 + c have finite rational preperiodic points.
    pub fn root_denominator(&self) -> Option<BigInt> {
        exact_isqrt(self.c.denom())
    }

    /// Points outside [-B, B] with B = 1/2 + sqrt(1/4 + |c|) escape to infinity,
    /// since there |z^2 + c| > |z|. Decided exactly: |z| > B iff |z| > 1/2 and
    /// z^2 - |z| > |c|.
    pub fn within_escape_bound(&self, z: &Rational) -> bool {
        let a = z.abs();
        let half = Rational::new(One::one(), BigInt::from(2));
        !(a > half && &a * &a - &a > self.c.abs())
    }

    /// Whether z passes the p-adic conditions for every prime: its denominator is
    /// exactly d where d^2 = denominator(c).
    fn valuation_admissible(&self, z: &Rational, d: &BigInt) -> bool {
        z.denom() == d
    }

    /// Largest integer K with K/d <= B.
    pub fn numerator_bound(&self, d: &BigInt) -> BigInt {
        // d*B = (d + sqrt(d^2 + 4|u|)) / 2 with c = u/d^2
        let u = self.c.numer().abs();
        let s = (d * d + BigInt::from(4) * u).sqrt();
        (d + s) / BigInt::from(2)
    }
}

/// Orbit type of a rational point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OrbitClass {
    /// Exact period m.
    Periodic { period: usize },
    /// Enters an m-cycle after exactly `tail` steps (type m_n).
    Preperiodic { period: usize, tail: usize },
    Divergent,
}

impl OrbitClass {
    pub fn is_preperiodic(&self) -> bool {
        !matches!(self, OrbitClass::Divergent)
    }

    pub fn period(&self) -> Option<usize> {
        match self {
            OrbitClass::Periodic { period } | OrbitClass::Preperiodic { period, .. } => Some(*period),
            OrbitClass::Divergent => None,
        }
    }

    pub fn tail(&self) -> Option<usize> {
        match self {
            OrbitClass::Periodic { .. } => Some(0),
            OrbitClass::Preperiodic { tail, .. } => Some(*tail),
            OrbitClass::Divergent => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            OrbitClass::Periodic { period } => format!("period {period}"),
            OrbitClass::Preperiodic { period, tail } => format!("type {period}_{tail}"),
            OrbitClass::Divergent => "divergent".into(),
        }
    }
}

/// Classifies the orbit of x under z^2 + c. Always terminates: every iterate
/// must stay in the finite set {k/d : |k/d| <= B}, otherwise it diverges
/// (p-adically or in the real absolute value).
pub fn orbit_classify(f: &QuadMap, x: &Rational) -> OrbitClass {
    let Some(d) = f.root_denominator() else {
        return OrbitClass::Divergent;
    };
    let mut seen: HashMap<Rational, usize> = HashMap::new();
    let mut z = x.clone();
    for step in 0.. {
        if !f.valuation_admissible(&z, &d) || !f.within_escape_bound(&z) {
            return OrbitClass::Divergent;
        }
        if let Some(&first) = seen.get(&z) {
            let period = step - first;
            return if first == 0 {
                OrbitClass::Periodic { period }
            } else {
                OrbitClass::Preperiodic { period, tail: first }
            };
        }
        seen.insert(z.clone(), step);
        z = f.apply(&z);
    }
    unreachable!()
}

/// The first `n` points of the forward orbit of x.
pub fn orbit_prefix(f: &QuadMap, x: &Rational, n: usize) -> Vec<Rational> {
    std::iter::successors(Some(x.clone()), |z| Some(f.apply(z))).take(n).collect()
}

/// Linear conjugacy l(z) = scale*z + shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugacy {
    pub scale: Rational,
    pub shift: Rational,
}

impl Conjugacy {
    pub fn apply(&self, z: &Rational) -> Rational {
        &self.scale * z + &self.shift
    }

    pub fn apply_inverse(&self, w: &Rational) -> Rational {
        (w - &self.shift) / &self.scale
    }
}

/// Conjugates a z^2 + b z + c0 to z^2 + c via l(z) = a z + b/2, returning c and l.
pub fn normalize_quadratic(a: &Rational, b: &Rational, c0: &Rational) -> Result<(Rational, Conjugacy)> {
    if a.is_zero() {
        return Err(Error::NotQuadratic);
    }
    let two = Rational::from_integer(BigInt::from(2));
    let four = Rational::from_integer(BigInt::from(4));
    let c = a * c0 + b / &two - b * b / &four;
    Ok((c, Conjugacy { scale: a.clone(), shift: b / &two }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    #[test]
    fn classify_examples() {
        let f = QuadMap::new(rat(-29, 16));
        assert_eq!(orbit_classify(&f, &rat(3, 4)), OrbitClass::Preperiodic { period: 3, tail: 2 });
        assert_eq!(
            orbit_prefix(&f, &rat(3, 4), 5),
            vec![rat(3, 4), rat(-5, 4), rat(-1, 4), rat(-7, 4), rat(5, 4)]
        );
        assert_eq!(orbit_classify(&QuadMap::new(int(0)), &int(0)), OrbitClass::Periodic { period: 1 });
        assert_eq!(orbit_classify(&QuadMap::new(int(-1)), &int(1)), OrbitClass::Preperiodic { period: 2, tail: 1 });
        assert_eq!(orbit_classify(&QuadMap::new(rat(1, 3)), &int(0)), OrbitClass::Divergent);
        assert_eq!(orbit_classify(&QuadMap::new(int(1)), &int(0)), OrbitClass::Divergent);
        // denominator 2 where d = 4: diverges 2-adically
        assert_eq!(orbit_classify(&f, &rat(1, 2)), OrbitClass::Divergent);
    }

    #[test]
    fn one_third_diverges_three_adically() {
        // independent check: the 3-adic valuation of the orbit of 0 keeps falling
        let f = QuadMap::new(rat(1, 3));
        let vals: Vec<i64> = orbit_prefix(&f, &int(0), 10)
            .iter()
            .skip(1)
            .map(|z| crate::exactmath::rational::valuation(z, 3).unwrap())
            .collect();
        assert!(vals.windows(2).all(|w| w[1] < w[0]), "{vals:?}");
    }

    #[test]
    fn escape_bound_is_exact() {
        // c = -2: B = 2 exactly
        let f = QuadMap::new(int(-2));
        assert!(f.within_escape_bound(&int(2)));
        assert!(f.within_escape_bound(&int(-2)));
        assert!(!f.within_escape_bound(&rat(2001, 1000)));
        assert_eq!(f.numerator_bound(&BigInt::from(1)), BigInt::from(2));
        let g = QuadMap::new(rat(-29, 16));
        // B = 1/2 + sqrt(1/4 + 29/16) = 1/2 + sqrt(33)/4 ~ 1.936
        assert_eq!(g.numerator_bound(&BigInt::from(4)), BigInt::from(7));
    }

    #[test]
    fn normalization() {
        let (c, l) = normalize_quadratic(&int(1), &int(0), &rat(3, 7)).unwrap();
        assert_eq!(c, rat(3, 7));
        assert_eq!(l, Conjugacy { scale: int(1), shift: int(0) });
        assert_eq!(normalize_quadratic(&int(2), &int(2), &int(0)).unwrap().0, int(0));
        assert_eq!(normalize_quadratic(&int(1), &int(-2), &int(0)).unwrap().0, int(-2));
        assert_eq!(normalize_quadratic(&int(0), &int(1), &int(1)), Err(Error::NotQuadratic));
    }
}
