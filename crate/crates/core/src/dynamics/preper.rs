use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::shape::FunctionalGraph;
use super::{orbit_classify, OrbitClass, QuadMap};
use crate::exactmath::rational::Rational;

/// The finite rational preperiodic points of z^2 + c as a functional digraph.
/// The fixed point at infinity is implicit and never a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreperGraph {
    pub c: Rational,
    /// Sorted ascending.
    pub vertices: Vec<Rational>,
    /// `image[i]` is the index of f(vertices[i]).
    pub image: Vec<usize>,
    pub classes: Vec<OrbitClass>,
    pub includes_infinity: bool,
}

impl PreperGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of preperiodic points in P^1(Q), counting infinity.
    pub fn count_with_infinity(&self) -> usize {
        self.len() + usize::from(self.includes_infinity)
    }

    pub fn index_of(&self, x: &Rational) -> Option<usize> {
        self.vertices.binary_search(x).ok()
    }

    pub fn functional_graph(&self) -> FunctionalGraph {
        FunctionalGraph { succ: self.image.clone() }
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Rational, &Rational)> {
        self.vertices.iter().zip(&self.image).map(move |(v, &j)| (v, &self.vertices[j]))
    }

    /// Vertices whose orbit class matches `pred`.
    pub fn points_where(&self, pred: impl Fn(&OrbitClass) -> bool) -> Vec<&Rational> {
        self.vertices.iter().zip(&self.classes).filter(|(_, k)| pred(k)).map(|(v, _)| v).collect()
    }

    pub fn count_periodic(&self, m: usize) -> usize {
        self.points_where(|k| *k == OrbitClass::Periodic { period: m }).len()
    }

    pub fn count_type(&self, m: usize, n: usize) -> usize {
        self.points_where(|k| *k == OrbitClass::Preperiodic { period: m, tail: n }).len()
    }
}

/// All rational preperiodic points of f.
///
/// A preperiodic x must have denominator exactly d where d^2 = den(c) and lie in
/// [-B, B], so the candidates are k/d with gcd(k, d) = 1 and |k| <= K. With
/// c = u/d^2 the map sends k/d to (k^2 + u)/d / d, so the candidates form a
/// functional graph on integers plus an absorbing "escaped" state.
pub fn preper_points(f: &QuadMap) -> PreperGraph {
    let mut vertices = Vec::new();
    if let Some(d) = f.root_denominator() {
        let bound = f.numerator_bound(&d);
        let small = i128::try_from(&bound)
            .ok()
            .zip(i128::try_from(&d).ok())
            .zip(i128::try_from(f.c.numer()).ok())
            .filter(|((k, d), _)| *k < (1i128 << 60) && *d < (1i128 << 60));
        match small {
            Some(((k, d), u)) => {
                let d_big = BigInt::from(d);
                vertices = integer_preperiodic(k, d, u)
                    .into_iter()
                    .map(|n| Rational::new(BigInt::from(n), d_big.clone()))
                    .collect();
            }
            None => vertices = classify_candidates(f, &d, &bound),
        }
    }
    let classes = vertices.iter().map(|x| orbit_classify(f, x)).collect();
    let image = vertices
        .iter()
        .map(|v| {
            vertices
                .binary_search(&f.apply(v))
                .expect("preperiodic set is closed under f")
        })
        .collect();
    PreperGraph { c: f.c.clone(), vertices, image, classes, includes_infinity: true }
}

/// Slow path: classifies every candidate k/d separately.
fn classify_candidates(f: &QuadMap, d: &BigInt, bound: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut k = -bound.clone();
    while &k <= bound {
        if k.gcd(d).is_one() {
            let x = Rational::new(k.clone(), d.clone());
            if orbit_classify(f, &x).is_preperiodic() {
                out.push(x);
            }
        }
        k += BigInt::one();
    }
    out
}

/// Numerators n in [-k, k] with n/d preperiodic under z^2 + u/d^2, ascending.
fn integer_preperiodic(k: i128, d: i128, u: i128) -> Vec<i128> {
    const UNKNOWN: u8 = 0;
    const ACTIVE: u8 = 1;
    const ESCAPES: u8 = 2;
    const STAYS: u8 = 3;
    let size = (2 * k + 1) as usize;
    let step = |n: i128| -> Option<i128> {
        if gcd(n, d) != 1 {
            return None;
        }
        let num = n * n + u;
        (num % d == 0).then(|| num / d).filter(|m| m.abs() <= k && gcd(*m, d) == 1)
    };
    let mut state = vec![UNKNOWN; size];
    let idx = |n: i128| (n + k) as usize;
    for start in -k..=k {
        if state[idx(start)] != UNKNOWN {
            continue;
        }
        let mut path = Vec::new();
        let mut cur = Some(start);
        let verdict = loop {
            match cur {
                None => break ESCAPES,
                Some(n) => match state[idx(n)] {
                    UNKNOWN => {
                        state[idx(n)] = ACTIVE;
                        path.push(n);
                        cur = step(n);
                    }
                    // revisiting the current path closes a cycle
                    ACTIVE => break STAYS,
                    s => break s,
                },
            }
        };
        for n in path {
            state[idx(n)] = verdict;
        }
    }
    (-k..=k).filter(|&n| state[idx(n)] == STAYS).collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}
