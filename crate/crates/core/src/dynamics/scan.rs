use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::catalog::catalog_entry;
use super::preper::PreperGraph;
use super::shape::GraphShape;
use super::{preper_points, OrbitClass, QuadMap};
use crate::error::{Error, Result};
use crate::exactmath::rational::Rational;

/// Number of sample parameters kept per shape.
pub const SAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub shape: GraphShape,
    pub count: usize,
    /// First parameters in scan order.
    pub samples: Vec<Rational>,
    /// Catalog key, or None when the shape lies outside the derived catalog.
    pub catalog_key: Option<&'static str>,
    /// Largest number of preperiodic points counting infinity.
    pub max_points: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanResult {
    pub height: u64,
    pub total: usize,
    /// Sorted by shape code.
    pub rows: Vec<CensusRow>,
    pub out_of_catalog: Vec<(Rational, GraphShape)>,
    /// Parameters with more than nine preperiodic points counting infinity.
    pub over_nine: Vec<Rational>,
    /// Parameters violating the count rule for type m_1 points.
    pub m1_violations: Vec<Rational>,
}

impl ScanResult {
    pub fn row(&self, shape: &GraphShape) -> Option<&CensusRow> {
        self.rows.iter().find(|r| &r.shape == shape)
    }

    pub fn is_clean(&self) -> bool {
        self.out_of_catalog.is_empty() && self.over_nine.is_empty() && self.m1_violations.is_empty()
    }
}

/// All c = u/v^2 in lowest terms with |u| <= h and v^2 <= h, ordered by v then u.
pub fn scan_parameters(h: u64) -> Vec<Rational> {
    let h = h as i64;
    let mut out = Vec::new();
    let mut v: i64 = 1;
    while v * v <= h {
        for u in -h..=h {
            if u.gcd(&v) == 1 {
                out.push(Rational::new(BigInt::from(u), BigInt::from(v * v)));
            }
        }
        v += 1;
    }
    out
}

/// Checks that the number of type m_1 points equals the number of period m
/// points, minus one for (c, m) = (0, 1) and (-1, 2).
pub fn m1_rule_holds(g: &PreperGraph) -> bool {
    (1..=3).all(|m| {
        let periodic = g.count_periodic(m);
        if periodic == 0 {
            return g.count_type(m, 1) == 0;
        }
        let exceptional = (m == 1 && g.c.is_zero()) || (m == 2 && g.c == -Rational::one());
        g.count_type(m, 1) + usize::from(exceptional) == periodic
    }) && g.classes.iter().all(|k| !matches!(k, OrbitClass::Periodic { period } if *period > 3))
}

pub fn scan(height: u64) -> Result<ScanResult> {
    if height == 0 {
        return Err(Error::InvalidInput("height must be at least 1".into()));
    }
    let params = scan_parameters(height);
    let graphs: Vec<(GraphShape, PreperGraph)> = params
        .par_iter()
        .map(|c| {
            let g = preper_points(&QuadMap::new(c.clone()));
            (g.functional_graph().shape(), g)
        })
        .collect();

    let mut rows: BTreeMap<GraphShape, CensusRow> = BTreeMap::new();
    let mut result = ScanResult { height, total: graphs.len(), ..Default::default() };
    for (shape, g) in graphs {
        let row = rows.entry(shape.clone()).or_insert_with(|| CensusRow {
            shape: shape.clone(),
            count: 0,
            samples: Vec::new(),
            catalog_key: catalog_entry(&shape).map(|e| e.key),
            max_points: 0,
        });
        row.count += 1;
        row.max_points = row.max_points.max(g.count_with_infinity());
        if row.samples.len() < SAMPLES {
            row.samples.push(g.c.clone());
        }
        if row.catalog_key.is_none() {
            result.out_of_catalog.push((g.c.clone(), shape));
        }
        if g.count_with_infinity() > 9 {
            result.over_nine.push(g.c.clone());
        }
        if !m1_rule_holds(&g) {
            result.m1_violations.push(g.c.clone());
        }
    }
    result.rows = rows.into_values().collect();
    Ok(result)
}

/// Runs [`scan`] on a dedicated pool of `jobs` threads.
pub fn scan_with_jobs(height: u64, jobs: usize) -> Result<ScanResult> {
    if jobs == 0 {
        return Err(Error::InvalidInput("jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    pool.install(|| scan(height))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{int, rat};

    #[test]
    fn parameters() {
        let ps = scan_parameters(4);
        assert_eq!(ps.len(), 9 + 4);
        assert!(ps.contains(&rat(1, 4)) && ps.contains(&rat(-3, 4)));
        assert!(!ps.contains(&rat(2, 4)));
    }

    #[test]
    fn height_two() {
        let r = scan(2).unwrap();
        assert_eq!(r.total, 5);
        assert!(r.rows.iter().any(|row| row.samples.contains(&int(-1))));
        assert!(r.is_clean());
        assert_eq!(scan(0), Err(Error::InvalidInput("height must be at least 1".into())));
    }
}
