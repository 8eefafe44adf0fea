//! The derived catalog of preperiodic graph shapes.
//!
//! Built from the structure theorems for z^2 + c: cycles are at most two fixed
//! points and one 2-cycle, or a single 3-cycle; the type m_1 points are the
//! negatives of nonzero cycle points; no tails of depth three or more; type
//! m_2 points force the absence of cycles of other lengths.

use std::collections::BTreeSet;

use super::shape::{FunctionalGraph, GraphShape};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    /// The single parameter realizing this shape, when there is one.
    pub unique_c: Option<&'static str>,
    pub shape: GraphShape,
}

/// Cycle of length m where every cycle vertex has one preimage off the cycle;
/// returns (cycle, tails).
fn decorated_cycle(g: &mut FunctionalGraph, m: usize) -> (Vec<usize>, Vec<usize>) {
    let cyc = g.add_cycle(m);
    let tails = cyc.iter().map(|&v| g.add_preimage(v)).collect();
    (cyc, tails)
}

fn build(f: impl FnOnce(&mut FunctionalGraph)) -> GraphShape {
    let mut g = FunctionalGraph::default();
    f(&mut g);
    g.shape()
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    let entry = |key, description, unique_c, shape| CatalogEntry { key, description, unique_c, shape };
    vec![
        entry("empty", "no finite preperiodic points", None, build(|_| {})),
        entry(
            "1",
            "a single fixed point with its negative",
            Some("1/4"),
            build(|g| {
                decorated_cycle(g, 1);
            }),
        ),
        entry(
            "1+1",
            "two fixed points with their negatives",
            None,
            build(|g| {
                decorated_cycle(g, 1);
                decorated_cycle(g, 1);
            }),
        ),
        entry(
            "1+1/0",
            "two fixed points, one of them 0",
            Some("0"),
            build(|g| {
                g.add_cycle(1);
                decorated_cycle(g, 1);
            }),
        ),
        entry(
            "2",
            "a 2-cycle with its negatives",
            None,
            build(|g| {
                decorated_cycle(g, 2);
            }),
        ),
        entry(
            "2/0",
            "a 2-cycle through 0",
            Some("-1"),
            build(|g| {
                let c = g.add_cycle(2);
                g.add_preimage(c[1]);
            }),
        ),
        entry(
            "1+1+2",
            "two fixed points and a 2-cycle",
            None,
            build(|g| {
                decorated_cycle(g, 1);
                decorated_cycle(g, 1);
                decorated_cycle(g, 2);
            }),
        ),
        entry(
            "3",
            "a 3-cycle with its negatives",
            None,
            build(|g| {
                decorated_cycle(g, 3);
            }),
        ),
        entry(
            "1+1 with 1_2 pair",
            "two fixed points and a pair of type 1_2",
            None,
            build(|g| {
                decorated_cycle(g, 1);
                let (_, t) = decorated_cycle(g, 1);
                g.add_preimage(t[0]);
                g.add_preimage(t[0]);
            }),
        ),
        entry(
            "1+1 with 1_2 at 0",
            "two fixed points and 0 of type 1_2",
            Some("-2"),
            build(|g| {
                decorated_cycle(g, 1);
                let (_, t) = decorated_cycle(g, 1);
                g.add_preimage(t[0]);
            }),
        ),
        entry(
            "2 with 2_2 pair",
            "a 2-cycle and a pair of type 2_2",
            None,
            build(|g| {
                let (_, t) = decorated_cycle(g, 2);
                g.add_preimage(t[0]);
                g.add_preimage(t[0]);
            }),
        ),
        entry(
            "3 with 3_2 pair",
            "a 3-cycle and a pair of type 3_2",
            Some("-29/16"),
            build(|g| {
                let (_, t) = decorated_cycle(g, 3);
                g.add_preimage(t[0]);
                g.add_preimage(t[0]);
            }),
        ),
    ]
}

pub fn admissible_shapes() -> BTreeSet<GraphShape> {
    catalog_entries().into_iter().map(|e| e.shape).collect()
}

pub fn catalog_entry(shape: &GraphShape) -> Option<CatalogEntry> {
    catalog_entries().into_iter().find(|e| &e.shape == shape)
}
