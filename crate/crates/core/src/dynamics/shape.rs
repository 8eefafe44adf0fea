//! Canonical codes for finite functional digraphs.
//!
//! Each component is a cycle with rooted in-trees hanging off its vertices. A
//! rooted tree is encoded as `(` + sorted child codes + `)`; a component as
//! its length followed by the lexicographically least rotation of the tree
//! codes read along the map; the graph as its components sorted by
//! (length, code). Equal codes iff isomorphic digraphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::preper::PreperGraph;

/// A map from a finite set {0..n} to itself.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FunctionalGraph {
    pub succ: Vec<usize>,
}

impl FunctionalGraph {
    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    /// Appends a directed cycle of the given length, returning its vertices in
    /// map order.
    pub fn add_cycle(&mut self, len: usize) -> Vec<usize> {
        let start = self.succ.len();
        let ids: Vec<usize> = (start..start + len).collect();
        for (i, _) in ids.iter().enumerate() {
            self.succ.push(start + (i + 1) % len);
        }
        ids
    }

    /// Appends a vertex mapping to `target`.
    pub fn add_preimage(&mut self, target: usize) -> usize {
        self.succ.push(target);
        self.succ.len() - 1
    }

    pub fn cyclic_vertices(&self) -> Vec<bool> {
        let n = self.succ.len();
        let mut cyclic = vec![false; n];
        for v in 0..n {
            let mut w = self.succ[v];
            for _ in 0..n {
                if w == v {
                    cyclic[v] = true;
                    break;
                }
                w = self.succ[w];
            }
        }
        cyclic
    }

    /// Lengths of all cycles, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let cyclic = self.cyclic_vertices();
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for v in 0..self.len() {
            if cyclic[v] && !seen[v] {
                let mut len = 0;
                let mut w = v;
                while !seen[w] {
                    seen[w] = true;
                    w = self.succ[w];
                    len += 1;
                }
                out.push(len);
            }
        }
        out.sort();
        out
    }

    /// Same graph with vertices renamed by the permutation `perm` (old -> new).
    pub fn relabel(&self, perm: &[usize]) -> FunctionalGraph {
        let mut succ = vec![0; self.len()];
        for (v, &w) in self.succ.iter().enumerate() {
            succ[perm[v]] = perm[w];
        }
        FunctionalGraph { succ }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GraphShape(pub String);

impl GraphShape {
    pub const EMPTY: &'static str = "empty";

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FunctionalGraph {
    pub fn shape(&self) -> GraphShape {
        if self.is_empty() {
            return GraphShape(GraphShape::EMPTY.into());
        }
        let n = self.len();
        let cyclic = self.cyclic_vertices();
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            if !cyclic[v] {
                children[self.succ[v]].push(v);
            }
        }
        fn tree_code(v: usize, children: &[Vec<usize>]) -> String {
            let mut codes: Vec<String> = children[v].iter().map(|&c| tree_code(c, children)).collect();
            codes.sort();
            format!("({})", codes.concat())
        }

        let mut seen = vec![false; n];
        let mut comps: Vec<(usize, String)> = Vec::new();
        for v in 0..n {
            if !cyclic[v] || seen[v] {
                continue;
            }
            let mut ring = Vec::new();
            let mut w = v;
            while !seen[w] {
                seen[w] = true;
                ring.push(tree_code(w, &children));
                w = self.succ[w];
            }
            let best = (0..ring.len())
                .map(|r| ring[r..].iter().chain(&ring[..r]).cloned().collect::<Vec<_>>())
                .min()
                .expect("nonempty cycle");
            comps.push((ring.len(), best.concat()));
        }
        comps.sort();
        let parts: Vec<String> = comps.iter().map(|(l, c)| format!("{l}{c}")).collect();
        GraphShape(parts.join("|"))
    }
}

pub fn graph_shape(g: &PreperGraph) -> GraphShape {
    g.functional_graph().shape()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> FunctionalGraph {
        let mut g = FunctionalGraph::default();
        let c = g.add_cycle(3);
        let a = g.add_preimage(c[0]);
        g.add_preimage(a);
        g.add_preimage(a);
        g.add_preimage(c[2]);
        let f = g.add_cycle(1);
        g.add_preimage(f[0]);
        g
    }

    #[test]
    fn codes() {
        assert_eq!(FunctionalGraph::default().shape().as_str(), "empty");
        assert_eq!(sample().shape().as_str(), "1(())|3((()()))()(())");
        assert_eq!(sample().cycle_lengths(), vec![1, 3]);
    }

    #[test]
    fn direction_matters() {
        // a 3-cycle with trees of sizes 1, 2, 3 differs from its reversal
        let build = |order: [usize; 3]| {
            let mut g = FunctionalGraph::default();
            let c = g.add_cycle(3);
            for (i, &k) in order.iter().enumerate() {
                for _ in 0..k {
                    g.add_preimage(c[i]);
                }
            }
            g.shape()
        };
        assert_eq!(build([1, 2, 3]), build([2, 3, 1]));
        assert_ne!(build([1, 2, 3]), build([3, 2, 1]));
    }

    proptest! {
        #[test]
        fn relabeling_invariance(seed in any::<u64>(), extra in 0usize..8) {
            use rand::{seq::SliceRandom, Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut g = FunctionalGraph::default();
            for _ in 0..rng.gen_range(1..3) {
                g.add_cycle(rng.gen_range(1..4));
            }
            for _ in 0..extra {
                let t = rng.gen_range(0..g.len());
                g.add_preimage(t);
            }
            let mut perm: Vec<usize> = (0..g.len()).collect();
            perm.shuffle(&mut rng);
            prop_assert_eq!(g.shape(), g.relabel(&perm).shape());
        }
    }
}
