//! Inputs shared by the benchmarks.

use quasiforest::graph::labeled_count;
use quasiforest::{is_chordal, Graph};

/// Every labeled graph on `n` vertices.
pub fn labeled(n: usize) -> Vec<Graph> {
    (0..labeled_count(n)).map(|m| Graph::from_edge_mask(n, m).expect("mask in range")).collect()
}

/// The labeled graphs on `n` vertices whose complement is chordal.
pub fn two_linear(n: usize) -> Vec<Graph> {
    labeled(n).into_iter().filter(|g| is_chordal(&g.complement()).is_chordal()).collect()
}

/// `K_{r,r}`, the densest member of the gap families with a 2-linear resolution.
pub fn complete_bipartite(r: usize) -> Graph {
    quasiforest::Family::CompleteBipartite.graph(r).expect("r >= 2")
}
