//! Exact homological invariants of edge rings whose resolution is 2-linear.
//!
//! The edge ring `k[G]` of a graph `G` has a 2-linear resolution exactly when
//! the complement graph is chordal. In that case `k[G]` is the Stanley–Reisner
//! ring of the flag complex of the complement, which is a quasi-forest, and its
//! Hilbert series, Betti numbers, projective dimension and depth follow from
//! the quasi-forest's facet and attachment dimensions.
//!
//! Modules:
//!
//! * [`graph`]: graphs as bit-set rows, complement, graph6, enumeration.
//! * [`chordal`]: maximum cardinality search, chordless-cycle certificates,
//!   clique trees and quasi-forest orderings.
//! * [`simplicial`]: facet-list complexes, f-vectors, reduced homology.
//! * [`linres`]: closed-form invariants of quasi-forests.
//! * [`conjecture`]: classification of graphs for `pd(k[G]) = max deg`.
//! * [`oracle`]: Hochster-formula Betti tables used as ground truth.
//!
//! Vertex sets are `u64` bit masks throughout, so graphs have at most 62
//! vertices.

pub mod chordal;
pub mod conjecture;
mod error;
pub mod graph;
pub mod linalg;
pub mod linres;
pub mod oracle;
pub mod simplicial;

pub use chordal::{
    clique_tree, is_chordal, maximal_cliques_chordal, quasi_forest_order, ChordalityResult, CliqueTree,
    QuasiForestDecomposition,
};
pub use conjecture::{classify, gap_series, theorem2_witness, ConjectureReport, Family, Witness};
pub use error::{Error, Result};
pub use graph::{enumerate_labeled, parse_edge_list, parse_graph6, to_graph6, Graph, VertexSet};
pub use linres::{BettiTable, HilbertSeries, InvariantReport};
pub use oracle::{hochster_betti, oracle_is_2linear, oracle_pd, OracleBettiTable};
pub use simplicial::{FVector, SimplicialComplex};
