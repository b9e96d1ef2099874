//! Brute-force Betti tables by Hochster's formula.
//!
//! `β_{i,j}(k[Δ]) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W; Q)`, summed over every
//! subset `W` of the vertex set. Each restriction is handled independently,
//! so the cost is `2^n` small homology computations.

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::linres::BettiTable;
use crate::simplicial::{reduced_homology_ranks, restrict, SimplicialComplex};

/// Vertex cap for [`hochster_betti`].
pub const ORACLE_MAX_VERTICES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBettiTable {
    pub table: BettiTable,
    pub n: usize,
    /// Number of vertex subsets whose restriction was examined.
    pub subsets_examined: u64,
}

impl OracleBettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.table.get(i, j)
    }
}

/// Betti table of the Stanley–Reisner ring of `c` over the rationals.
pub fn hochster_betti(c: &SimplicialComplex) -> Result<OracleBettiTable> {
    let n = c.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "Hochster oracle is capped at {ORACLE_MAX_VERTICES} vertices, complex has {n}"
        )));
    }
    let ground = c.vertices().bits();
    let mut table = BettiTable::new();
    let mut examined = 0u64;
    let mut w = 0u64;
    // all submasks of `ground` in increasing order
    loop {
        examined += 1;
        let sub = VertexSet(w);
        let j = sub.len();
        for (slot, &rank) in reduced_homology_ranks(&restrict(c, sub))?.iter().enumerate() {
            // slot 0 is dimension -1, so i = j - (slot - 1) - 1 = j - slot
            if rank > 0 && slot <= j {
                table.add(j - slot, j, rank as u64);
            }
        }
        if w == ground {
            break;
        }
        w = (w.wrapping_sub(ground)) & ground;
    }
    Ok(OracleBettiTable { table, n, subsets_examined: examined })
}

/// Largest homological degree with a nonzero Betti number.
pub fn oracle_pd(t: &OracleBettiTable) -> usize {
    t.table.projective_dimension()
}

/// True if the resolution is 2-linear: `β_{i,j} = 0` unless `j = i + 1`
/// for `i >= 1`.
pub fn oracle_is_2linear(t: &OracleBettiTable) -> bool {
    t.table.is_2linear()
}
