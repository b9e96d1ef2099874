//! Classification of graphs for the statement: if `k[G]` has a 2-linear
//! resolution then `pd(k[G])` equals the maximal vertex degree of `G`.
//!
//! The verdict is always the direct comparison `pd = max deg`. The
//! structural witness (a free vertex in a facet of size `min r_i + 2` that
//! meets the rest of the complex in the complementary face) is computed
//! separately, and any disagreement between the two is recorded in the
//! report's notes.

use std::fmt;
use std::str::FromStr;

use crate::chordal::{decompose_chordal, QuasiForestDecomposition};
use crate::error::{Error, Result};
use crate::graph::{families, to_graph6, Graph, VertexSet};
use crate::linres;
use crate::simplicial::{free_vertices, SimplicialComplex};

/// A free vertex together with the facet holding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub facet: VertexSet,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub graph6: String,
    pub n: usize,
    /// Whether the complement is chordal, i.e. `k[G]` has a 2-linear resolution.
    pub has_2linear: bool,
    /// Chordless cycle in the complement when `has_2linear` is false.
    pub chordless_cycle: Option<Vec<usize>>,
    /// Quasi-forest decomposition of the flag complex of the complement.
    pub decomposition: Option<QuasiForestDecomposition>,
    pub r_min: Option<i32>,
    pub pd: Option<usize>,
    pub max_deg: usize,
    pub holds: Option<bool>,
    pub gap: Option<i64>,
    pub witness: Option<Witness>,
    pub single_facet: bool,
    pub notes: Vec<String>,
}

impl ConjectureReport {
    /// The flag complex of the complement, when it is a quasi-forest.
    pub fn complex(&self) -> Option<SimplicialComplex> {
        let q = self.decomposition.as_ref()?;
        Some(
            SimplicialComplex::from_facets(self.n, q.facets().iter().copied())
                .expect("decomposition facets cover the vertex set"),
        )
    }
}

/// Runs the complement, chordality, decomposition and invariant pipeline on
/// `g` and compares `pd` with the maximal degree.
pub fn classify(g: &Graph) -> Result<ConjectureReport> {
    let max_deg = g.max_degree()?;
    let mut report = ConjectureReport {
        graph6: to_graph6(g)?,
        n: g.n(),
        has_2linear: false,
        chordless_cycle: None,
        decomposition: None,
        r_min: None,
        pd: None,
        max_deg,
        holds: None,
        gap: None,
        witness: None,
        single_facet: false,
        notes: Vec::new(),
    };
    let qfd = match decompose_chordal(&g.complement()) {
        Err(cycle) => {
            report.chordless_cycle = Some(cycle);
            return Ok(report);
        }
        Ok(q) => q,
    };
    let pd = linres::projective_dimension(&qfd);
    let holds = pd == max_deg;
    report.has_2linear = true;
    report.r_min = qfd.r_min();
    report.pd = Some(pd);
    report.holds = Some(holds);
    report.gap = Some(pd as i64 - max_deg as i64);
    report.single_facet = qfd.k() == 1;
    report.decomposition = Some(qfd);
    if let Some(r_min) = report.r_min {
        let complex = report.complex().expect("decomposition present");
        report.witness = theorem2_witness(&complex, r_min)?;
        match (report.witness.is_some(), holds) {
            (true, false) => {
                report.notes.push("finding: free-vertex witness exists but pd differs from max degree".into())
            }
            (false, true) => {
                report.notes.push("finding: pd equals max degree but no free-vertex witness exists".into())
            }
            _ => {}
        }
    }
    Ok(report)
}

/// Finds a facet `F` with `|F| = r_min + 2` and a vertex `v ∈ F` in no other
/// facet such that `F` meets the union of the other facets in exactly
/// `F \ {v}`. Facets are tried in order, vertices ascending.
pub fn theorem2_witness(c: &SimplicialComplex, r_min: i32) -> Result<Option<Witness>> {
    let facets = c.facets();
    if facets.len() < 2 {
        return Err(Error::ContractViolation("the witness search needs at least two facets".into()));
    }
    let Ok(size) = usize::try_from(r_min + 2) else {
        return Ok(None);
    };
    let free = free_vertices(c);
    for (idx, &f) in facets.iter().enumerate() {
        if f.len() != size {
            continue;
        }
        let rest = facets.iter().enumerate().filter(|&(j, _)| j != idx).fold(VertexSet::EMPTY, |a, (_, g)| a.union(*g));
        for v in f.intersection(free) {
            if f.intersection(rest) == f.difference(VertexSet::singleton(v)) {
                return Ok(Some(Witness { facet: f, vertex: v }));
            }
        }
    }
    Ok(None)
}

/// Graph families whose gap `pd - max deg` grows with a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_{r,r}`; its complement is two disjoint `K_r`.
    CompleteBipartite,
    /// The complement of two `K_r` joined by a bridge.
    Barbell,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::CompleteBipartite => "complete-bipartite",
            Family::Barbell => "barbell",
        }
    }

    pub fn graph(self, r: usize) -> Result<Graph> {
        if r < 2 {
            return Err(Error::UndefinedInput(format!("family parameter r = {r} must be at least 2")));
        }
        match self {
            Family::CompleteBipartite => families::complete_bipartite(r, r),
            Family::Barbell => Ok(families::barbell(r)?.complement()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete-bipartite" => Ok(Family::CompleteBipartite),
            "barbell" => Ok(Family::Barbell),
            other => Err(Error::Malformed(format!("unknown family {other:?}"))),
        }
    }
}

/// A family member with its classification.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub family: Family,
    pub r: usize,
    pub report: ConjectureReport,
    pub gap: i64,
    pub notes: Vec<String>,
}

pub fn gap_report(family: Family, r: usize) -> Result<GapReport> {
    let g = family.graph(r)?;
    let report = classify(&g)?;
    let gap = report.gap.ok_or_else(|| Error::ContractViolation(format!("{family} r={r} is not 2-linear")))?;
    let mut notes = Vec::new();
    if family == Family::CompleteBipartite {
        notes.push(format!(
            "K_{{{r},{r}}}: pd = 2r - 1 = {}, max degree = r = {r}, so the gap is r - 1 = {gap}, not r",
            report.pd.unwrap_or_default()
        ));
    }
    Ok(GapReport { family, r, report, gap, notes })
}

/// `pd - max deg` for the `r`-th member of `family`.
pub fn gap_series(family: Family, r: usize) -> Result<i64> {
    Ok(gap_report(family, r)?.gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::cycle;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f))).unwrap()
    }

    #[test]
    fn c4_is_a_counterexample() {
        let r = classify(&cycle(4).unwrap()).unwrap();
        assert!(r.has_2linear);
        assert_eq!((r.pd, r.max_deg, r.holds, r.gap), (Some(3), 2, Some(false), Some(1)));
        assert_eq!(r.witness, None);
        assert!(r.notes.is_empty());
    }

    #[test]
    fn complete_graphs_hold() {
        for n in 2..8 {
            let r = classify(&Graph::complete(n).unwrap()).unwrap();
            assert_eq!((r.r_min, r.pd, r.max_deg, r.holds), (Some(-1), Some(n - 1), n - 1, Some(true)));
            assert!(r.witness.is_some());
        }
    }

    #[test]
    fn full_vertex_gives_isolated_point() {
        // vertex 0 adjacent to everything, rest a 4-cycle
        let mut g = cycle(5).unwrap();
        for v in 2..4 {
            g.add_edge(0, v).unwrap();
        }
        let r = classify(&g).unwrap();
        assert!(r.complex().unwrap().facets().contains(&vs(&[0])));
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.witness, Some(Witness { facet: vs(&[0]), vertex: 0 }));
    }

    #[test]
    fn edgeless_graph_is_a_polynomial_ring() {
        let r = classify(&Graph::empty(4).unwrap()).unwrap();
        assert!(r.single_facet);
        assert_eq!((r.pd, r.max_deg, r.holds, r.witness), (Some(0), 0, Some(true), None));
    }

    #[test]
    fn non_chordal_complement() {
        // complement of C5 is C5
        let r = classify(&cycle(5).unwrap()).unwrap();
        assert!(!r.has_2linear);
        assert_eq!(r.chordless_cycle.as_deref(), Some(&[0, 2, 4, 1, 3][..]));
        assert_eq!((r.pd, r.holds), (None, None));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(theorem2_witness(&complex(4, &[&[1, 2], &[0, 3]]), -1).unwrap(), None);
        assert_eq!(
            theorem2_witness(&complex(3, &[&[0], &[1, 2]]), -1).unwrap(),
            Some(Witness { facet: vs(&[0]), vertex: 0 })
        );
        assert_eq!(
            theorem2_witness(&complex(4, &[&[0, 1, 2], &[1, 2, 3]]), 1).unwrap(),
            Some(Witness { facet: vs(&[0, 1, 2]), vertex: 0 })
        );
        assert!(matches!(theorem2_witness(&complex(3, &[&[0, 1, 2]]), 0), Err(Error::ContractViolation(_))));
    }

    #[test]
    fn gap_families() {
        for r in 2..7 {
            assert_eq!(gap_series(Family::CompleteBipartite, r).unwrap(), r as i64 - 1);
        }
        for r in 3..6 {
            assert_eq!(gap_series(Family::Barbell, r).unwrap(), r as i64 - 2);
        }
        let b3 = gap_report(Family::Barbell, 3).unwrap();
        assert_eq!((b3.report.n, b3.report.r_min, b3.report.pd, b3.report.max_deg), (6, Some(0), Some(4), 3));
        let k22 = gap_report(Family::CompleteBipartite, 2).unwrap();
        assert_eq!((k22.report.pd, k22.report.max_deg, k22.gap), (Some(3), 2, 1));
        assert_eq!(k22.notes.len(), 1);
        assert!(matches!(gap_series(Family::Barbell, 1), Err(Error::UndefinedInput(_))));
        assert_eq!("barbell".parse::<Family>().unwrap(), Family::Barbell);
    }
}
