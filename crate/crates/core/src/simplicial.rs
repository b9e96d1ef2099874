//! Simplicial complexes stored as facet lists.

use std::collections::HashSet;
use std::fmt;

use crate::chordal::{decompose_chordal, maximal_cliques_chordal, maximal_sets, QuasiForestDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg;

/// Largest vertex count for which faces are enumerated.
pub const FACE_ENUMERATION_LIMIT: usize = 25;

/// A simplicial complex on a ground set of at most 62 labeled vertices.
///
/// Facets are pairwise incomparable, sorted lexicographically, and cover the
/// ground set. The complex with empty ground set has the empty face only and
/// an empty facet list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Complex on `0..n` generated by `facets`. Non-maximal and repeated
    /// facets are dropped; every vertex in `0..n` must lie in a facet.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!("{n} vertices exceeds the limit")));
        }
        let ground = VertexSet::prefix(n);
        let facets: Vec<VertexSet> = facets.into_iter().filter(|f| !f.is_empty()).collect();
        if let Some(f) = facets.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::Malformed(format!("facet {f:?} uses a vertex outside 0..{n}")));
        }
        let c = Self::from_parts(ground, facets);
        let covered = c.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        if covered != ground {
            return Err(Error::Malformed(format!("vertices {:?} lie in no facet", ground.difference(covered))));
        }
        Ok(c)
    }

    fn from_parts(vertices: VertexSet, facets: Vec<VertexSet>) -> Self {
        SimplicialComplex { vertices, facets: maximal_sets(facets) }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_facets(n, [VertexSet::prefix(n)])
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Largest face dimension; `-1` for the complex `{∅}`.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// True if some vertex lies in every facet.
    pub fn is_cone(&self) -> bool {
        let common = self.facets.iter().fold(self.vertices, |a, f| a.intersection(*f));
        !self.facets.is_empty() && !common.is_empty()
    }

    /// All faces grouped by dimension; entry `0` holds the empty face.
    pub fn faces_by_dim(&self) -> Result<Vec<Vec<VertexSet>>> {
        if self.n() > FACE_ENUMERATION_LIMIT {
            return Err(Error::UnsupportedSize(format!(
                "face enumeration is limited to {FACE_ENUMERATION_LIMIT} vertices, complex has {}",
                self.n()
            )));
        }
        let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); (self.dim() + 2) as usize];
        if self.n() <= 16 {
            // walk every subset of the ground set
            let ground = self.vertices.bits();
            let mut s = ground;
            loop {
                let face = VertexSet(s);
                if self.contains_face(face) {
                    by_dim[face.len()].push(face);
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & ground;
            }
        } else {
            let mut seen = HashSet::new();
            seen.insert(0u64);
            by_dim[0].push(VertexSet::EMPTY);
            for f in &self.facets {
                let full = f.bits();
                let mut s = full;
                while s != 0 {
                    if seen.insert(s) {
                        by_dim[s.count_ones() as usize].push(VertexSet(s));
                    }
                    s = (s - 1) & full;
                }
            }
        }
        for layer in &mut by_dim {
            layer.sort_unstable_by_key(|f| f.bits());
        }
        Ok(by_dim)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(vertices={:?}, facets=", self.vertices)?;
        f.debug_list().entries(&self.facets).finish()?;
        write!(f, ")")
    }
}

/// Face counts by dimension: `counts[0] = f_{-1} = 1`, `counts[i + 1] = f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.first() != Some(&1) {
            return Err(Error::Malformed("an f-vector starts with f_{-1} = 1".into()));
        }
        Ok(FVector { counts })
    }

    /// `f_dim`, zero beyond the top dimension.
    pub fn get(&self, dim: i32) -> u64 {
        usize::try_from(dim + 1).ok().and_then(|i| self.counts.get(i).copied()).unwrap_or(0)
    }

    /// Counts starting at `f_{-1}`.
    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }

    pub fn dim(&self) -> i32 {
        self.counts.len() as i32 - 2
    }
}

/// The flag (clique) complex: facets are the maximal cliques of `g`, found by
/// Bron–Kerbosch with pivoting.
pub fn flag_complex(g: &Graph) -> SimplicialComplex {
    let mut cliques = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut cliques);
    SimplicialComplex::from_parts(g.vertices(), cliques)
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    let px = p.union(x);
    let Some(first) = px.min() else {
        if !r.is_empty() {
            out.push(r);
        }
        return;
    };
    let pivot =
        px.iter().max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u))).unwrap_or(first);
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.union(VertexSet::singleton(v)), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Flag complex of a chordal graph from a perfect elimination ordering.
pub fn flag_complex_with_peo(g: &Graph, peo: &[usize]) -> Result<SimplicialComplex> {
    let cliques = maximal_cliques_chordal(g, peo)?;
    Ok(SimplicialComplex::from_parts(g.vertices(), cliques))
}

/// The 1-skeleton, as a graph on `0..m` where `m` is one more than the
/// largest vertex label.
pub fn one_skeleton(c: &SimplicialComplex) -> Graph {
    let m = 64 - c.vertices.bits().leading_zeros() as usize;
    let mut g = Graph::empty(m).expect("labels are below 62");
    for f in &c.facets {
        for (i, u) in f.iter().enumerate() {
            for v in f.iter().skip(i + 1) {
                g.add_edge(u, v).expect("distinct in-range vertices");
            }
        }
    }
    g
}

/// The induced subcomplex on `w`: faces of `c` contained in `w`.
pub fn restrict(c: &SimplicialComplex, w: VertexSet) -> SimplicialComplex {
    let w = w.intersection(c.vertices);
    let facets = c.facets.iter().map(|f| f.intersection(w)).filter(|f| !f.is_empty()).collect();
    SimplicialComplex::from_parts(w, facets)
}

pub fn f_vector(c: &SimplicialComplex) -> Result<FVector> {
    let faces = c.faces_by_dim()?;
    FVector::new(faces.iter().map(|l| l.len() as u64).collect())
}

/// Matrix of the boundary map from `dim`-faces to `(dim-1)`-faces.
fn boundary_matrix(lower: &[VertexSet], upper: &[VertexSet]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, face) in upper.iter().enumerate() {
        for (i, v) in face.iter().enumerate() {
            let sub = face.difference(VertexSet::singleton(v));
            let row =
                lower.binary_search_by_key(&sub.bits(), |f| f.bits()).expect("faces are closed under taking subsets");
            m[row][col] = if i % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Ranks of reduced homology over the rationals for dimensions
/// `-1..=dim`; entry `0` is dimension `-1`.
///
/// The complex `{∅}` has rank one in dimension `-1`.
pub fn reduced_homology_ranks(c: &SimplicialComplex) -> Result<Vec<usize>> {
    let faces = c.faces_by_dim()?;
    let top = faces.len();
    // boundary_rank[i] is the rank of the map out of faces[i]
    let mut boundary_rank = vec![0usize; top + 1];
    for i in 1..top {
        boundary_rank[i] = linalg::rank(&boundary_matrix(&faces[i - 1], &faces[i]));
    }
    let ranks: Vec<usize> = (0..top).map(|i| faces[i].len() - boundary_rank[i] - boundary_rank[i + 1]).collect();
    let alternating = |xs: &mut dyn Iterator<Item = usize>| -> i64 {
        xs.enumerate().map(|(i, x)| if i % 2 == 0 { -(x as i64) } else { x as i64 }).sum()
    };
    let euler_faces = alternating(&mut faces.iter().map(Vec::len));
    let euler_homology = alternating(&mut ranks.iter().copied());
    assert_eq!(euler_faces, euler_homology, "Euler–Poincaré identity failed for {c:?}");
    Ok(ranks)
}

/// Vertices lying in exactly one facet.
pub fn free_vertices(c: &SimplicialComplex) -> VertexSet {
    let mut once = VertexSet::EMPTY;
    let mut more = VertexSet::EMPTY;
    for f in &c.facets {
        more = more.union(once.intersection(*f));
        once = once.union(*f);
    }
    once.difference(more)
}

/// Why a complex is not a quasi-forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuasiForestRejection {
    /// The 1-skeleton has this chordless cycle.
    SkeletonNotChordal(Vec<usize>),
    /// The complex is not the clique complex of its 1-skeleton.
    NotFlag,
}

impl QuasiForestRejection {
    pub fn tag(&self) -> &'static str {
        match self {
            QuasiForestRejection::SkeletonNotChordal(_) => "skeleton-not-chordal",
            QuasiForestRejection::NotFlag => "not-flag",
        }
    }
}

impl fmt::Display for QuasiForestRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Recognizes quasi-forests: complexes whose 1-skeleton is chordal and which
/// equal the clique complex of that skeleton.
pub fn as_quasi_forest(c: &SimplicialComplex) -> std::result::Result<QuasiForestDecomposition, QuasiForestRejection> {
    let labels: Vec<usize> = c.vertices.to_vec();
    let mut index = [usize::MAX; 64];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let relabel = |f: VertexSet| -> VertexSet { f.iter().map(|v| index[v]).collect() };
    let restore = |f: VertexSet| -> VertexSet { f.iter().map(|i| labels[i]).collect() };

    let mut skeleton = Graph::empty(labels.len()).expect("at most 62 vertices");
    let mut packed: Vec<VertexSet> = c.facets.iter().map(|f| relabel(*f)).collect();
    for f in &packed {
        for (i, u) in f.iter().enumerate() {
            for v in f.iter().skip(i + 1) {
                skeleton.add_edge(u, v).expect("in range");
            }
        }
    }
    let qfd = decompose_chordal(&skeleton)
        .map_err(|cycle| QuasiForestRejection::SkeletonNotChordal(cycle.into_iter().map(|i| labels[i]).collect()))?;
    let mut ordered: Vec<VertexSet> = qfd.facets().to_vec();
    ordered.sort();
    packed.sort();
    if ordered != packed {
        return Err(QuasiForestRejection::NotFlag);
    }
    Ok(QuasiForestDecomposition::from_ordered_facets(qfd.facets().iter().map(|f| restore(*f)).collect())
        .expect("relabeling preserves the construction order"))
}

/// Reads the fixture format: a vertex count on the first line, then one
/// facet per line as space-separated vertex indices. Blank lines are
/// ignored.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Malformed("complex file is empty".into()))?;
    let n: usize =
        header.parse().map_err(|_| Error::Malformed(format!("expected a vertex count, found {header:?}")))?;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("{n} vertices exceeds the limit")));
    }
    let mut facets = Vec::new();
    for line in lines {
        let mut f = VertexSet::EMPTY;
        for tok in line.split_ascii_whitespace() {
            let v: usize =
                tok.parse().map_err(|_| Error::Malformed(format!("expected a vertex index, found {tok:?}")))?;
            if v >= n {
                return Err(Error::Malformed(format!("vertex {v} out of range for {n} vertices")));
            }
            f.insert(v);
        }
        facets.push(f);
    }
    SimplicialComplex::from_facets(n, facets)
}

/// Writes the fixture format read by [`parse_complex`].
pub fn to_fixture_text(c: &SimplicialComplex) -> String {
    let n = 64 - c.vertices.bits().leading_zeros() as usize;
    let mut out = format!("{n}\n");
    for f in &c.facets {
        let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f))).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        complex(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn flag_complex_examples() {
        let c = flag_complex(&cycle(4).unwrap().complement());
        assert_eq!(c.facets(), &[vs(&[0, 2]), vs(&[1, 3])]);
        let c = flag_complex(&Graph::complete(5).unwrap());
        assert_eq!(c.facets(), &[VertexSet::prefix(5)]);
        let c = flag_complex(&cycle(5).unwrap());
        assert_eq!(c.facets().len(), 5);
        assert!(c.facets().iter().all(|f| f.len() == 2));
        let c = flag_complex(&Graph::empty(3).unwrap());
        assert_eq!(c.facets(), &[vs(&[0]), vs(&[1]), vs(&[2])]);
    }

    #[test]
    fn one_skeleton_examples() {
        assert_eq!(one_skeleton(&complex(3, &[&[0, 1, 2]])), Graph::complete(3).unwrap());
        let g = one_skeleton(&complex(3, &[&[0, 1], &[2]]));
        assert_eq!(g, Graph::from_edges(3, [(0, 1)]).unwrap());
    }

    #[test]
    fn restrict_examples() {
        let k4 = flag_complex(&Graph::complete(4).unwrap());
        let empty = restrict(&k4, VertexSet::EMPTY);
        assert_eq!(empty.facets(), &[] as &[VertexSet]);
        assert_eq!(empty.n(), 0);
        assert_eq!(restrict(&k4, vs(&[0, 1])).facets(), &[vs(&[0, 1])]);
        let c = complex(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(restrict(&c, vs(&[0, 2])).facets(), &[vs(&[0]), vs(&[2])]);
    }

    #[test]
    fn f_vector_examples() {
        assert_eq!(f_vector(&complex(3, &[&[0, 1, 2]])).unwrap().as_slice(), &[1, 3, 3, 1]);
        assert_eq!(f_vector(&complex(4, &[&[0, 1], &[2, 3]])).unwrap().as_slice(), &[1, 4, 2]);
        let c5 = f_vector(&flag_complex(&cycle(5).unwrap())).unwrap();
        assert_eq!((c5.get(0), c5.get(1), c5.get(2)), (5, 5, 0));
        let empty = f_vector(&restrict(&hollow_triangle(), VertexSet::EMPTY)).unwrap();
        assert_eq!(empty.as_slice(), &[1]);
    }

    #[test]
    fn f_vector_above_sixteen_vertices() {
        let c = SimplicialComplex::from_facets(20, [VertexSet::prefix(10), VertexSet(0xFFC00 | 1)]).unwrap();
        let f = f_vector(&c).unwrap();
        // two 10- and 11-vertex simplices sharing vertex 0
        let binom = |n: u64, k: u64| if k > n { 0 } else { (0..k).fold(1u64, |a, i| a * (n - i) / (i + 1)) };
        for d in 0..=10 {
            let k = d + 1;
            let expected = binom(10, k) + binom(11, k) - binom(1, k);
            assert_eq!(f.get(d as i32), expected, "dim {d}");
        }
    }

    #[test]
    fn face_guard() {
        let c = SimplicialComplex::simplex(26).unwrap();
        assert!(matches!(f_vector(&c), Err(Error::UnsupportedSize(_))));
        assert!(matches!(reduced_homology_ranks(&c), Err(Error::UnsupportedSize(_))));
    }

    #[test]
    fn homology_examples() {
        assert!(reduced_homology_ranks(&complex(4, &[&[0, 1, 2, 3]])).unwrap().iter().all(|&r| r == 0));
        assert_eq!(reduced_homology_ranks(&complex(4, &[&[0, 1], &[2, 3]])).unwrap(), vec![0, 1, 0]);
        assert_eq!(reduced_homology_ranks(&hollow_triangle()).unwrap(), vec![0, 0, 1]);
        let empty = restrict(&hollow_triangle(), VertexSet::EMPTY);
        assert_eq!(reduced_homology_ranks(&empty).unwrap(), vec![1]);
    }

    #[test]
    fn homology_of_sphere_and_torus_free_examples() {
        // boundary of the 3-simplex is a 2-sphere
        let sphere = complex(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        assert_eq!(reduced_homology_ranks(&sphere).unwrap(), vec![0, 0, 0, 1]);
        // two hollow triangles glued at a vertex: a wedge of two circles
        let wedge = complex(5, &[&[0, 1], &[1, 2], &[0, 2], &[0, 3], &[3, 4], &[0, 4]]);
        assert_eq!(reduced_homology_ranks(&wedge).unwrap(), vec![0, 0, 2]);
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(free_vertices(&complex(4, &[&[0, 1, 2], &[1, 2, 3]])), vs(&[0, 3]));
        assert_eq!(free_vertices(&complex(3, &[&[0, 1, 2]])), vs(&[0, 1, 2]));
        assert_eq!(free_vertices(&hollow_triangle()), VertexSet::EMPTY);
    }

    #[test]
    fn quasi_forest_examples() {
        let q = as_quasi_forest(&complex(4, &[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(q.r_min(), Some(-1));
        assert_eq!(as_quasi_forest(&hollow_triangle()), Err(QuasiForestRejection::NotFlag));
        let square = complex(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert_eq!(as_quasi_forest(&square), Err(QuasiForestRejection::SkeletonNotChordal(vec![0, 1, 2, 3])));
        let b = flag_complex(&barbell(4).unwrap());
        let q = as_quasi_forest(&b).unwrap();
        assert_eq!(q.attach_dims(), &[0, 0]);
    }

    #[test]
    fn quasi_forest_on_sparse_labels() {
        let c = complex(6, &[&[0, 1, 2, 3, 4, 5]]);
        let r = restrict(&c, vs(&[1, 4, 5]));
        let q = as_quasi_forest(&r).unwrap();
        assert_eq!(q.facets(), &[vs(&[1, 4, 5])]);
    }

    #[test]
    fn fixture_format() {
        let c = parse_complex("3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(c, hollow_triangle());
        assert_eq!(parse_complex(&to_fixture_text(&c)).unwrap(), c);
        assert!(parse_complex("3\n0 1\n").is_err());
        assert!(parse_complex("2\n0 2\n").is_err());
        assert!(parse_complex("x\n").is_err());
        assert!(parse_complex("").is_err());
        let with_redundant = parse_complex("3\n0 1 2\n0 1\n").unwrap();
        assert_eq!(with_redundant.facets(), &[vs(&[0, 1, 2])]);
    }
}
