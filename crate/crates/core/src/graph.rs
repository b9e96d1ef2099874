//! Labeled simple graphs on at most 62 vertices.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count representable (short-form graph6 limit).
pub const MAX_VERTICES: usize = 62;

/// Largest vertex count accepted by [`enumerate_labeled`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// A set of vertices stored as a bit mask.
///
/// Ordering is lexicographic on the ascending vertex lists, so `{0,3}`
/// sorts before `{1,2}` and `{0,1}` before `{0,1,2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn prefix(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` holds the neighbor set of `v`; rows are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph { n, rows: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_size(n)?;
        let all = VertexSet::prefix(n).0;
        let rows = (0..n).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph { n, rows })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the set bits of `mask`, with bit `k`
    /// standing for the `k`-th vertex pair in graph6 column order
    /// `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self> {
        check_size(n)?;
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::Malformed(format!(
                "edge mask {mask:#x} has bits beyond the {pairs} pairs of {n} vertices"
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if bit < 64 && mask >> bit & 1 == 1 {
                    g.rows[i] |= 1u64 << j;
                    g.rows[j] |= 1u64 << i;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Malformed(format!("edge {{{u},{v}}} out of range for {} vertices", self.n)));
        }
        if u == v {
            return Err(Error::Malformed(format!("loop at vertex {u}")));
        }
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| VertexSet(self.rows[j] & ((1u64 << j) - 1)).iter().map(move |i| (i, j)))
    }

    /// True if `set` is a clique.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let all = VertexSet::prefix(self.n).0;
        let rows = self.rows.iter().enumerate().map(|(v, r)| all & !r & !(1u64 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// Largest vertex degree. Undefined for the graph on zero vertices.
    pub fn max_degree(&self) -> Result<usize> {
        max_degree(self)
    }

    /// Vertices adjacent to every other vertex.
    pub fn full_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) + 1 == self.n).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    Ok(())
}

pub fn max_degree(g: &Graph) -> Result<usize> {
    (0..g.n)
        .map(|v| g.degree(v))
        .max()
        .ok_or_else(|| Error::UndefinedInput("maximum degree of the graph on zero vertices".into()))
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";

/// Parses one graph in short-form graph6.
///
/// An optional `>>graph6<<` header and surrounding ASCII whitespace are
/// ignored. Padding bits in the final byte are not checked.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let text = text.trim_ascii();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let (&first, body) = text.split_first().ok_or_else(|| Error::Malformed("empty graph6 string".into()))?;
    for (pos, &b) in text.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Malformed(format!("byte {b:#04x} at offset {pos} is outside 63..126")));
        }
    }
    if first == 126 {
        return Err(Error::UnsupportedSize("long-form graph6 (more than 62 vertices) is not supported".into()));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Malformed(format!(
            "graph6 for {n} vertices needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                g.rows[i] |= 1u64 << j;
                g.rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph in short-form graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    check_size(g.n)?;
    let pairs = g.n * g.n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(g.n as u8 + 63);
    let mut chunk = 0u8;
    let mut k = 0;
    for j in 1..g.n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(chunk + 63);
                chunk = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((chunk << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses `"n u v u v ..."`: a vertex count followed by edge endpoint pairs.
/// Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_ascii_whitespace();
    let n_tok = tokens.next().ok_or_else(|| Error::Malformed("edge list is empty".into()))?;
    let n: usize = parse_token(n_tok)?;
    let mut g = Graph::empty(n)?;
    let ends: Vec<usize> = tokens.map(parse_token).collect::<Result<_>>()?;
    if !ends.len().is_multiple_of(2) {
        return Err(Error::Malformed("edge list has an unpaired endpoint".into()));
    }
    for pair in ends.chunks_exact(2) {
        g.add_edge(pair[0], pair[1])?;
    }
    Ok(g)
}

fn parse_token(tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Malformed(format!("expected a non-negative integer, found {tok:?}")))
}

/// Every labeled graph on `n` vertices, in edge-mask counter order.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "labeled enumeration is capped at {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        )));
    }
    Ok(LabeledGraphs { n, next: 0, end: labeled_count(n) })
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`, for `n <= 7`.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Iterator returned by [`enumerate_labeled`].
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next).expect("mask within range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Named graphs used in tests, examples and the gap families.
pub mod families {
    use super::*;

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::UndefinedInput(format!("cycle on {n} vertices")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{r,s}` with parts `0..r` and `r..r+s`.
    pub fn complete_bipartite(r: usize, s: usize) -> Result<Graph> {
        Graph::from_edges(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))
    }

    /// Two copies of `K_r` on `0..r` and `r..2r` joined by the bridge `{r-1, r}`.
    pub fn barbell(r: usize) -> Result<Graph> {
        let clique = |off: usize| (0..r).flat_map(move |i| (i + 1..r).map(move |j| (off + i, off + j)));
        let bridge = (r >= 1).then(|| (r - 1, r));
        Graph::from_edges(2 * r, clique(0).chain(clique(r)).chain(bridge))
    }
}
