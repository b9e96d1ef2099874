//! Chordality, clique trees and quasi-forest orderings.
//!
//! Recognition runs maximum cardinality search and checks the reversed visit
//! order as a perfect elimination ordering. A failed check is turned into a
//! chordless cycle, so both answers come with a certificate.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Outcome of [`is_chordal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordalityResult {
    /// A perfect elimination ordering: for every vertex, the neighbors that
    /// come later in the ordering form a clique.
    Chordal(Vec<usize>),
    /// An induced cycle of length at least four, listed starting at its
    /// smallest vertex and continuing towards the smaller of that vertex's
    /// two cycle neighbors.
    NotChordal(Vec<usize>),
}

impl ChordalityResult {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityResult::Chordal(_))
    }

    pub fn peo(&self) -> Option<&[usize]> {
        match self {
            ChordalityResult::Chordal(p) => Some(p),
            ChordalityResult::NotChordal(_) => None,
        }
    }

    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            ChordalityResult::Chordal(_) => None,
            ChordalityResult::NotChordal(c) => Some(c),
        }
    }
}

/// Maximum cardinality search visit order, ties broken by lowest index.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while let Some(first) = unvisited.min() {
        let mut best = first;
        for v in unvisited.iter() {
            if weight[v] > weight[best] {
                best = v;
            }
        }
        unvisited.remove(best);
        order.push(best);
        for u in g.neighbors(best).intersection(unvisited) {
            weight[u] += 1;
        }
    }
    order
}

/// Positions of each vertex in `order`; `None` unless `order` is a
/// permutation of `0..n`.
fn positions(order: &[usize], n: usize) -> Option<Vec<usize>> {
    if order.len() != n {
        return None;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return None;
        }
        pos[v] = i;
    }
    Some(pos)
}

/// Neighbors of each vertex that come later in `order` (a permutation).
fn later_neighborhoods(g: &Graph, order: &[usize]) -> Vec<VertexSet> {
    let mut later = vec![VertexSet::EMPTY; g.n()];
    let mut seen_after = VertexSet::EMPTY;
    for &v in order.iter().rev() {
        later[v] = g.neighbors(v).intersection(seen_after);
        seen_after.insert(v);
    }
    later
}

/// First vertex (in `order`) whose later neighbors are not a clique, with the
/// lexicographically smallest non-adjacent pair among them.
fn first_violation(g: &Graph, order: &[usize], later: &[VertexSet]) -> Option<(usize, usize, usize)> {
    for &v in order {
        let l = later[v];
        for x in l.iter() {
            let missing = l.difference(g.neighbors(x)).difference(VertexSet::singleton(x));
            if let Some(y) = missing.iter().find(|&y| y > x) {
                return Some((v, x, y));
            }
        }
    }
    None
}

/// Decides chordality, returning a perfect elimination ordering or a
/// chordless cycle.
pub fn is_chordal(g: &Graph) -> ChordalityResult {
    let mut peo = mcs_order(g);
    peo.reverse();
    let later = later_neighborhoods(g, &peo);
    match first_violation(g, &peo, &later) {
        None => ChordalityResult::Chordal(peo),
        Some((v, x, y)) => {
            let cycle = chordless_cycle_through(g, v, x, y)
                .or_else(|| any_chordless_cycle(g))
                .expect("a graph without a perfect elimination ordering has a chordless cycle");
            let cycle = canonical_cycle(cycle);
            assert!(is_chordless_cycle(g, &cycle), "chordless cycle certificate failed verification: {cycle:?}");
            ChordalityResult::NotChordal(cycle)
        }
    }
}

/// Closes a shortest `x`–`y` path that avoids the closed neighborhood of `v`
/// into a cycle through `v`. Requires `x`, `y` to be non-adjacent neighbors
/// of `v`.
fn chordless_cycle_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let blocked = g.neighbors(v).union(VertexSet::singleton(v));
    let allowed = g.vertices().difference(blocked).union(VertexSet::from_vertices([x, y]));
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = VertexSet::singleton(x);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if u == y {
            break;
        }
        let next = g.neighbors(u).intersection(allowed).difference(seen);
        for w in next.iter() {
            seen.insert(w);
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if !seen.contains(y) {
        return None;
    }
    let mut path = vec![y];
    let mut cur = y;
    while cur != x {
        cur = parent[cur];
        path.push(cur);
    }
    path.push(v);
    Some(path)
}

fn any_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for x in nb.iter() {
            for y in nb.difference(g.neighbors(x)).iter().filter(|&y| y > x) {
                if let Some(c) = chordless_cycle_through(g, v, x, y) {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    if len > 2 && cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// True if `order` is a perfect elimination ordering of `g`.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    if positions(order, g.n()).is_none() {
        return false;
    }
    later_neighborhoods(g, order).into_iter().all(|l| g.is_clique(l))
}

/// True if `cycle` lists the vertices of an induced cycle of length >= 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let set = VertexSet::from_vertices(cycle.iter().copied());
    if set.len() != len {
        return false;
    }
    (0..len).all(|i| {
        let v = cycle[i];
        let expected = VertexSet::from_vertices([cycle[(i + 1) % len], cycle[(i + len - 1) % len]]);
        g.neighbors(v).intersection(set) == expected
    })
}

/// Maximal cliques of a chordal graph from one of its perfect elimination
/// orderings, in lexicographic order.
pub fn maximal_cliques_chordal(g: &Graph, peo: &[usize]) -> Result<Vec<VertexSet>> {
    if !is_perfect_elimination_ordering(g, peo) {
        return Err(Error::ContractViolation("ordering is not a perfect elimination ordering".into()));
    }
    let later = later_neighborhoods(g, peo);
    let candidates: Vec<VertexSet> = peo.iter().map(|&v| later[v].union(VertexSet::singleton(v))).collect();
    Ok(maximal_sets(candidates))
}

/// Keeps the inclusion-maximal members of `sets`, deduplicated and sorted.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// A maximum-weight spanning forest of the clique intersection graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    cliques: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// Tree edges `(i, j)` on clique indices with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn separator(&self, i: usize, j: usize) -> VertexSet {
        self.cliques[i].intersection(self.cliques[j])
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Clique indices grouped by tree component. Components are ordered by
    /// their smallest vertex; indices within a component ascend.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.cliques.len()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.cliques.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                for &w in &adj[members[i]] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        let min_vertex = |c: &Vec<usize>| c.iter().filter_map(|&i| self.cliques[i].min()).min().unwrap_or(usize::MAX);
        out.sort_by_key(min_vertex);
        out
    }

    /// True if, for every vertex, the cliques containing it induce a
    /// connected subtree.
    pub fn has_running_intersection(&self) -> bool {
        let adj = self.adjacency();
        let all = self.cliques.iter().fold(VertexSet::EMPTY, |a, c| a.union(*c));
        all.iter().all(|v| {
            let holding: Vec<usize> = (0..self.cliques.len()).filter(|&i| self.cliques[i].contains(v)).collect();
            let mut seen = vec![false; self.cliques.len()];
            let mut stack = vec![holding[0]];
            seen[holding[0]] = true;
            let mut reached = 1;
            while let Some(i) = stack.pop() {
                for &j in &adj[i] {
                    if !seen[j] && self.cliques[j].contains(v) {
                        seen[j] = true;
                        reached += 1;
                        stack.push(j);
                    }
                }
            }
            reached == holding.len()
        })
    }
}

/// Builds a clique tree by Kruskal's algorithm on intersection sizes.
///
/// Candidate edges are taken by decreasing weight, ties by lexicographic
/// index pair; pairs with empty intersection never join, so disconnected
/// graphs yield one tree per component.
pub fn clique_tree(cliques: &[VertexSet], g: &Graph) -> Result<CliqueTree> {
    if !is_chordal(g).is_chordal() {
        return Err(Error::ContractViolation("clique tree requested for a non-chordal graph".into()));
    }
    if let Some(c) = cliques.iter().find(|c| !g.is_clique(**c)) {
        return Err(Error::ContractViolation(format!("{c:?} is not a clique")));
    }
    Ok(clique_tree_unchecked(cliques.to_vec()))
}

pub(crate) fn clique_tree_unchecked(cliques: Vec<VertexSet>) -> CliqueTree {
    let k = cliques.len();
    let mut candidates: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = cliques[i].intersection(cliques[j]).len();
            if w > 0 {
                candidates.push((w, i, j));
            }
        }
    }
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut edges = Vec::new();
    for (_, i, j) in candidates {
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    CliqueTree { cliques, edges }
}

/// An ordering `F_1, .., F_k` of the facets of a quasi-forest together with
/// the facet dimensions `d_i = |F_i| - 1` and attachment dimensions
/// `r_i = |F_i ∩ (F_1 ∪ .. ∪ F_{i-1})| - 1` for `i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiForestDecomposition {
    facets: Vec<VertexSet>,
    dims: Vec<usize>,
    attach_dims: Vec<i32>,
    n: usize,
}

impl QuasiForestDecomposition {
    /// Validates an ordered facet list as a quasi-forest construction order.
    ///
    /// Each facet after the first must meet the union of its predecessors in a
    /// face of a single earlier facet and bring at least one new vertex.
    pub fn from_ordered_facets(facets: Vec<VertexSet>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::UndefinedInput("quasi-forest with no facets".into()));
        }
        if facets.iter().any(|f| f.is_empty()) {
            return Err(Error::ContractViolation("empty facet".into()));
        }
        for (i, a) in facets.iter().enumerate() {
            for (j, b) in facets.iter().enumerate() {
                if i != j && a.is_subset(*b) {
                    return Err(Error::ContractViolation(format!("facet {a:?} lies inside {b:?}")));
                }
            }
        }
        let mut seen = facets[0];
        let mut attach_dims = Vec::with_capacity(facets.len() - 1);
        for (i, f) in facets.iter().enumerate().skip(1) {
            let meet = f.intersection(seen);
            if !facets[..i].iter().any(|e| meet.is_subset(*e)) {
                return Err(Error::ContractViolation(format!(
                    "facet {f:?} meets its predecessors in {meet:?}, which is not a face"
                )));
            }
            attach_dims.push(meet.len() as i32 - 1);
            seen = seen.union(*f);
        }
        let dims = facets.iter().map(|f| f.len() - 1).collect();
        Ok(QuasiForestDecomposition { n: seen.len(), facets, dims, attach_dims })
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facet count `k`.
    pub fn k(&self) -> usize {
        self.facets.len()
    }

    /// `d_1, .., d_k`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `r_2, .., r_k`; empty for a single facet.
    pub fn attach_dims(&self) -> &[i32] {
        &self.attach_dims
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `min r_i`, defined when there are at least two facets.
    pub fn r_min(&self) -> Option<i32> {
        self.attach_dims.iter().copied().min()
    }

    pub fn vertices(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f))
    }
}

/// Orders the facets of a clique tree root-first.
///
/// Components are taken by smallest vertex; each is rooted at its clique
/// with the smallest minimum vertex and walked depth-first with children in
/// index order, so every facet meets the earlier ones exactly in its
/// separator with its parent.
pub fn quasi_forest_order(tree: &CliqueTree) -> Result<QuasiForestDecomposition> {
    let roots: Vec<usize> = tree
        .components()
        .iter()
        .map(|comp| *comp.iter().min_by_key(|&&i| (tree.cliques[i].min(), i)).expect("components are non-empty"))
        .collect();
    quasi_forest_order_rooted(tree, &roots)
}

/// Like [`quasi_forest_order`] with an explicit root per component
/// (`roots[c]` belongs to the `c`-th entry of [`CliqueTree::components`]).
pub fn quasi_forest_order_rooted(tree: &CliqueTree, roots: &[usize]) -> Result<QuasiForestDecomposition> {
    let comps = tree.components();
    if roots.len() != comps.len() {
        return Err(Error::ContractViolation(format!("{} roots given for {} components", roots.len(), comps.len())));
    }
    let adj = tree.adjacency();
    let mut visited = vec![false; tree.cliques.len()];
    let mut order = Vec::with_capacity(tree.cliques.len());
    for (comp, &root) in comps.iter().zip(roots) {
        if !comp.contains(&root) {
            return Err(Error::ContractViolation(format!("root {root} is not in component {comp:?}")));
        }
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            if visited[i] {
                continue;
            }
            visited[i] = true;
            order.push(tree.cliques[i]);
            for &j in adj[i].iter().rev() {
                if !visited[j] {
                    stack.push(j);
                }
            }
        }
    }
    QuasiForestDecomposition::from_ordered_facets(order)
}

/// Quasi-forest decomposition of the flag complex of a chordal graph, or the
/// chordless cycle that rules it out.
pub fn decompose_chordal(g: &Graph) -> std::result::Result<QuasiForestDecomposition, Vec<usize>> {
    match is_chordal(g) {
        ChordalityResult::NotChordal(c) => Err(c),
        ChordalityResult::Chordal(peo) => {
            let cliques = maximal_cliques_chordal(g, &peo).expect("MCS yields a valid PEO");
            let tree = clique_tree_unchecked(cliques);
            Ok(quasi_forest_order(&tree).expect("clique trees of chordal graphs order as quasi-forests"))
        }
    }
}
