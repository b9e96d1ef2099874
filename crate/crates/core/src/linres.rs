//! Closed-form invariants of quasi-forests.
//!
//! For a quasi-forest with facet dimensions `d_1..d_k` and attachment
//! dimensions `r_2..r_k` on `n` vertices, the Stanley–Reisner ring has
//!
//! * Hilbert series `Σ 1/(1-t)^(d_i+1) - Σ_{i>=2} 1/(1-t)^(r_i+1)`,
//! * projective dimension `n - min r_i - 2`,
//! * depth `min r_i + 2`,
//! * Krull dimension `1 + max d_i`,
//!
//! and it is Cohen–Macaulay exactly when all `d_i` equal some `d` and all
//! `r_i = d - 1`. A single simplex is the polynomial ring: `pd = 0` and
//! `depth = n`.

use std::collections::BTreeMap;

use crate::chordal::{clique_tree_unchecked, CliqueTree, QuasiForestDecomposition};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::simplicial::FVector;

/// Facet count up to which [`d_tree_signature`] falls back to searching every
/// facet order.
pub const D_TREE_EXHAUSTIVE_LIMIT: usize = 8;

/// A Hilbert series `p(t) / (1-t)^denom_power` with integer numerator.
///
/// Trailing zero coefficients are trimmed, so equality is coefficientwise
/// equality of numerators over the same denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<i128>,
    denom_power: usize,
}

impl HilbertSeries {
    pub fn new(mut numerator: Vec<i128>, denom_power: usize) -> Self {
        while numerator.last() == Some(&0) {
            numerator.pop();
        }
        HilbertSeries { numerator, denom_power }
    }

    /// Coefficients `p_0, p_1, ..` of the numerator.
    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denom_power(&self) -> usize {
        self.denom_power
    }

    /// Degree of the numerator; `None` for the zero polynomial.
    pub fn numerator_degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    /// Cancels common factors of `(1-t)`. Only meant for display; the
    /// canonical form keeps the denominator at the vertex count.
    pub fn reduced(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut power = self.denom_power;
        while power > 0 && !num.is_empty() && num.iter().sum::<i128>() == 0 {
            // synthetic division by (1 - t): q_i = Σ_{j<=i} p_j
            let mut acc = 0i128;
            let mut q: Vec<i128> = num
                .iter()
                .map(|&c| {
                    acc += c;
                    acc
                })
                .collect();
            q.pop();
            num = q;
            power -= 1;
        }
        HilbertSeries::new(num, power)
    }
}

/// Coefficients of `(1-t)^m`.
fn one_minus_t_pow(m: usize) -> Result<Vec<i128>> {
    let mut coeffs = Vec::with_capacity(m + 1);
    let mut c: i128 = 1;
    for i in 0..=m {
        coeffs.push(if i % 2 == 0 { c } else { -c });
        if i < m {
            c = c.checked_mul((m - i) as i128).ok_or(Error::Overflow("binomial coefficient"))? / (i as i128 + 1);
        }
    }
    Ok(coeffs)
}

/// `acc += scale * t^shift * poly`, checked.
fn add_scaled(acc: &mut Vec<i128>, poly: &[i128], scale: i128, shift: usize) -> Result<()> {
    if acc.len() < poly.len() + shift {
        acc.resize(poly.len() + shift, 0);
    }
    for (i, &c) in poly.iter().enumerate() {
        let term = c.checked_mul(scale).ok_or(Error::Overflow("Hilbert numerator"))?;
        acc[i + shift] = acc[i + shift].checked_add(term).ok_or(Error::Overflow("Hilbert numerator"))?;
    }
    Ok(())
}

/// Hilbert series of a quasi-forest from its decomposition, over `(1-t)^n`.
pub fn hilbert_from_decomposition(qfd: &QuasiForestDecomposition) -> Result<HilbertSeries> {
    let n = qfd.n();
    let mut num = Vec::new();
    for &d in qfd.dims() {
        add_scaled(&mut num, &one_minus_t_pow(n - d - 1)?, 1, 0)?;
    }
    for &r in qfd.attach_dims() {
        let m = usize::try_from(n as i64 - r as i64 - 1).expect("attachments are smaller than n");
        add_scaled(&mut num, &one_minus_t_pow(m)?, -1, 0)?;
    }
    let h = HilbertSeries::new(num, n);
    let expected_degree = match qfd.r_min() {
        Some(r) => (n as i64 - r as i64 - 1) as usize,
        None => 0,
    };
    if h.numerator_degree() != Some(expected_degree) {
        return Err(Error::ContractViolation(format!(
            "numerator degree {:?} differs from n - min r - 1 = {expected_degree}",
            h.numerator_degree()
        )));
    }
    Ok(h)
}

/// The Stanley–Reisner Hilbert series `Σ_i f_{i-1} t^i / (1-t)^i`, brought
/// over `(1-t)^n`.
pub fn hilbert_from_fvector(fv: &FVector, n: usize) -> Result<HilbertSeries> {
    let counts = fv.as_slice();
    if counts.len() > n + 1 {
        return Err(Error::ContractViolation(format!("f-vector of dimension {} on {n} vertices", fv.dim())));
    }
    let mut num = Vec::new();
    for (i, &f) in counts.iter().enumerate() {
        add_scaled(&mut num, &one_minus_t_pow(n - i)?, f as i128, i)?;
    }
    Ok(HilbertSeries::new(num, n))
}

/// Graded Betti numbers `β_{i,j}` for `i >= 1`; `β_{0,0} = 1` is implicit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn add(&mut self, i: usize, j: usize, value: u64) {
        if value == 0 || i == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += value;
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        if (i, j) == (0, 0) {
            return 1;
        }
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries with `i >= 1`, ordered by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Nonzero entries including `β_{0,0}`.
    pub fn triples(&self) -> Vec<(usize, usize, u64)> {
        std::iter::once((0, 0, 1)).chain(self.iter().map(|((i, j), v)| (i, j, v))).collect()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// True if every nonzero `β_{i,j}` with `i >= 1` has `j = i + 1`.
    pub fn is_2linear(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + 1)
    }
}

/// Reads off the Betti numbers of a 2-linear resolution from the numerator
/// `1 - β_{1,2} t^2 + β_{2,3} t^3 - ...`.
pub fn betti_from_numerator(h: &HilbertSeries) -> Result<BettiTable> {
    let p = h.numerator();
    if p.first() != Some(&1) {
        return Err(Error::NotTwoLinear(format!("numerator constant term is {:?}", p.first())));
    }
    if p.get(1).copied().unwrap_or(0) != 0 {
        return Err(Error::NotTwoLinear(format!("numerator has t coefficient {}", p[1])));
    }
    let mut table = BettiTable::new();
    for (j, &c) in p.iter().enumerate().skip(2) {
        let i = j - 1;
        let beta = if i % 2 == 0 { c } else { -c };
        if beta < 0 {
            return Err(Error::NotTwoLinear(format!("coefficient {c} of t^{j} has the wrong sign")));
        }
        let beta = u64::try_from(beta).map_err(|_| Error::Overflow("Betti number"))?;
        table.add(i, j, beta);
    }
    Ok(table)
}

pub fn projective_dimension(qfd: &QuasiForestDecomposition) -> usize {
    match qfd.r_min() {
        Some(r) => (qfd.n() as i64 - r as i64 - 2) as usize,
        None => 0,
    }
}

pub fn depth(qfd: &QuasiForestDecomposition) -> usize {
    match qfd.r_min() {
        Some(r) => (r + 2) as usize,
        None => qfd.n(),
    }
}

pub fn krull_dim(qfd: &QuasiForestDecomposition) -> usize {
    1 + qfd.dims().iter().copied().max().unwrap_or(0)
}

/// Cohen–Macaulay test: equal facet dimensions `d` and every attachment of
/// dimension `d - 1`.
pub fn is_cm(qfd: &QuasiForestDecomposition) -> bool {
    let d = qfd.dims()[0];
    qfd.dims().iter().all(|&x| x == d) && qfd.attach_dims().iter().all(|&r| r == d as i32 - 1)
}

/// Facet dimensions in nonincreasing order if some quasi-forest order of the
/// facets attaches every facet after the first along a face of codimension
/// one in it, `None` if no order does.
///
/// Every rooting of the clique tree is tried first; when none works and the
/// facet count is at most [`D_TREE_EXHAUSTIVE_LIMIT`], all orders are
/// searched. Larger inputs without a tree witness are reported as
/// unsupported.
pub fn d_tree_signature(qfd: &QuasiForestDecomposition) -> Result<Option<Vec<usize>>> {
    let mut signature = qfd.dims().to_vec();
    signature.sort_unstable_by(|a, b| b.cmp(a));
    let mut facets = qfd.facets().to_vec();
    facets.sort();
    let tree = clique_tree_unchecked(facets.clone());
    if d_tree_by_rooting(&tree) {
        return Ok(Some(signature));
    }
    if facets.len() <= D_TREE_EXHAUSTIVE_LIMIT {
        return Ok(d_tree_by_exhaustive_order(&facets).then_some(signature));
    }
    Err(Error::UnsupportedSize(format!(
        "no clique-tree rooting is a d-tree order and {} facets exceed the exhaustive limit of {D_TREE_EXHAUSTIVE_LIMIT}",
        facets.len()
    )))
}

/// One component may be rooted anywhere; every other component must be a
/// single vertex, since it attaches along the empty face.
fn d_tree_by_rooting(tree: &CliqueTree) -> bool {
    let cliques = tree.cliques();
    let mut adj = vec![Vec::new(); cliques.len()];
    for &(i, j) in tree.edges() {
        adj[i].push(j);
        adj[j].push(i);
    }
    let rooted_ok = |root: usize| -> bool {
        let mut stack = vec![(root, usize::MAX)];
        while let Some((i, parent)) = stack.pop() {
            if parent != usize::MAX {
                let sep = cliques[i].intersection(cliques[parent]).len();
                if sep + 1 != cliques[i].len() {
                    return false;
                }
            }
            stack.extend(adj[i].iter().filter(|&&j| j != parent).map(|&j| (j, i)));
        }
        true
    };
    let comps = tree.components();
    let big: Vec<&Vec<usize>> = comps.iter().filter(|c| !(c.len() == 1 && cliques[c[0]].len() == 1)).collect();
    match big.as_slice() {
        [] => true,
        [comp] => comp.iter().any(|&root| rooted_ok(root)),
        _ => false,
    }
}

fn d_tree_by_exhaustive_order(facets: &[VertexSet]) -> bool {
    fn search(facets: &[VertexSet], placed: u32, covered: VertexSet, dead: &mut Vec<bool>) -> bool {
        let k = facets.len();
        if placed.count_ones() as usize == k {
            return true;
        }
        if dead[placed as usize] {
            return false;
        }
        for (i, f) in facets.iter().enumerate() {
            if placed >> i & 1 == 1 {
                continue;
            }
            let meet = f.intersection(covered);
            let ok = placed == 0
                || (meet.len() + 1 == f.len() && (0..k).any(|j| placed >> j & 1 == 1 && meet.is_subset(facets[j])));
            if ok && search(facets, placed | 1 << i, covered.union(*f), dead) {
                return true;
            }
        }
        dead[placed as usize] = true;
        false
    }
    let mut dead = vec![false; 1 << facets.len()];
    search(facets, 0, VertexSet::EMPTY, &mut dead)
}

/// The invariants of a quasi-forest gathered in one place.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub k: usize,
    pub r_min: Option<i32>,
    pub pd: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub is_cm: bool,
    pub d_tree: Option<Vec<usize>>,
}

impl InvariantReport {
    pub fn from_decomposition(qfd: &QuasiForestDecomposition) -> Result<Self> {
        Ok(InvariantReport {
            n: qfd.n(),
            k: qfd.k(),
            r_min: qfd.r_min(),
            pd: projective_dimension(qfd),
            depth: depth(qfd),
            krull_dim: krull_dim(qfd),
            is_cm: is_cm(qfd),
            d_tree: d_tree_signature(qfd)?,
        })
    }
}
