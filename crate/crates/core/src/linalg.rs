//! Exact matrix rank by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

/// Rank of an integer matrix given as rows.
///
/// Elimination runs in `i128` with checked arithmetic and restarts over
/// `BigInt` if an intermediate minor overflows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let narrow: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if let Some(r) = bareiss_rank(narrow) {
        return r;
    }
    let wide: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    bareiss_rank(wide).expect("arbitrary precision elimination cannot overflow")
}

/// Bareiss elimination with row pivoting. Returns `None` on overflow.
///
/// After step `k` every entry is a `(k+1)`-minor of the input, so each
/// division by the previous pivot is exact.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + CheckedDiv,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank][col + 1..];
        for row in below {
            let factor = row[col].clone();
            for (x, p) in row[col + 1..].iter_mut().zip(pivot_row) {
                let a = x.checked_mul(&pivot)?;
                let b = p.checked_mul(&factor)?;
                *x = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
        assert_eq!(rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]), 2);
    }

    #[test]
    fn rank_over_rationals_ignores_torsion() {
        // [[2]] has rank 1 over Q even though it is not unimodular
        assert_eq!(rank(&[vec![2, 0], vec![0, 0]]), 1);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX;
        let m = vec![
            vec![big, big - 1, 3],
            vec![big - 2, big, 5],
            vec![big - 3, big - 4, 7],
            vec![2 * (big / 3), big / 5, 11],
        ];
        let narrow: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        assert!(bareiss_rank(narrow).is_none());
        assert_eq!(rank(&m), 3);
    }
}
