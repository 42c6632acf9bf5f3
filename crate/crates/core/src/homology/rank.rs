//! Exact ranks over 𝔽_p and ℚ by column reduction.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::chain::SparseMatrix;

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `𝔽_p`; `p` must be prime and below 2^32.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for column in &m.columns {
        let mut col: Vec<(usize, u64)> =
            column.iter().map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64)).filter(|&(_, v)| v != 0).collect();
        while let Some(&(low, value)) = col.last() {
            let Some(pivot) = pivots.get(&low) else {
                let inv = inverse_mod(value, p);
                for entry in &mut col {
                    entry.1 = entry.1 * inv % p;
                }
                pivots.insert(low, col);
                break;
            };
            // pivot columns are normalized to 1 at their low row
            col = axpy_mod(&col, value, pivot, p);
        }
    }
    pivots.len()
}

/// `col − factor · pivot` mod p, both sorted by row.
fn axpy_mod(col: &[(usize, u64)], factor: u64, pivot: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < pivot.len() {
        let take_col = j >= pivot.len() || (i < col.len() && col[i].0 < pivot[j].0);
        let take_piv = i >= col.len() || (j < pivot.len() && pivot[j].0 < col[i].0);
        if take_col {
            out.push(col[i]);
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, (p - factor * pivot[j].1 % p) % p));
            j += 1;
        } else {
            let v = (col[i].1 + p - factor * pivot[j].1 % p) % p;
            if v != 0 {
                out.push((col[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over ℚ by fraction-free elimination: `c ← a·c − b·pivot`, then divide
/// out the content of `c`.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for column in &m.columns {
        let mut col: Vec<(usize, BigInt)> = column.iter().map(|&(r, v)| (r, BigInt::from(v))).collect();
        while let Some((low, value)) = col.last().cloned() {
            let Some(pivot) = pivots.get(&low) else {
                pivots.insert(low, col);
                break;
            };
            let lead = pivot.last().expect("pivot column is nonempty").1.clone();
            col = combine(&col, &lead, pivot, &value);
            normalize_content(&mut col);
        }
    }
    pivots.len()
}

/// `a · col − b · pivot`, dropping zeros.
fn combine(col: &[(usize, BigInt)], a: &BigInt, pivot: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < pivot.len() {
        if j >= pivot.len() || (i < col.len() && col[i].0 < pivot[j].0) {
            out.push((col[i].0, a * &col[i].1));
            i += 1;
        } else if i >= col.len() || pivot[j].0 < col[i].0 {
            out.push((pivot[j].0, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let v = a * &col[i].1 - b * &pivot[j].1;
            if !v.is_zero() {
                out.push((col[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize_content(col: &mut [(usize, BigInt)]) {
    let g = col.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        for (_, v) in col.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_by_characteristic() {
        let m = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn dependent_columns() {
        let m = SparseMatrix::from_dense(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(rank_rational(&m), 2);
        // every row is (1, 2, 0) mod 3
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 7), 2);
    }
}
