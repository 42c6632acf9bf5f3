//! Smith normal form over ℤ.
//!
//! Unit pivots are eliminated first on a sparse row representation; whatever
//! survives (usually nothing) is finished densely with a smallest-absolute-value
//! pivot. Entries are `BigInt` throughout.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::chain::SparseMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | …`, all positive.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

struct SparseRows {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl SparseRows {
    fn new(m: &SparseMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.nrows];
        let mut col_rows = vec![BTreeSet::new(); m.ncols];
        for (c, col) in m.columns.iter().enumerate() {
            for &(r, v) in col {
                rows[r].insert(c, BigInt::from(v));
                col_rows[c].insert(r);
            }
        }
        SparseRows { rows, col_rows }
    }

    /// `row[target] -= factor · row[source]`.
    fn subtract_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        let entries: Vec<(usize, BigInt)> = self.rows[source].iter().map(|(&c, v)| (c, v * factor)).collect();
        let row = &mut self.rows[target];
        for (c, delta) in entries {
            let now_zero = {
                let slot = row.entry(c).or_insert_with(BigInt::zero);
                *slot -= delta;
                slot.is_zero()
            };
            if now_zero {
                row.remove(&c);
                self.col_rows[c].remove(&target);
            } else {
                self.col_rows[c].insert(target);
            }
        }
    }

    fn drop_row(&mut self, r: usize) {
        for c in std::mem::take(&mut self.rows[r]).into_keys() {
            self.col_rows[c].remove(&r);
        }
    }

    /// Eliminates every unit entry it can find; returns how many.
    fn eliminate_units(&mut self) -> usize {
        let mut count = 0;
        loop {
            let mut progressed = false;
            for c in 0..self.col_rows.len() {
                let pivot = self.col_rows[c]
                    .iter()
                    .copied()
                    .filter(|&r| self.rows[r][&c].abs().is_one())
                    .min_by_key(|&r| (self.rows[r].len(), r));
                let Some(p) = pivot else { continue };
                let unit = self.rows[p][&c].clone();
                let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&r| r != p).collect();
                for r in others {
                    let factor = &self.rows[r][&c] * &unit;
                    self.subtract_multiple(r, p, &factor);
                }
                self.drop_row(p);
                count += 1;
                progressed = true;
            }
            if !progressed {
                return count;
            }
        }
    }

    fn remaining_dense(&self) -> Vec<Vec<BigInt>> {
        let live_cols: Vec<usize> = (0..self.col_rows.len()).filter(|&c| !self.col_rows[c].is_empty()).collect();
        let index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        self.rows
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| {
                let mut dense = vec![BigInt::zero(); live_cols.len()];
                for (c, v) in r {
                    dense[index[c]] = v.clone();
                }
                dense
            })
            .collect()
    }
}

/// Diagonalizes a dense matrix; returns the nonzero diagonal (not yet a
/// divisibility chain).
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((pr, pc)) = smallest_entry(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&pivot);
                    let (top, rest) = a.split_at_mut(i);
                    for (target, source) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                        *target -= &q * source;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&pivot);
                    for row in a.iter_mut().skip(t) {
                        let delta = &q * &row[t];
                        row[j] -= delta;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot is left in row t or column t
            let cross = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            let (r, c) = smallest_entry(&a, cross).expect("nonzero remainder exists");
            if c == t {
                a.swap(t, r);
            } else {
                for row in a.iter_mut() {
                    row.swap(t, c);
                }
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal
}

fn smallest_entry(a: &[Vec<BigInt>], cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&(i, j)| !a[i][j].is_zero()).min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}

/// Rewrites a diagonal into invariant factors `d_1 | d_2 | …`.
fn divisibility_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

pub fn smith_normal_form(m: &SparseMatrix) -> SmithForm {
    let mut rows = SparseRows::new(m);
    let units = rows.eliminate_units();
    let rest = dense_diagonal(rows.remaining_dense());
    let mut factors = vec![BigInt::one(); units];
    factors.extend(rest);
    let factors = divisibility_chain(factors);
    SmithForm { rank: factors.len(), factors }
}
