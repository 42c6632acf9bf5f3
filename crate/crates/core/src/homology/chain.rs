use std::collections::HashMap;

use crate::ideal::positions;
use crate::simplicial::SimplicialComplex;

/// Integer matrix stored by columns; each column is sorted by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, columns: vec![Vec::new(); ncols] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[c].push((r, v));
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `self · rhs`, dense result.
    pub fn multiply(&self, rhs: &SparseMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.ncols, rhs.nrows);
        let mut out = vec![vec![0i64; rhs.ncols]; self.nrows];
        for (j, col) in rhs.columns.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    out[i][j] += a * b;
                }
            }
        }
        out
    }
}

/// The augmented simplicial chain complex of a complex.
///
/// Degree −1 is spanned by the empty face whenever the complex is not void.
/// `∂_d` sends a face `v_0 < … < v_d` to `Σ (−1)^t (face without v_t)`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    bases: Vec<Vec<u64>>,
    boundaries: Vec<SparseMatrix>,
}

pub fn boundary_matrices(complex: &SimplicialComplex) -> ChainComplex {
    let bases = complex.faces_by_size();
    let mut boundaries = Vec::with_capacity(bases.len().saturating_sub(1));
    for size in 1..bases.len() {
        let lower: HashMap<u64, usize> = bases[size - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut m = SparseMatrix::zeros(bases[size - 1].len(), bases[size].len());
        for (c, &face) in bases[size].iter().enumerate() {
            let mut column: Vec<(usize, i64)> = positions(face)
                .enumerate()
                .map(|(t, p)| {
                    let sign = if t % 2 == 0 { 1 } else { -1 };
                    (lower[&(face & !(1 << p))], sign)
                })
                .collect();
            column.sort_unstable();
            m.columns[c] = column;
        }
        boundaries.push(m);
    }
    ChainComplex { bases, boundaries }
}

impl ChainComplex {
    /// Highest degree with a nonzero chain group; `None` for the void complex.
    pub fn top_degree(&self) -> Option<isize> {
        (!self.bases.is_empty()).then(|| self.bases.len() as isize - 2)
    }

    /// Faces of dimension `d` (so `d = −1` is the empty face).
    pub fn basis(&self, d: isize) -> &[u64] {
        usize::try_from(d + 1).ok().and_then(|k| self.bases.get(k)).map_or(&[], Vec::as_slice)
    }

    pub fn rank_of_chain_group(&self, d: isize) -> usize {
        self.basis(d).len()
    }

    /// `∂_d : C_d → C_{d−1}` for `d ≥ 0`.
    pub fn boundary(&self, d: isize) -> Option<&SparseMatrix> {
        usize::try_from(d).ok().and_then(|k| self.boundaries.get(k))
    }

    pub fn boundaries_compose_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|pair| pair[0].multiply(&pair[1]).iter().all(|row| row.iter().all(|&v| v == 0)))
    }

    /// `Σ (−1)^d · #d-faces`, including the empty face.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.bases.iter().enumerate().map(|(k, b)| if k % 2 == 1 { b.len() as i64 } else { -(b.len() as i64) }).sum()
    }
}
