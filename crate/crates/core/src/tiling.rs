//! Domino tilings of the 2×n board and the domino ideal `I_n`.

use std::fmt;

use crate::error::{domain, Result};
use crate::ideal::{lex_cmp, positions, MonomialIdeal, SquarefreeMonomial, Universe, VariableId, VariableKind};

/// A tiling of the 2×n board by n dominoes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominoTiling {
    n: usize,
    bits: u64,
}

impl DominoTiling {
    /// Validates that `dominos` cover every cell of the 2×n board exactly once.
    pub fn new(n: usize, dominos: &[VariableId]) -> Result<Self> {
        let universe = Universe::board(n)?;
        let bits = universe.mask_of(dominos)?;
        if bits.count_ones() as usize != dominos.len() {
            return Err(domain("repeated domino"));
        }
        let tiling = DominoTiling { n, bits };
        tiling.check_cover()?;
        Ok(tiling)
    }

    /// Board cells covered by a domino, as `(row, column)` with 1-based indices.
    pub fn cells(n: usize, domino: VariableId) -> [(usize, usize); 2] {
        let k = domino.index;
        match domino.kind {
            VariableKind::Horizontal if k < n => [(1, k), (1, k + 1)],
            VariableKind::Horizontal => [(2, k - (n - 1)), (2, k - (n - 1) + 1)],
            VariableKind::Vertical => [(1, k), (2, k)],
            VariableKind::Generic => panic!("generic variable {domino} is not a domino"),
        }
    }

    fn check_cover(&self) -> Result<()> {
        let mut covered = vec![[false; 2]; self.n + 1];
        for d in self.dominos() {
            for (row, col) in Self::cells(self.n, d) {
                if covered[col][row - 1] {
                    return Err(domain(format!("domino {d} overlaps another domino")));
                }
                covered[col][row - 1] = true;
            }
        }
        if covered[1..].iter().any(|c| !c[0] || !c[1]) {
            return Err(domain("dominoes do not cover the board"));
        }
        let top = crate::ideal::mask_below(self.n - 1);
        if (self.bits & top) != ((self.bits >> (self.n - 1)) & top) {
            return Err(domain("horizontal dominoes are not stacked in pairs"));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dominos(&self) -> Vec<VariableId> {
        let universe = Universe::Board(self.n);
        positions(self.bits).map(|p| universe.variable(p)).collect()
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn to_monomial(&self) -> SquarefreeMonomial {
        SquarefreeMonomial::from_mask(Universe::Board(self.n), self.bits).expect("tiling lies in its board universe")
    }

    fn has(&self, vars: &[VariableId]) -> bool {
        let mask = Universe::Board(self.n).mask_of(vars).expect("variables within the board");
        self.bits & mask == mask
    }
}

impl fmt::Display for DominoTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Universe::Board(self.n).format_mask(self.bits))
    }
}

pub fn tiling_to_monomial(t: &DominoTiling) -> SquarefreeMonomial {
    t.to_monomial()
}

/// All tilings of the 2×n board, in lexicographic order of their variable
/// sequences.
///
/// A tiling of the first `m` columns ends either in `y_m` or in the stacked
/// pair `x_{m-1} x_{n-2+m}`; peeling the last column (or two) gives the
/// recursion.
pub fn enumerate_tilings(n: usize) -> Result<Vec<DominoTiling>> {
    let universe = Universe::board(n)?;
    let pos = |v| universe.position(v).expect("variable on the board");
    let mut prefixes: Vec<Vec<u64>> = vec![vec![0]];
    for m in 1..=n {
        let mut next: Vec<u64> = prefixes[m - 1].iter().map(|t| t | 1 << pos(VariableId::y(m))).collect();
        if m >= 2 {
            let pair = 1 << pos(VariableId::x(m - 1)) | 1 << pos(VariableId::x(n - 2 + m));
            next.extend(prefixes[m - 2].iter().map(|t| t | pair));
        }
        prefixes.push(next);
    }
    let mut all = prefixes.pop().expect("n >= 1");
    all.sort_unstable_by(|a, b| lex_cmp(*a, *b));
    Ok(all.into_iter().map(|bits| DominoTiling { n, bits }).collect())
}

/// The domino ideal `I_n`, generated by all tilings of the 2×n board.
pub fn domino_ideal(n: usize) -> Result<MonomialIdeal> {
    let masks = enumerate_tilings(n)?.iter().map(DominoTiling::mask).collect();
    MonomialIdeal::from_masks(Universe::Board(n), masks)
}

/// Tilings grouped by their rightmost dominoes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightmostPartition {
    /// Tilings divisible by `y_{n-1} y_n`.
    pub a: Vec<DominoTiling>,
    /// Tilings divisible by `x_{n-1} x_{2n-2}`.
    pub b: Vec<DominoTiling>,
    /// Tilings divisible by `x_{n-2} x_{2n-3} y_n`.
    pub c: Vec<DominoTiling>,
}

pub fn partition_rightmost(n: usize) -> Result<RightmostPartition> {
    if n < 3 {
        return Err(domain(format!("the rightmost partition needs n >= 3, got {n}")));
    }
    let mut parts = RightmostPartition { a: Vec::new(), b: Vec::new(), c: Vec::new() };
    for t in enumerate_tilings(n)? {
        if t.has(&[VariableId::y(n - 1), VariableId::y(n)]) {
            parts.a.push(t);
        } else if t.has(&[VariableId::x(n - 1), VariableId::x(2 * n - 2)]) {
            parts.b.push(t);
        } else if t.has(&[VariableId::x(n - 2), VariableId::x(2 * n - 3), VariableId::y(n)]) {
            parts.c.push(t);
        } else {
            unreachable!("tiling {t} has none of the three right ends");
        }
    }
    Ok(parts)
}
