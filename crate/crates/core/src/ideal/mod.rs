//! Squarefree monomials and monomial ideals over a fixed variable universe.
//!
//! A monomial is stored as a bitmask of variable positions, so a universe holds
//! at most 64 variables (boards up to n = 22).

pub mod splitting;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Error, Result};

pub use splitting::{
    split_domino, split_intersection, verify_splitting, verify_splitting_with, SplittingReport, SplittingWitness,
    VerifyOptions,
};

/// Largest board whose variables fit in a 64-bit support mask.
pub const MAX_BOARD: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableKind {
    /// `x_k`, a horizontal domino.
    Horizontal,
    /// `y_k`, a vertical domino.
    Vertical,
    /// `v_k`, a variable of a universe not attached to a board.
    Generic,
}

/// A variable named by kind and 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VariableId {
    pub kind: VariableKind,
    pub index: usize,
}

impl VariableId {
    pub fn x(index: usize) -> Self {
        VariableId { kind: VariableKind::Horizontal, index }
    }

    pub fn y(index: usize) -> Self {
        VariableId { kind: VariableKind::Vertical, index }
    }

    pub fn v(index: usize) -> Self {
        VariableId { kind: VariableKind::Generic, index }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            VariableKind::Horizontal => 'x',
            VariableKind::Vertical => 'y',
            VariableKind::Generic => 'v',
        };
        write!(f, "{}{}", letter, self.index)
    }
}

/// The ambient variable set.
///
/// `Board(n)` is `x_1 < … < x_{2n-2} < y_1 < … < y_n` (3n − 2 variables);
/// `Plain(k)` is `v_1 < … < v_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Universe {
    Board(usize),
    Plain(usize),
}

impl Universe {
    pub fn board(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_BOARD {
            return Err(domain(format!("board width must be in 1..={MAX_BOARD}, got {n}")));
        }
        Ok(Universe::Board(n))
    }

    pub fn plain(size: usize) -> Result<Self> {
        if size == 0 || size > 64 {
            return Err(domain(format!("universe size must be in 1..=64, got {size}")));
        }
        Ok(Universe::Plain(size))
    }

    pub fn size(&self) -> usize {
        match *self {
            Universe::Board(n) => 3 * n - 2,
            Universe::Plain(k) => k,
        }
    }

    /// Mask with every variable of the universe set.
    pub fn full_mask(&self) -> u64 {
        mask_below(self.size())
    }

    pub fn position(&self, var: VariableId) -> Result<usize> {
        let bad = || domain(format!("variable {var} is not in universe {self}"));
        match (*self, var.kind) {
            (Universe::Board(n), VariableKind::Horizontal) if (1..=2 * n - 2).contains(&var.index) => Ok(var.index - 1),
            (Universe::Board(n), VariableKind::Vertical) if (1..=n).contains(&var.index) => {
                Ok(2 * n - 2 + var.index - 1)
            }
            (Universe::Plain(k), VariableKind::Generic) if (1..=k).contains(&var.index) => Ok(var.index - 1),
            _ => Err(bad()),
        }
    }

    /// Variable at bit position `pos`. Panics when `pos` is out of range.
    pub fn variable(&self, pos: usize) -> VariableId {
        assert!(pos < self.size(), "position {pos} outside universe {self}");
        match *self {
            Universe::Board(n) if pos < 2 * n - 2 => VariableId::x(pos + 1),
            Universe::Board(n) => VariableId::y(pos - (2 * n - 2) + 1),
            Universe::Plain(_) => VariableId::v(pos + 1),
        }
    }

    pub fn mask_of(&self, vars: &[VariableId]) -> Result<u64> {
        vars.iter().try_fold(0u64, |acc, &v| Ok(acc | 1 << self.position(v)?))
    }

    pub fn monomial(&self, vars: &[VariableId]) -> Result<SquarefreeMonomial> {
        Ok(SquarefreeMonomial { universe: *self, bits: self.mask_of(vars)? })
    }

    /// Parses products such as `x1x3y3`, `x_1 x_3 y_3` or `1`.
    pub fn parse_monomial(&self, text: &str) -> Result<SquarefreeMonomial> {
        let cleaned: String =
            text.chars().filter(|c| !matches!(c, '_' | '*' | '{' | '}') && !c.is_whitespace()).collect();
        if cleaned == "1" {
            return Ok(SquarefreeMonomial { universe: *self, bits: 0 });
        }
        let mut bits = 0u64;
        let mut chars = cleaned.chars().peekable();
        while let Some(letter) = chars.next() {
            let kind = match letter {
                'x' => VariableKind::Horizontal,
                'y' => VariableKind::Vertical,
                'v' => VariableKind::Generic,
                other => return Err(Error::Parse(format!("unexpected character {other:?} in {text:?}"))),
            };
            let mut digits = String::new();
            while let Some(c) = chars.peek().copied().filter(char::is_ascii_digit) {
                digits.push(c);
                chars.next();
            }
            let index: usize =
                digits.parse().map_err(|_| Error::Parse(format!("missing index after {letter:?} in {text:?}")))?;
            let pos = self.position(VariableId { kind, index })?;
            if bits & (1 << pos) != 0 {
                return Err(Error::Parse(format!("repeated variable in {text:?}: not squarefree")));
            }
            bits |= 1 << pos;
        }
        Ok(SquarefreeMonomial { universe: *self, bits })
    }

    pub fn parse_ideal(&self, generators: &[&str]) -> Result<MonomialIdeal> {
        let gens = generators.iter().map(|g| self.parse_monomial(g)).collect::<Result<Vec<_>>>()?;
        minimalize(&gens)
    }

    /// Human-readable name for a set of positions, e.g. `x1x3y3`.
    pub fn format_mask(&self, bits: u64) -> String {
        if bits == 0 {
            return "1".to_string();
        }
        positions(bits).map(|p| self.variable(p).to_string()).collect()
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Board(n) => write!(f, "board({n})"),
            Universe::Plain(k) => write!(f, "plain({k})"),
        }
    }
}

pub(crate) fn mask_below(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Set bit positions of `bits`, ascending.
pub(crate) fn positions(bits: u64) -> impl Iterator<Item = usize> {
    let mut rest = bits;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(p)
        }
    })
}

/// Lexicographic order on the ascending position sequences of two sets.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
        if ta != tb {
            return ta.cmp(&tb);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

/// Keeps the inclusion-minimal sets, deduplicated, in canonical order.
pub(crate) fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|a, b| lex_cmp(*a, *b));
    kept
}

/// Keeps the inclusion-maximal sets, deduplicated, in canonical order.
pub(crate) fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & s == s) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by(|a, b| lex_cmp(*a, *b));
    kept
}

/// A squarefree monomial, identified with its support.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    universe: Universe,
    bits: u64,
}

impl SquarefreeMonomial {
    pub fn from_mask(universe: Universe, bits: u64) -> Result<Self> {
        if bits & !universe.full_mask() != 0 {
            return Err(domain(format!("support {bits:#x} exceeds universe {universe}")));
        }
        Ok(SquarefreeMonomial { universe, bits })
    }

    pub fn one(universe: Universe) -> Self {
        SquarefreeMonomial { universe, bits: 0 }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn support(&self) -> Vec<VariableId> {
        positions(self.bits).map(|p| self.universe.variable(p)).collect()
    }

    pub fn contains(&self, var: VariableId) -> bool {
        self.universe.position(var).is_ok_and(|p| self.bits & (1 << p) != 0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch { left: self.universe.to_string(), right: other.universe.to_string() });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.bits & other.bits == self.bits)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(SquarefreeMonomial { universe: self.universe, bits: self.bits | other.bits })
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Self) -> Result<Option<Self>> {
        Ok(divisor
            .divides(self)?
            .then_some(SquarefreeMonomial { universe: self.universe, bits: self.bits & !divisor.bits }))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let universe_key = |u: &Universe| match *u {
            Universe::Board(n) => (0, n),
            Universe::Plain(k) => (1, k),
        };
        universe_key(&self.universe).cmp(&universe_key(&other.universe)).then_with(|| lex_cmp(self.bits, other.bits))
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.universe.format_mask(self.bits))
    }
}

/// A monomial ideal held by its minimal generating set `G(I)`, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    universe: Universe,
    gens: Vec<u64>,
}

/// Minimal generating set of the ideal generated by `gens`.
pub fn minimalize(gens: &[SquarefreeMonomial]) -> Result<MonomialIdeal> {
    let first = gens.first().ok_or_else(|| domain("cannot minimalize an empty generator list"))?;
    for g in gens {
        first.check_same(g)?;
    }
    Ok(MonomialIdeal { universe: first.universe, gens: minimal_sets(gens.iter().map(|g| g.bits).collect()) })
}

/// `I ∩ J`, generated by the minimal pairwise lcms.
pub fn intersect(left: &MonomialIdeal, right: &MonomialIdeal) -> Result<MonomialIdeal> {
    left.check_same(right)?;
    let lcms = left.gens.iter().flat_map(|a| right.gens.iter().map(move |b| a | b)).collect();
    Ok(MonomialIdeal { universe: left.universe, gens: minimal_sets(lcms) })
}

impl MonomialIdeal {
    pub(crate) fn from_masks(universe: Universe, masks: Vec<u64>) -> Result<Self> {
        if masks.is_empty() {
            return Err(domain("an ideal needs at least one generator"));
        }
        if let Some(bad) = masks.iter().find(|&&m| m & !universe.full_mask() != 0) {
            return Err(domain(format!("generator {bad:#x} exceeds universe {universe}")));
        }
        Ok(MonomialIdeal { universe, gens: minimal_sets(masks) })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn generators(&self) -> Vec<SquarefreeMonomial> {
        self.gens.iter().map(|&bits| SquarefreeMonomial { universe: self.universe, bits }).collect()
    }

    /// Supports of the minimal generators, in canonical order.
    pub fn masks(&self) -> &[u64] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Union of the generator supports.
    pub fn variable_union(&self) -> u64 {
        self.gens.iter().fold(0, |acc, g| acc | g)
    }

    pub fn degree_range(&self) -> (usize, usize) {
        let degrees = self.gens.iter().map(|g| g.count_ones() as usize);
        (degrees.clone().min().unwrap_or(0), degrees.max().unwrap_or(0))
    }

    pub fn is_pure(&self) -> bool {
        let (lo, hi) = self.degree_range();
        lo == hi
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &SquarefreeMonomial) -> Result<bool> {
        if m.universe != self.universe {
            return Err(Error::UniverseMismatch { left: self.universe.to_string(), right: m.universe.to_string() });
        }
        Ok(self.gens.iter().any(|&g| g & !m.bits == 0))
    }

    /// The ideal generated by the minimal generators divisible by `divisor`.
    pub fn generators_divisible_by(&self, divisor: &SquarefreeMonomial) -> Result<MonomialIdeal> {
        if divisor.universe != self.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe.to_string(),
                right: divisor.universe.to_string(),
            });
        }
        let d = divisor.bits;
        let picked: Vec<u64> = self.gens.iter().copied().filter(|g| g & d == d).collect();
        if picked.is_empty() {
            return Err(domain(format!("no generator is divisible by {divisor}")));
        }
        Ok(MonomialIdeal { universe: self.universe, gens: picked })
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch { left: self.universe.to_string(), right: other.universe.to_string() });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.gens.iter().map(|&g| self.universe.format_mask(g)).collect();
        write!(f, "({})", names.join(", "))
    }
}
