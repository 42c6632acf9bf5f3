//! Splitting identities for `I_n` and the closed recursion for its Betti numbers.
//!
//! The recursion's base case for `V_3 ∩ U_3` is stated with entries at
//! `(1,5), (1,6), (2,7)`, while direct computation with ideal indexing puts
//! them at `(0,5), (0,6), (1,7)`. [`BaseCaseTable`] carries an explicit
//! homological shift so both readings can be evaluated, and
//! [`reconcile`] reports which one agrees with direct computation.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::betti::{betti_koszul, GradedBettiTable};
use crate::error::{domain, Result};
use crate::homology::FieldSpec;
use crate::ideal::{split_domino, split_intersection};
use crate::tiling::domino_ideal;

/// `((i, j), expected, actual)` for every entry where an identity fails.
pub type Mismatch = ((usize, usize), u64, u64);

fn direct(n: usize, field: FieldSpec) -> Result<GradedBettiTable> {
    Ok(betti_koszul(&domino_ideal(n)?, field).graded)
}

fn direct_intersection(n: usize, field: FieldSpec) -> Result<GradedBettiTable> {
    Ok(betti_koszul(&split_domino(n)?.intersection()?, field).graded)
}

/// `t` re-indexed so that `out(i, j) = t(i − di, j − dj)`.
fn shifted(t: &GradedBettiTable, di: usize, dj: usize) -> GradedBettiTable {
    GradedBettiTable::from_entries(t.field(), t.entries().map(|((i, j), v)| ((i + di, j + dj), v)))
}

fn sum(field: FieldSpec, parts: &[GradedBettiTable]) -> GradedBettiTable {
    GradedBettiTable::from_entries(field, parts.iter().flat_map(|t| t.entries()))
}

fn mismatches(expected: &GradedBettiTable, actual: &GradedBettiTable) -> Vec<Mismatch> {
    expected.differences(actual)
}

#[derive(Debug, Clone)]
pub struct SplittingIdentityReport {
    pub n: usize,
    pub field: FieldSpec,
    /// `β(I_n)` computed directly.
    pub left: GradedBettiTable,
    /// `β_{i,j−1}(I_{n−1}) + β_{i,j−2}(I_{n−2}) + β_{i−1,j}(V_n ∩ U_n)`.
    pub right: GradedBettiTable,
    pub mismatches: Vec<Mismatch>,
}

impl SplittingIdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `β(I_n) = β(I_{n−1})[0,1] + β(I_{n−2})[0,2] + β(V_n∩U_n)[1,0]`
/// entrywise, every table computed directly.
pub fn splitting_identity_check(n: usize, field: FieldSpec) -> Result<SplittingIdentityReport> {
    if n < 3 {
        return Err(domain(format!("splitting identity needs n >= 3, got {n}")));
    }
    let left = direct(n, field)?;
    let right = sum(
        field,
        &[
            shifted(&direct(n - 1, field)?, 0, 1),
            shifted(&direct(n - 2, field)?, 0, 2),
            shifted(&direct_intersection(n, field)?, 1, 0),
        ],
    );
    let mismatches = mismatches(&left, &right);
    Ok(SplittingIdentityReport { n, field, left, right, mismatches })
}

#[derive(Debug, Clone)]
pub struct RelationsReport {
    pub n: usize,
    pub field: FieldSpec,
    /// `β_{i−1,j}(V̂_n) = β_{i−1,j−4}(I_{n−2})`.
    pub relation1: Vec<Mismatch>,
    /// `β_{i−1,j}(Û_n) = β_{i−1,j−2}(V_{n−1}∩U_{n−1})`.
    pub relation2: Vec<Mismatch>,
    /// `β_{i−2,j}(V̂_n∩Û_n) = β_{i−2,j−3}(V_{n−1}∩U_{n−1})`.
    pub relation3: Vec<Mismatch>,
    /// `β(V_n∩U_n) = β(V̂_n) + β(Û_n) + β(V̂_n∩Û_n)[1,0]`.
    pub intersection_split: Vec<Mismatch>,
}

impl RelationsReport {
    pub fn passed(&self) -> bool {
        self.relation1.is_empty()
            && self.relation2.is_empty()
            && self.relation3.is_empty()
            && self.intersection_split.is_empty()
    }
}

/// Checks the three shift relations for the split of `V_n ∩ U_n`, plus the
/// splitting identity they feed into. Defined for `n ≥ 4`.
pub fn relations_check(n: usize, field: FieldSpec) -> Result<RelationsReport> {
    if n < 4 {
        return Err(domain(format!("relations need n >= 4, got {n}")));
    }
    let split = split_intersection(n)?;
    let v_hat = betti_koszul(&split.v, field).graded;
    let u_hat = betti_koszul(&split.u, field).graded;
    let both = betti_koszul(&split.intersection()?, field).graded;
    let w = direct_intersection(n, field)?;
    let w_prev = direct_intersection(n - 1, field)?;
    let i_prev2 = direct(n - 2, field)?;
    Ok(RelationsReport {
        n,
        field,
        relation1: mismatches(&shifted(&i_prev2, 0, 4), &v_hat),
        relation2: mismatches(&shifted(&w_prev, 0, 2), &u_hat),
        relation3: mismatches(&shifted(&w_prev, 0, 3), &both),
        intersection_split: mismatches(&w, &sum(field, &[v_hat.clone(), u_hat.clone(), shifted(&both, 1, 0)])),
    })
}

/// Base-case values for `V_3 ∩ U_3` as the recursion consumes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseCaseTable {
    /// Added to the homological index of each printed entry; 0 or −1.
    pub shift: i64,
}

impl BaseCaseTable {
    /// Printed entries before shifting.
    pub const PRINTED: [((i64, i64), u64); 3] = [((1, 5), 1), ((1, 6), 1), ((2, 7), 1)];

    pub fn new(shift: i64) -> Result<Self> {
        if shift != 0 && shift != -1 {
            return Err(domain(format!("base-case shift must be 0 or -1, got {shift}")));
        }
        Ok(BaseCaseTable { shift })
    }

    pub fn as_printed() -> Self {
        BaseCaseTable { shift: 0 }
    }

    /// Entries moved to ideal indexing.
    pub fn ideal_indexed() -> Self {
        BaseCaseTable { shift: -1 }
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        Self::PRINTED.iter().filter(|&&((pi, pj), _)| pi + self.shift == i && pj == j).map(|&(_, v)| v).sum()
    }
}

impl fmt::Display for BaseCaseTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s = {}", self.shift)
    }
}

fn binomial(m: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, t| acc * (m - t) / (t + 1))
}

/// Anchor tables for `I_1`, `I_2`, `I_3`, with ideal indexing.
pub fn anchor(n: usize) -> Option<GradedBettiTable> {
    let entries: &[((usize, usize), u64)] = match n {
        1 => &[((0, 1), 1)],
        2 => &[((0, 2), 2), ((1, 4), 1)],
        3 => &[((0, 3), 3), ((1, 5), 2), ((1, 6), 1), ((2, 7), 1)],
        _ => return None,
    };
    Some(GradedBettiTable::from_entries(FieldSpec::Rationals, entries.iter().copied()))
}

/// Memoized evaluation of the closed recursion.
#[derive(Debug, Clone)]
pub struct Recursion {
    base: BaseCaseTable,
    memo: BTreeMap<usize, GradedBettiTable>,
}

impl Recursion {
    pub fn new(base: BaseCaseTable) -> Self {
        let memo = (1..=3).map(|n| (n, anchor(n).expect("anchor"))).collect();
        Recursion { base, memo }
    }

    pub fn base(&self) -> BaseCaseTable {
        self.base
    }

    /// `β(I_n)` for any `n ≥ 1`; anchors below 4, the recursion above.
    pub fn table(&mut self, n: usize) -> Result<&GradedBettiTable> {
        if n == 0 {
            return Err(domain("board width must be positive"));
        }
        for k in 4..=n {
            if !self.memo.contains_key(&k) {
                let t = self.step(k);
                self.memo.insert(k, t);
            }
        }
        Ok(&self.memo[&n])
    }

    fn step(&self, n: usize) -> GradedBettiTable {
        let get = |k: usize, i: i64, j: i64| self.memo[&k].get_signed(i, j);
        let base = self.base;
        let nn = n as i64;
        let mut out = GradedBettiTable::new(FieldSpec::Rationals);
        for i in 0..=nn {
            for j in 0..=3 * nn {
                let mut v = get(n - 1, i, j - 1) + get(n - 2, i, j - 2);
                for m in 0..=nn - 4 {
                    for k in 0..=m {
                        v += binomial(m as u64, k as u64) * get(n - 2 - m as usize, i - 1 - k, j - 4 - 2 * m - k);
                    }
                }
                for k in 0..=nn - 4 {
                    v += binomial((nn - 4) as u64, k as u64)
                        * (base.get(i - 1 - k, j - 2 * nn + 6 - k) + base.get(i - 2 - k, j - 2 * nn + 5 - k));
                }
                out.add(i as usize, j as usize, v);
            }
        }
        out
    }
}

/// `β(I_n)` from the closed recursion; `n ≥ 4`.
pub fn betti_recursive(n: usize, base: BaseCaseTable) -> Result<GradedBettiTable> {
    if n < 4 {
        return Err(domain(format!("the recursion is stated for n >= 4, got {n}")));
    }
    Recursion::new(base).table(n).cloned()
}

#[derive(Debug, Clone)]
pub struct ShiftOutcome {
    pub base: BaseCaseTable,
    /// Mismatches against direct computation, per `n`.
    pub per_n: Vec<(usize, Vec<Mismatch>)>,
}

impl ShiftOutcome {
    pub fn matches(&self) -> bool {
        self.per_n.iter().all(|(_, m)| m.is_empty())
    }
}

#[derive(Debug, Clone)]
pub struct ReconciliationReport {
    pub range: (usize, usize),
    pub outcomes: Vec<ShiftOutcome>,
}

impl ReconciliationReport {
    /// The shift that matches for every `n`, if exactly one does.
    pub fn unique_shift(&self) -> Option<BaseCaseTable> {
        let matching: Vec<_> = self.outcomes.iter().filter(|o| o.matches()).collect();
        match matching.as_slice() {
            [only] => Some(only.base),
            _ => None,
        }
    }
}

impl fmt::Display for ReconciliationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "recursion vs direct computation, n = {}..={}", self.range.0, self.range.1)?;
        for o in &self.outcomes {
            let verdict = if o.matches() { "match" } else { "mismatch" };
            writeln!(f, "  base case {}: {verdict}", o.base)?;
            for (n, m) in &o.per_n {
                if let Some(((i, j), expected, got)) = m.first() {
                    writeln!(
                        f,
                        "    n = {n}: {} entries differ, first at ({i},{j}): direct {expected}, recursion {got}",
                        m.len()
                    )?;
                }
            }
        }
        match self.unique_shift() {
            Some(b) => writeln!(f, "  unique reconciling setting: {b}"),
            None => writeln!(f, "  no unique reconciling setting"),
        }
    }
}

/// Evaluates the recursion under both base-case settings and compares each
/// with direct computation over ℚ for `n` in `lo..=hi`.
pub fn reconcile(lo: usize, hi: usize) -> Result<ReconciliationReport> {
    if lo < 4 || hi < lo {
        return Err(domain(format!("reconciliation range must satisfy 4 <= lo <= hi, got {lo}..={hi}")));
    }
    let direct_tables: Vec<(usize, GradedBettiTable)> =
        (lo..=hi).into_par_iter().map(|n| direct(n, FieldSpec::Rationals).map(|t| (n, t))).collect::<Result<_>>()?;
    let outcomes = [BaseCaseTable::as_printed(), BaseCaseTable::ideal_indexed()]
        .into_iter()
        .map(|base| {
            let mut rec = Recursion::new(base);
            let per_n =
                direct_tables.iter().map(|(n, d)| Ok((*n, mismatches(d, rec.table(*n)?)))).collect::<Result<_>>()?;
            Ok(ShiftOutcome { base, per_n })
        })
        .collect::<Result<_>>()?;
    Ok(ReconciliationReport { range: (lo, hi), outcomes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{projective_dimension, regularity};

    #[test]
    fn anchors_agree_with_direct_computation() {
        for n in 1..=3 {
            assert_eq!(anchor(n).unwrap(), direct(n, FieldSpec::Rationals).unwrap());
        }
        assert!(anchor(4).is_none());
    }

    #[test]
    fn splitting_identity_small() {
        let r = splitting_identity_check(3, FieldSpec::Rationals).unwrap();
        assert!(r.passed());
        assert_eq!(r.left.get(2, 7), 1);
        assert_eq!(direct_intersection(3, FieldSpec::Rationals).unwrap().get(1, 7), 1);
        for n in 4..=5 {
            assert!(splitting_identity_check(n, FieldSpec::Rationals).unwrap().passed(), "n = {n}");
        }
        assert!(splitting_identity_check(4, FieldSpec::PrimeField(2)).unwrap().passed());
        assert!(splitting_identity_check(2, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn relations_small() {
        for n in 4..=5 {
            let r = relations_check(n, FieldSpec::Rationals).unwrap();
            assert!(r.passed(), "n = {n}: {r:?}");
        }
        assert!(relations_check(3, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn v_hat_is_shifted_i3_at_n5() {
        let v_hat = betti_koszul(&split_intersection(5).unwrap().v, FieldSpec::Rationals).graded;
        assert_eq!(v_hat, shifted(&anchor(3).unwrap(), 0, 4));
    }

    #[test]
    fn printed_base_case_entries() {
        let printed = BaseCaseTable::as_printed();
        assert_eq!((printed.get(1, 5), printed.get(1, 6), printed.get(2, 7)), (1, 1, 1));
        assert_eq!(printed.get(0, 5), 0);
        let shifted = BaseCaseTable::ideal_indexed();
        assert_eq!((shifted.get(0, 5), shifted.get(0, 6), shifted.get(1, 7)), (1, 1, 1));
        assert!(BaseCaseTable::new(1).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(5, 5), 1);
        assert_eq!((0..=6).map(|k| binomial(6, k)).sum::<u64>(), 64);
    }

    #[test]
    fn reconciled_recursion_small() {
        let report = reconcile(4, 5).unwrap();
        assert_eq!(report.unique_shift(), Some(BaseCaseTable::ideal_indexed()));
        let t = betti_recursive(4, BaseCaseTable::ideal_indexed()).unwrap();
        assert_eq!(t.get(3, 10), 1);
        assert_eq!(projective_dimension(&t).unwrap(), 3);
        assert_eq!(regularity(&t).unwrap(), 7);
        assert!(betti_recursive(3, BaseCaseTable::ideal_indexed()).is_err());
    }
}
