//! Eliahou–Kervaire splittings `I = V + U`.
//!
//! Both splitting functions used for domino ideals divide by a fixed monomial,
//! so a witness stores the two divisors instead of function objects:
//! `φ(w) = w / phi_divisor` and `ψ(w) = w / psi_divisor`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{intersect, MonomialIdeal, SquarefreeMonomial, Universe, VariableId};
use crate::error::{domain, Error, Result};
use crate::tiling::domino_ideal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingWitness {
    pub v: MonomialIdeal,
    pub u: MonomialIdeal,
    pub phi_divisor: SquarefreeMonomial,
    pub psi_divisor: SquarefreeMonomial,
}

impl SplittingWitness {
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        intersect(&self.v, &self.u)
    }
}

/// `I_n = V_n + U_n`: tilings ending in `y_n` versus tilings ending in the
/// stacked pair `x_{n-1} x_{2n-2}`.
pub fn split_domino(n: usize) -> Result<SplittingWitness> {
    if n < 3 {
        return Err(domain(format!("split_domino needs n >= 3, got {n}")));
    }
    let ideal = domino_ideal(n)?;
    let universe = ideal.universe();
    let pair = universe.monomial(&[VariableId::x(n - 1), VariableId::x(2 * n - 2)])?;
    let vertical = universe.monomial(&[VariableId::y(n)])?;
    Ok(SplittingWitness {
        v: ideal.generators_divisible_by(&vertical)?,
        u: ideal.generators_divisible_by(&pair)?,
        phi_divisor: pair,
        psi_divisor: vertical,
    })
}

/// `V_n ∩ U_n = V̂_n + Û_n`, split at `y_{n-1}` versus `x_{n-2} x_{2n-3}`.
pub fn split_intersection(n: usize) -> Result<SplittingWitness> {
    if n < 4 {
        return Err(domain(format!("split_intersection needs n >= 4, got {n}")));
    }
    let outer = split_domino(n)?;
    let w = outer.intersection()?;
    let universe = w.universe();
    let pair = universe.monomial(&[VariableId::x(n - 2), VariableId::x(2 * n - 3)])?;
    let vertical = universe.monomial(&[VariableId::y(n - 1)])?;
    Ok(SplittingWitness {
        v: w.generators_divisible_by(&vertical)?,
        u: w.generators_divisible_by(&pair)?,
        phi_divisor: pair,
        psi_divisor: vertical,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `|G(V ∩ U)|` whose subsets are all enumerated.
    pub max_exhaustive: usize,
    /// When set, larger inputs are checked on this many random subsets
    /// drawn from the given seed instead of being rejected.
    pub sample: Option<(usize, u64)>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_exhaustive: 26, sample: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingReport {
    pub intersection: MonomialIdeal,
    /// `G(V) ∩ G(U) = ∅` and `G(V) ∪ G(U)` is a minimal generating set.
    pub disjoint_union: bool,
    /// First `w ∈ G(V ∩ U)` with `lcm(φ(w), ψ(w)) ≠ w`.
    pub s1_counterexample: Option<SquarefreeMonomial>,
    /// First subset `G′ ⊆ G(V ∩ U)` where `lcm φ(G′)` or `lcm ψ(G′)` fails to
    /// strictly divide `lcm G′`.
    pub s2_counterexample: Option<Vec<SquarefreeMonomial>>,
    pub subsets_checked: u64,
    pub exhaustive: bool,
}

impl SplittingReport {
    pub fn passed(&self) -> bool {
        self.disjoint_union && self.s1_counterexample.is_none() && self.s2_counterexample.is_none()
    }
}

pub fn verify_splitting(witness: &SplittingWitness) -> Result<SplittingReport> {
    verify_splitting_with(witness, VerifyOptions::default())
}

pub fn verify_splitting_with(witness: &SplittingWitness, options: VerifyOptions) -> Result<SplittingReport> {
    let universe = witness.v.universe();
    let w = witness.intersection()?;
    if witness.phi_divisor.universe() != universe || witness.psi_divisor.universe() != universe {
        return Err(Error::UniverseMismatch {
            left: universe.to_string(),
            right: witness.phi_divisor.universe().to_string(),
        });
    }
    let phi = witness.phi_divisor.mask();
    let psi = witness.psi_divisor.mask();
    for &g in w.masks() {
        for (name, d) in [("phi", phi), ("psi", psi)] {
            if g & d != d {
                return Err(Error::Structural(format!(
                    "{name} divisor {} does not divide generator {} of V ∩ U",
                    universe.format_mask(d),
                    universe.format_mask(g)
                )));
            }
        }
    }

    let v_gens = witness.v.masks();
    let u_gens = witness.u.masks();
    let mut union: Vec<u64> = v_gens.iter().chain(u_gens).copied().collect();
    let disjoint = !v_gens.iter().any(|g| u_gens.contains(g));
    union.sort_unstable();
    let minimal = super::minimal_sets(union.clone()).len() == union.len();

    let mono = |bits| SquarefreeMonomial::from_mask(universe, bits).expect("mask within universe");
    let s1_counterexample = w.masks().iter().copied().find(|&g| (g & !phi) | (g & !psi) != g).map(mono);

    let gens = w.masks();
    let strictly_divides = |subset_lcm: u64| {
        let by_phi = subset_lcm & !phi;
        let by_psi = subset_lcm & !psi;
        by_phi != subset_lcm && by_psi != subset_lcm
    };
    let subset_lcm = |choice: u64| super::positions(choice).fold(0u64, |acc, i| acc | gens[i]);
    let k = gens.len();
    let (failing, checked, exhaustive) = if k <= options.max_exhaustive {
        let total = (1u64 << k) - 1;
        let first = (1..=total).into_par_iter().find_first(|&choice| !strictly_divides(subset_lcm(choice)));
        (first, total, true)
    } else if let Some((samples, seed)) = options.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = super::mask_below(k);
        let first = (0..samples)
            .map(|_| loop {
                let c = rng.gen::<u64>() & full;
                if c != 0 {
                    break c;
                }
            })
            .find(|&choice| !strictly_divides(subset_lcm(choice)));
        (first, samples as u64, false)
    } else {
        return Err(domain(format!(
            "|G(V ∩ U)| = {k} exceeds the exhaustive limit {}; enable sampling",
            options.max_exhaustive
        )));
    };
    let s2_counterexample = failing.map(|choice| super::positions(choice).map(|i| mono(gens[i])).collect());

    Ok(SplittingReport {
        intersection: w,
        disjoint_union: disjoint && minimal,
        s1_counterexample,
        s2_counterexample,
        subsets_checked: checked,
        exhaustive,
    })
}

/// Convenience for tests and examples: a witness over an arbitrary universe.
pub fn witness_from_text(
    universe: Universe,
    v: &[&str],
    u: &[&str],
    phi_divisor: &str,
    psi_divisor: &str,
) -> Result<SplittingWitness> {
    Ok(SplittingWitness {
        v: universe.parse_ideal(v)?,
        u: universe.parse_ideal(u)?,
        phi_divisor: universe.parse_monomial(phi_divisor)?,
        psi_divisor: universe.parse_monomial(psi_divisor)?,
    })
}
