//! Graded Betti numbers of squarefree monomial ideals.
//!
//! Two independent routes:
//!
//! * [`betti_hochster`] sums `dim H̃_{i-1}` of the complement `(Γ′)^c` over
//!   every induced subcollection `Γ′` of the facet complex, placed in degree
//!   `|V(Γ′)|`. Only valid for pure ideals.
//! * [`betti_koszul`] takes, for every squarefree multidegree `a`, the upper
//!   Koszul complex `K^a(I) = {S ⊆ a : a \ S ∈ I}` and sets
//!   `β_{i,a} = dim H̃_{i-1}(K^a)`.

pub mod table;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

pub use table::{GradedBettiTable, TableDocument, TableEntry};

use crate::error::{domain, Error, Result};
use crate::homology::{reduced_homology_field, reduced_homology_z, FieldSpec, ReducedHomology};
use crate::ideal::{positions, MonomialIdeal, Universe, VariableId};
use crate::simplicial::{complement_complex, enumerate_induced_subcollections, facet_complex, SimplicialComplex};
use crate::tiling::domino_ideal;

fn add_homology(table: &mut GradedBettiTable, degree: usize, dims: &BTreeMap<isize, usize>) {
    for (&d, &dim) in dims {
        table.add((d + 1) as usize, degree, dim as u64);
    }
}

/// Betti numbers through induced subcollections of `Δ(I)`.
pub fn betti_hochster(ideal: &MonomialIdeal, field: FieldSpec) -> Result<GradedBettiTable> {
    if !ideal.is_pure() {
        let (min, max) = ideal.degree_range();
        return Err(Error::NotPure { min, max });
    }
    let delta = facet_complex(ideal);
    let subcollections = enumerate_induced_subcollections(&delta)?;
    let contributions: Vec<(usize, BTreeMap<isize, usize>)> = subcollections
        .par_iter()
        .map(|sub| {
            let complement =
                complement_complex(&sub.complex, sub.complex.vertices()).expect("facets lie in their own union");
            (sub.vertex_count, reduced_homology_field(&complement, field))
        })
        .collect();
    let mut table = GradedBettiTable::new(field);
    for (degree, dims) in &contributions {
        add_homology(&mut table, *degree, dims);
    }
    Ok(table)
}

/// `K^a(I)` on the vertex set `a`; void when no generator divides `a`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: u64) -> SimplicialComplex {
    let facets: Vec<u64> = ideal.masks().iter().filter(|&&g| g & a == g).map(|g| a & !g).collect();
    if facets.is_empty() {
        return SimplicialComplex::void(ideal.universe());
    }
    SimplicialComplex::new(ideal.universe(), a, facets).expect("faces lie inside a")
}

/// Squarefree multidegrees inside the variable union whose Koszul complex is
/// not a cone, i.e. `a` equals the lcm of the generators dividing it. Every
/// other `a` has a variable lying in all facets of `K^a`, so `K^a` is
/// acyclic (or void).
pub fn koszul_support(ideal: &MonomialIdeal) -> Vec<u64> {
    let union: Vec<usize> = positions(ideal.variable_union()).collect();
    let gens = ideal.masks();
    (1u64..1u64 << union.len())
        .into_par_iter()
        .filter_map(|choice| {
            let a = positions(choice).fold(0u64, |acc, k| acc | 1 << union[k]);
            let lcm = gens.iter().filter(|&&g| g & a == g).fold(0u64, |acc, g| acc | g);
            (lcm == a).then_some(a)
        })
        .collect()
}

/// Multigraded Betti numbers `β_{i,a}`, keyed by `(i, support mask of a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedBetti {
    pub universe: Universe,
    pub entries: BTreeMap<(usize, u64), u64>,
}

impl MultigradedBetti {
    pub fn get(&self, i: usize, a: u64) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn graded(&self, field: FieldSpec) -> GradedBettiTable {
        GradedBettiTable::from_entries(
            field,
            self.entries.iter().map(|(&(i, a), &v)| ((i, a.count_ones() as usize), v)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulBetti {
    pub graded: GradedBettiTable,
    pub multigraded: MultigradedBetti,
}

/// Betti numbers through upper Koszul simplicial complexes. Purity is not needed.
pub fn betti_koszul(ideal: &MonomialIdeal, field: FieldSpec) -> KoszulBetti {
    let support = koszul_support(ideal);
    let per_degree: Vec<(u64, BTreeMap<isize, usize>)> =
        support.par_iter().map(|&a| (a, reduced_homology_field(&upper_koszul_complex(ideal, a), field))).collect();
    let mut entries = BTreeMap::new();
    for (a, dims) in per_degree {
        for (d, dim) in dims {
            if dim > 0 {
                entries.insert(((d + 1) as usize, a), dim as u64);
            }
        }
    }
    let multigraded = MultigradedBetti { universe: ideal.universe(), entries };
    KoszulBetti { graded: multigraded.graded(field), multigraded }
}

/// Largest homological index with a nonzero entry.
pub fn projective_dimension(table: &GradedBettiTable) -> Result<usize> {
    table.entries().map(|((i, _), _)| i).max().ok_or_else(|| domain("empty Betti table"))
}

/// `max (j − i)` over nonzero entries.
pub fn regularity(table: &GradedBettiTable) -> Result<i64> {
    table.entries().map(|((i, j), _)| j as i64 - i as i64).max().ok_or_else(|| domain("empty Betti table"))
}

/// Where a torsion class was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionSource {
    /// `K^a` for the given multidegree.
    Koszul(u64),
    /// `(Γ′)^c` for the induced subcollection on the given vertex set.
    Complement(u64),
}

#[derive(Debug, Clone)]
pub struct TorsionWitness {
    pub source: TorsionSource,
    pub homology: ReducedHomology,
}

/// `((i, j), value over ℚ, value over the other field)`.
pub type EntryDifference = ((usize, usize), u64, u64);

#[derive(Debug, Clone)]
pub struct CharIndependenceReport {
    pub tables: Vec<GradedBettiTable>,
    /// Fields whose table differs from the one over ℚ, with the differing entries.
    pub mismatches: Vec<(FieldSpec, Vec<EntryDifference>)>,
    pub koszul_scanned: usize,
    /// Number of induced-subcollection complements scanned; `None` for non-pure ideals.
    pub complements_scanned: Option<usize>,
    pub torsion: Vec<TorsionWitness>,
}

impl CharIndependenceReport {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// Compares Betti tables over ℚ and each `𝔽_p`, and scans the integral
/// homology of every Koszul complex for torsion.
pub fn char_independence(ideal: &MonomialIdeal, primes: &[u64]) -> Result<CharIndependenceReport> {
    let fields: Vec<FieldSpec> = std::iter::once(Ok(FieldSpec::Rationals))
        .chain(primes.iter().map(|&p| FieldSpec::prime(p)))
        .collect::<Result<_>>()?;
    let tables: Vec<GradedBettiTable> = fields.iter().map(|&f| betti_koszul(ideal, f).graded).collect();
    let mismatches = tables[1..]
        .iter()
        .filter_map(|t| {
            let diff = tables[0].differences(t);
            (!diff.is_empty()).then(|| (t.field(), diff))
        })
        .collect();
    let support = koszul_support(ideal);
    let mut torsion: Vec<TorsionWitness> = support
        .par_iter()
        .filter_map(|&a| {
            let homology = reduced_homology_z(&upper_koszul_complex(ideal, a));
            homology.has_torsion().then_some(TorsionWitness { source: TorsionSource::Koszul(a), homology })
        })
        .collect();
    let mut complements_scanned = None;
    if ideal.is_pure() {
        let subcollections = enumerate_induced_subcollections(&facet_complex(ideal))?;
        complements_scanned = Some(subcollections.len());
        let found: Vec<TorsionWitness> = subcollections
            .par_iter()
            .filter_map(|sub| {
                let verts = sub.complex.vertices();
                let complement = complement_complex(&sub.complex, verts).expect("facets lie in their own union");
                let homology = reduced_homology_z(&complement);
                homology.has_torsion().then_some(TorsionWitness { source: TorsionSource::Complement(verts), homology })
            })
            .collect();
        torsion.extend(found);
    }
    Ok(CharIndependenceReport { tables, mismatches, koszul_scanned: support.len(), complements_scanned, torsion })
}

/// Stanley–Reisner ideal of a complex: its minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> Result<MonomialIdeal> {
    let verts: Vec<usize> = positions(complex.vertices()).collect();
    if verts.len() > 24 {
        return Err(domain("Stanley–Reisner ideal limited to 24 vertices"));
    }
    let nonfaces: Vec<u64> = (0..1u64 << verts.len())
        .map(|choice| positions(choice).fold(0u64, |acc, k| acc | 1 << verts[k]))
        .filter(|&s| !complex.contains_face(s))
        .collect();
    MonomialIdeal::from_masks(complex.universe(), nonfaces)
}

/// `Γ_n^c`: the complementary complex of `Δ(I_n)` over all `3n − 2` variables.
pub fn gamma_complement(n: usize) -> Result<SimplicialComplex> {
    let delta = facet_complex(&domino_ideal(n)?);
    complement_complex(&delta, Universe::board(n)?.full_mask())
}

#[derive(Debug, Clone)]
pub struct SphereReport {
    pub n: usize,
    pub complement: ReducedHomology,
    pub link: ReducedHomology,
    pub deletion: ReducedHomology,
}

impl SphereReport {
    /// `Γ_n^c` a homology `(n−2)`-sphere, its link at `y_{n−1}` a homology
    /// `(n−3)`-sphere, the deletion acyclic.
    pub fn passed(&self) -> bool {
        let n = self.n as isize;
        self.complement.is_sphere_of_degree(n - 2) && self.link.is_sphere_of_degree(n - 3) && self.deletion.is_acyclic()
    }
}

pub fn verify_sphere_claims(n: usize) -> Result<SphereReport> {
    if n < 3 {
        return Err(domain(format!("sphere claims need n >= 3, got {n}")));
    }
    let gamma = gamma_complement(n)?;
    let v = VariableId::y(n - 1);
    Ok(SphereReport {
        n,
        complement: reduced_homology_z(&gamma),
        link: reduced_homology_z(&gamma.link(v)?),
        deletion: reduced_homology_z(&gamma.deletion(v)?),
    })
}

/// First invariant factor greater than one in a torsion witness, for reporting.
pub fn first_torsion(witness: &TorsionWitness) -> Option<(isize, BigInt)> {
    witness.homology.groups.iter().find_map(|g| g.torsion.first().map(|t| (g.degree, t.clone())))
}
