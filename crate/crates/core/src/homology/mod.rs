//! Reduced simplicial homology over ℤ, ℚ and 𝔽_p.
//!
//! Conventions: the void complex has no chains, so every `H̃` vanishes; the
//! irrelevant complex `⟨∅⟩` has `H̃_{-1} = ℤ`; any complex with a vertex has
//! `H̃_{-1} = 0`.

pub mod chain;
pub mod rank;
pub mod snf;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use chain::{boundary_matrices, ChainComplex, SparseMatrix};
pub use snf::{smith_normal_form, SmithForm};

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// Coefficient field for Betti numbers and homology dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FieldSpec {
    /// `𝔽_p`; `p` must be a prime below 2^32.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 32 {
            return Err(Error::Domain(format!("{p} is not a prime below 2^32")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn rank(&self, m: &SparseMatrix) -> usize {
        match *self {
            FieldSpec::Rationals => rank::rank_rational(m),
            FieldSpec::PrimeField(p) => rank::rank_mod_p(m, p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q` or `F<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| Error::Parse(format!("field must be Q or F<p>, got {s:?}")))?;
        let p: u64 = digits.parse().map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// `H̃_degree(Δ; ℤ) ≅ ℤ^free_rank ⊕ ⊕ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: isize,
    pub free_rank: usize,
    /// Invariant factors above one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "H~{} = {}", self.degree, parts.join(" + "))
    }
}

/// Integral reduced homology in every degree from −1 to the dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    pub groups: Vec<HomologyGroup>,
}

impl ReducedHomology {
    pub fn group(&self, degree: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.degree == degree)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &HomologyGroup> {
        self.groups.iter().filter(|g| !g.is_zero())
    }

    pub fn is_acyclic(&self) -> bool {
        self.nonzero().next().is_none()
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.iter().any(|g| !g.torsion.is_empty())
    }

    /// True when the homology is `ℤ` in `degree` and zero elsewhere.
    pub fn is_sphere_of_degree(&self, degree: isize) -> bool {
        let nonzero: Vec<_> = self.nonzero().collect();
        matches!(nonzero.as_slice(), [g] if g.degree == degree && g.free_rank == 1 && g.torsion.is_empty())
    }
}

impl fmt::Display for ReducedHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().map(|g| g.to_string()).collect();
        if parts.is_empty() {
            f.write_str("acyclic")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Homology of a chain complex over ℤ.
pub fn chain_homology_z(chains: &ChainComplex) -> ReducedHomology {
    let Some(top) = chains.top_degree() else { return ReducedHomology { groups: Vec::new() } };
    // smith[d] for ∂_d, d = 0..=top
    let forms: Vec<SmithForm> = (0..=top).map(|d| smith_normal_form(chains.boundary(d).expect("in range"))).collect();
    let rank_of = |d: isize| if d < 0 || d > top { 0 } else { forms[d as usize].rank };
    let groups = (-1..=top)
        .map(|d| {
            let cycles = chains.rank_of_chain_group(d) - rank_of(d);
            let boundaries = rank_of(d + 1);
            let torsion = if d < top { forms[(d + 1) as usize].torsion() } else { Vec::new() };
            HomologyGroup { degree: d, free_rank: cycles - boundaries, torsion }
        })
        .collect();
    ReducedHomology { groups }
}

/// Dimensions of reduced homology over a field, every degree from −1 to the dimension.
pub fn chain_homology_field(chains: &ChainComplex, field: FieldSpec) -> BTreeMap<isize, usize> {
    let Some(top) = chains.top_degree() else { return BTreeMap::new() };
    let ranks: Vec<usize> = (0..=top).map(|d| field.rank(chains.boundary(d).expect("in range"))).collect();
    let rank_of = |d: isize| if d < 0 || d > top { 0 } else { ranks[d as usize] };
    (-1..=top).map(|d| (d, chains.rank_of_chain_group(d) - rank_of(d) - rank_of(d + 1))).collect()
}

pub fn reduced_homology_z(complex: &SimplicialComplex) -> ReducedHomology {
    chain_homology_z(&boundary_matrices(complex))
}

pub fn reduced_homology_field(complex: &SimplicialComplex, field: FieldSpec) -> BTreeMap<isize, usize> {
    chain_homology_field(&boundary_matrices(complex), field)
}

/// Facets of the six-vertex real projective plane (half of the icosahedron).
pub const RP2_FACETS: [&str; 10] =
    ["v1v2v3", "v1v3v4", "v1v4v5", "v1v5v6", "v1v2v6", "v2v3v5", "v3v4v6", "v2v4v5", "v3v5v6", "v2v4v6"];

pub fn rp2() -> SimplicialComplex {
    let universe = crate::ideal::Universe::plain(6).expect("six variables");
    SimplicialComplex::parse(universe, &RP2_FACETS).expect("valid facets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Universe;
    use crate::simplicial::{complement_complex, facet_complex};
    use crate::tiling::domino_ideal;
    use crate::VariableId;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn plain(facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::parse(Universe::plain(8).unwrap(), facets).unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        plain(&["v1v2", "v2v3", "v1v3"])
    }

    fn gamma_c(n: usize) -> SimplicialComplex {
        complement_complex(&facet_complex(&domino_ideal(n).unwrap()), Universe::Board(n).full_mask()).unwrap()
    }

    #[test]
    fn point_chain_complex() {
        let c = boundary_matrices(&plain(&["v1"]));
        assert_eq!(c.basis(0).len(), 1);
        assert_eq!(c.basis(-1).len(), 1);
        assert_eq!(c.boundary(0).unwrap().to_dense(), vec![vec![1]]);
    }

    #[test]
    fn triangle_boundary_is_signed_incidence() {
        let c = boundary_matrices(&hollow_triangle());
        // edges v1v2, v1v3, v2v3 against vertices v1, v2, v3
        assert_eq!(c.boundary(1).unwrap().to_dense(), vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]);
        assert!(c.boundaries_compose_to_zero());
    }

    #[test]
    fn gamma_three_chain_complex_is_consistent() {
        assert!(boundary_matrices(&gamma_c(3)).boundaries_compose_to_zero());
    }

    #[test]
    fn circle_homology() {
        let h = reduced_homology_z(&hollow_triangle());
        assert!(h.is_sphere_of_degree(1));
        assert_eq!(reduced_homology_field(&hollow_triangle(), FieldSpec::PrimeField(2))[&1], 1);
    }

    #[test]
    fn degenerate_complexes() {
        let u = Universe::plain(3).unwrap();
        assert!(reduced_homology_z(&SimplicialComplex::void(u)).groups.is_empty());
        let h = reduced_homology_z(&SimplicialComplex::irrelevant(u));
        assert!(h.is_sphere_of_degree(-1));
        let dims = reduced_homology_field(&SimplicialComplex::irrelevant(u), FieldSpec::Rationals);
        assert_eq!(dims, BTreeMap::from([(-1, 1)]));
        assert!(reduced_homology_z(&plain(&["v1v2v3"])).is_acyclic());
    }

    #[test]
    fn gamma_three_and_its_link() {
        let g = gamma_c(3);
        assert!(reduced_homology_z(&g).is_sphere_of_degree(1));
        let link = g.link(VariableId::y(2)).unwrap();
        assert!(reduced_homology_z(&link).is_sphere_of_degree(0));
        assert!(reduced_homology_z(&g.deletion(VariableId::y(2)).unwrap()).is_acyclic());
    }

    #[test]
    fn gamma_four_over_rationals() {
        let dims = reduced_homology_field(&gamma_c(4), FieldSpec::Rationals);
        let nonzero: Vec<_> = dims.into_iter().filter(|&(_, v)| v > 0).collect();
        assert_eq!(nonzero, vec![(2, 1)]);
    }

    #[test]
    fn projective_plane_torsion() {
        let rp2 = rp2();
        let chains = boundary_matrices(&rp2);
        assert_eq!(chains.reduced_euler_characteristic(), 0); // χ = 1, minus the empty face
        let top = smith_normal_form(chains.boundary(2).unwrap());
        assert_eq!(top.torsion(), vec![BigInt::from(2)]);
        let h = reduced_homology_z(&rp2);
        assert_eq!(h.group(1).unwrap().torsion, vec![BigInt::from(2)]);
        assert_eq!(h.group(1).unwrap().free_rank, 0);
        assert!(h.group(2).unwrap().is_zero());
        let f2 = reduced_homology_field(&rp2, FieldSpec::PrimeField(2));
        let q = reduced_homology_field(&rp2, FieldSpec::Rationals);
        assert_eq!((f2[&1], f2[&2]), (1, 1));
        assert_eq!((q[&1], q[&2]), (0, 0));
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("F3".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(3));
        assert!("F4".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(7).to_string(), "F7");
    }

    fn euler_and_uct(complex: &SimplicialComplex) {
        let chains = boundary_matrices(complex);
        assert!(chains.boundaries_compose_to_zero());
        let z = chain_homology_z(&chains);
        for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2), FieldSpec::PrimeField(3)] {
            let dims = chain_homology_field(&chains, field);
            let chi: i64 = dims.iter().map(|(&d, &v)| if d % 2 == 0 { v as i64 } else { -(v as i64) }).sum();
            assert_eq!(chi, chains.reduced_euler_characteristic(), "{complex} over {field}");
            if !z.has_torsion() {
                for g in &z.groups {
                    assert_eq!(dims[&g.degree], g.free_rank, "{complex} over {field}");
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_and_universal_coefficients() {
        for n in 3..=5 {
            euler_and_uct(&gamma_c(n));
        }
        euler_and_uct(&rp2());
        euler_and_uct(&hollow_triangle());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_complexes_satisfy_euler_and_uct(facets in prop::collection::vec(1u64..256, 1..6)) {
            let u = Universe::plain(8).unwrap();
            let vertices = facets.iter().fold(0, |a, f| a | f);
            euler_and_uct(&SimplicialComplex::new(u, vertices, facets).unwrap());
        }

        #[test]
        fn snf_is_invariant_under_permutation(
            entries in prop::collection::vec(-3i64..=3, 20),
            seed in any::<u64>(),
        ) {
            let rows: Vec<Vec<i64>> = entries.chunks(5).map(<[i64]>::to_vec).collect();
            let base = smith_normal_form(&SparseMatrix::from_dense(&rows));
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut row_order: Vec<usize> = (0..4).collect();
            let mut col_order: Vec<usize> = (0..5).collect();
            row_order.shuffle(&mut rng);
            col_order.shuffle(&mut rng);
            let permuted: Vec<Vec<i64>> =
                row_order.iter().map(|&r| col_order.iter().map(|&c| rows[r][c]).collect()).collect();
            prop_assert_eq!(smith_normal_form(&SparseMatrix::from_dense(&permuted)), base.clone());
            prop_assert_eq!(base.rank, FieldSpec::Rationals.rank(&SparseMatrix::from_dense(&rows)));
        }
    }
}
