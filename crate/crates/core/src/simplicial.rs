//! Simplicial complexes stored by their facets.
//!
//! Two degenerate complexes are kept apart: the void complex has no faces at
//! all, the irrelevant complex `⟨∅⟩` has only the empty face. Their reduced
//! homology differs (`H̃_{-1}(⟨∅⟩)` has rank one), and the Betti formulas rely
//! on it.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{domain, Result};
use crate::ideal::{lex_cmp, mask_below, maximal_sets, positions, MonomialIdeal, Universe, VariableId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexKind {
    /// No faces.
    Void,
    /// Only the empty face.
    Irrelevant,
    /// At least one vertex.
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    universe: Universe,
    vertices: u64,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` on the vertex set `vertices`.
    /// Non-maximal faces are dropped.
    pub fn new(universe: Universe, vertices: u64, faces: Vec<u64>) -> Result<Self> {
        if vertices & !universe.full_mask() != 0 {
            return Err(domain("vertex set exceeds the universe"));
        }
        if let Some(f) = faces.iter().find(|&&f| f & !vertices != 0) {
            return Err(domain(format!(
                "face {} is not inside the vertex set {}",
                universe.format_mask(*f),
                universe.format_mask(vertices)
            )));
        }
        Ok(SimplicialComplex { universe, vertices, facets: maximal_sets(faces) })
    }

    pub fn void(universe: Universe) -> Self {
        SimplicialComplex { universe, vertices: 0, facets: Vec::new() }
    }

    pub fn irrelevant(universe: Universe) -> Self {
        SimplicialComplex { universe, vertices: 0, facets: vec![0] }
    }

    pub fn parse(universe: Universe, facets: &[&str]) -> Result<Self> {
        let masks = facets.iter().map(|f| universe.parse_monomial(f).map(|m| m.mask())).collect::<Result<Vec<_>>>()?;
        let vertices = masks.iter().fold(0, |a, f| a | f);
        Self::new(universe, vertices, masks)
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [0] => ComplexKind::Irrelevant,
            _ => ComplexKind::Ordinary,
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn vertices(&self) -> u64 {
        self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Facets rendered as monomials, in canonical order.
    pub fn facet_names(&self) -> Vec<String> {
        self.facets.iter().map(|&f| self.universe.format_mask(f)).collect()
    }

    /// Dimension of the largest facet; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| f & face == face)
    }

    /// Every face, the empty face included, grouped by size.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        let top = self.facets.iter().map(|f| f.count_ones() as usize).max();
        let Some(top) = top else { return Vec::new() };
        let mut seen: HashSet<u64> = HashSet::new();
        for &facet in &self.facets {
            // all submasks of the facet
            let mut sub = facet;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        let mut by_size = vec![Vec::new(); top + 1];
        for face in seen {
            by_size[face.count_ones() as usize].push(face);
        }
        for level in &mut by_size {
            level.sort_unstable_by(|a, b| lex_cmp(*a, *b));
        }
        by_size
    }

    fn vertex_position(&self, v: VariableId) -> Result<u64> {
        let p = self.universe.position(v)?;
        if self.vertices & (1 << p) == 0 {
            return Err(domain(format!("vertex {v} is not in the vertex set of the complex")));
        }
        Ok(1 << p)
    }

    /// Faces avoiding `v`.
    pub fn deletion(&self, v: VariableId) -> Result<Self> {
        let bit = self.vertex_position(v)?;
        Ok(SimplicialComplex {
            universe: self.universe,
            vertices: self.vertices & !bit,
            facets: maximal_sets(self.facets.iter().map(|f| f & !bit).collect()),
        })
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` a face.
    pub fn link(&self, v: VariableId) -> Result<Self> {
        let bit = self.vertex_position(v)?;
        let through: Vec<u64> = self.facets.iter().filter(|&&f| f & bit != 0).map(|f| f & !bit).collect();
        Ok(SimplicialComplex { universe: self.universe, vertices: self.vertices & !bit, facets: maximal_sets(through) })
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.universe != other.universe || self.vertices & other.vertices != 0 {
            return Err(domain("join needs disjoint vertex sets in one universe"));
        }
        let facets = self.facets.iter().flat_map(|a| other.facets.iter().map(move |b| a | b)).collect();
        Ok(SimplicialComplex {
            universe: self.universe,
            vertices: self.vertices | other.vertices,
            facets: maximal_sets(facets),
        })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ComplexKind::Void => f.write_str("void"),
            ComplexKind::Irrelevant => f.write_str("<{}>"),
            ComplexKind::Ordinary => write!(f, "<{}>", self.facet_names().join(", ")),
        }
    }
}

/// `Δ(I)`: facets are the supports of the minimal generators.
pub fn facet_complex(ideal: &MonomialIdeal) -> SimplicialComplex {
    SimplicialComplex {
        universe: ideal.universe(),
        vertices: ideal.variable_union(),
        facets: maximal_sets(ideal.masks().to_vec()),
    }
}

/// `Δ^c_X`: generated by `X \ F` over the facets `F`.
pub fn complement_complex(complex: &SimplicialComplex, x: u64) -> Result<SimplicialComplex> {
    if let Some(f) = complex.facets.iter().find(|&&f| f & !x != 0) {
        return Err(domain(format!(
            "facet {} is not contained in {}",
            complex.universe.format_mask(*f),
            complex.universe.format_mask(x)
        )));
    }
    SimplicialComplex::new(complex.universe, x, complex.facets.iter().map(|f| x & !f).collect())
}

/// `Δ_Y`: the facets of `Δ` that lie inside `Y`.
pub fn induced_subcollection(complex: &SimplicialComplex, y: u64) -> SimplicialComplex {
    let facets: Vec<u64> = complex.facets.iter().copied().filter(|&f| f & !y == 0).collect();
    let vertices = facets.iter().fold(0, |a, f| a | f);
    SimplicialComplex { universe: complex.universe, vertices, facets }
}

/// A distinct non-void induced subcollection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubcollection {
    /// Which facets of the parent are kept (bit `k` = `k`-th facet).
    pub facet_set: u64,
    pub complex: SimplicialComplex,
    pub vertex_count: usize,
}

fn closure_of(facets: &[u64], y: u64) -> u64 {
    facets.iter().enumerate().filter(|(_, &f)| f & !y == 0).fold(0, |acc, (k, _)| acc | 1 << k)
}

fn collect(complex: &SimplicialComplex, sets: BTreeSet<u64>) -> Vec<InducedSubcollection> {
    let mut out: Vec<InducedSubcollection> = sets
        .into_iter()
        .map(|facet_set| {
            let facets: Vec<u64> = positions(facet_set).map(|k| complex.facets[k]).collect();
            let vertices = facets.iter().fold(0, |a, f| a | f);
            InducedSubcollection {
                facet_set,
                vertex_count: vertices.count_ones() as usize,
                complex: SimplicialComplex { universe: complex.universe, vertices, facets },
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.vertex_count.cmp(&b.vertex_count).then_with(|| lex_cmp(a.complex.vertices, b.complex.vertices))
    });
    out
}

/// Every distinct non-void induced subcollection, each exactly once.
///
/// Closed facet sets are grown from single facets by adding one facet and
/// re-closing, so only sets that actually occur are visited.
pub fn enumerate_induced_subcollections(complex: &SimplicialComplex) -> Result<Vec<InducedSubcollection>> {
    let facets = &complex.facets;
    if facets.is_empty() {
        return Err(domain("the void complex has no induced subcollections"));
    }
    if facets.len() > 64 {
        return Err(domain("more than 64 facets"));
    }
    let vertex_sets: Vec<u64> = facets.clone();
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    let mut frontier: Vec<(u64, u64)> = Vec::new();
    for &f in facets {
        let closed = closure_of(facets, f);
        if seen.insert(closed) {
            frontier.push((closed, f));
        }
    }
    while let Some((set, union)) = frontier.pop() {
        for (k, &f) in vertex_sets.iter().enumerate() {
            if set & (1 << k) != 0 {
                continue;
            }
            let grown_union = union | f;
            let closed = closure_of(facets, grown_union);
            if seen.insert(closed) {
                frontier.push((closed, grown_union));
            }
        }
    }
    Ok(collect(complex, seen))
}

/// Same result as [`enumerate_induced_subcollections`], by scanning every
/// subset of the vertex set. Refuses vertex sets above 2^24 subsets.
pub fn enumerate_induced_subcollections_by_vertices(complex: &SimplicialComplex) -> Result<Vec<InducedSubcollection>> {
    if complex.facets.is_empty() {
        return Err(domain("the void complex has no induced subcollections"));
    }
    let verts: Vec<usize> = positions(complex.vertices).collect();
    if verts.len() > 24 {
        return Err(domain("vertex scan limited to 24 vertices"));
    }
    let mut seen = BTreeSet::new();
    for choice in 0..=mask_below(verts.len()) {
        let y = positions(choice).fold(0u64, |acc, i| acc | 1 << verts[i]);
        let closed = closure_of(&complex.facets, y);
        if closed != 0 {
            seen.insert(closed);
        }
    }
    Ok(collect(complex, seen))
}
