//! Multigraded Betti numbers via upper Koszul simplicial complexes on the
//! lcm lattice; Castelnuovo-Mumford regularity and projective dimension.
//!
//! Betti numbers of a monomial ideal vanish outside the lcm lattice of its
//! minimal generators, so the table is assembled by probing exactly the
//! lattice multidegrees. The lattice is built by a join-closure fixpoint,
//! never by enumerating generator subsets; per-multidegree complexes that
//! are cones are skipped (a cone is contractible, contributing nothing).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::complex::{reduced_homology_ranks, SimplicialComplexLite};
use crate::error::Error;
use crate::graph::normalize_parts;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The set of lcms of nonempty subsets of an ideal's minimal generators,
/// closed under pairwise lcm, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    ambient: usize,
    elements: Vec<Monomial>,
}

impl LcmLattice {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Elements sorted by (degree, lex).
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

/// Join-closure of the minimal generators under pairwise lcm, by a worklist
/// fixpoint. Requires a proper nonzero ideal.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<LcmLattice, Error> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut set: BTreeSet<Monomial> = ideal.generators().iter().cloned().collect();
    let mut queue: Vec<Monomial> = ideal.generators().to_vec();
    while let Some(m) = queue.pop() {
        let snapshot: Vec<Monomial> = set.iter().cloned().collect();
        for e in snapshot {
            let join = m.lcm(&e).expect("lattice elements share the ambient");
            if set.insert(join.clone()) {
                queue.push(join);
            }
        }
    }
    Ok(LcmLattice { ambient: ideal.ambient(), elements: set.into_iter().collect() })
}

/// Face bitmasks (over the support of `b`) of the upper Koszul complex of
/// `ideal` at `b`: subsets t of supp(b) with x^(b - t) in the ideal.
fn koszul_face_masks(ideal: &MonomialIdeal, b: &Monomial) -> Result<Vec<u64>, Error> {
    if b.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch { left: ideal.ambient(), right: b.ambient() });
    }
    let support = b.support();
    if support.len() > 63 {
        return Err(Error::SupportTooLarge { size: support.len() });
    }
    let mut faces = Vec::new();
    let mut probe = b.exponents().to_vec();
    for mask in 0u64..(1u64 << support.len()) {
        for (bit, &v) in support.iter().enumerate() {
            probe[v] = b.exponent(v) - u32::from(mask >> bit & 1 == 1);
        }
        if ideal.contains_unchecked(&Monomial::from_exponents(probe.clone())) {
            faces.push(mask);
        }
    }
    Ok(faces)
}

/// Whether some vertex extends every face: such a complex is a cone, hence
/// contractible with vanishing reduced homology.
fn has_cone_point(faces: &[u64], vertex_count: usize) -> bool {
    if faces.is_empty() {
        return false;
    }
    let face_set: BTreeSet<u64> = faces.iter().copied().collect();
    'vertex: for bit in 0..vertex_count {
        let v = 1u64 << bit;
        for &f in faces {
            if f & v == 0 && !face_set.contains(&(f | v)) {
                continue 'vertex;
            }
        }
        return true;
    }
    false
}

fn masks_to_complex(support: &[usize], masks: &[u64]) -> SimplicialComplexLite {
    let faces = masks
        .iter()
        .map(|&mask| {
            support
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    SimplicialComplexLite::from_closed_faces(support.to_vec(), faces)
}

/// The upper Koszul simplicial complex of `ideal` at the multidegree `b`:
/// faces are the squarefree t <= b with x^(b-t) in the ideal.
///
/// Any `b` is accepted; multidegrees outside the lcm lattice only ever
/// produce acyclic complexes, so asking for them is wasteful but harmless.
pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    b: &Monomial,
) -> Result<SimplicialComplexLite, Error> {
    let masks = koszul_face_masks(ideal, b)?;
    Ok(masks_to_complex(&b.support(), &masks))
}

/// One nonzero multigraded Betti number of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BettiEntry {
    /// Homological index i (so that index 0 marks minimal generators).
    pub index: usize,
    /// The multidegree b.
    pub multidegree: Monomial,
    /// The rank of the corresponding Tor piece.
    pub rank: usize,
}

/// All nonzero multigraded Betti numbers of an ideal I, with the coarse
/// (index, total degree) view, regularity, and projective dimension derived.
///
/// Entries are the Betti numbers of I itself; the quotient S/I has the same
/// table shifted by one homological step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ambient: usize,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Entries sorted by (index, multidegree).
    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    /// Coarse table: (homological index, total degree) -> summed rank.
    pub fn coarse(&self) -> BTreeMap<(usize, u64), usize> {
        let mut view = BTreeMap::new();
        for e in &self.entries {
            *view.entry((e.index, e.multidegree.degree())).or_insert(0) += e.rank;
        }
        view
    }

    /// Total rank at the given homological index.
    pub fn total_rank(&self, index: usize) -> usize {
        self.entries.iter().filter(|e| e.index == index).map(|e| e.rank).sum()
    }

    /// Castelnuovo-Mumford regularity of the ideal: max |b| - i over the
    /// nonzero entries.
    pub fn regularity(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.multidegree.degree() - e.index as u64)
            .max()
            .expect("a proper nonzero ideal has entries at its generators")
    }

    /// Regularity of the quotient S/I, which is reg(I) - 1.
    pub fn quotient_regularity(&self) -> u64 {
        self.regularity() - 1
    }

    /// Projective dimension of the quotient S/I: one more than the largest
    /// homological index of the ideal's resolution.
    pub fn projective_dimension(&self) -> usize {
        1 + self.entries.iter().map(|e| e.index).max().expect("table is nonempty")
    }
}

/// Compute the full Betti table of a proper nonzero monomial ideal.
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable, Error> {
    let lattice = lcm_lattice(ideal)?;
    let mut entries = Vec::new();
    for b in lattice.elements() {
        let support = b.support();
        let masks = koszul_face_masks(ideal, b)?;
        if has_cone_point(&masks, support.len()) {
            continue;
        }
        let complex = masks_to_complex(&support, &masks);
        let homology = reduced_homology_ranks(&complex);
        for (cardinality, &rank) in homology.by_cardinality().iter().enumerate() {
            if rank > 0 {
                entries.push(BettiEntry {
                    index: cardinality,
                    multidegree: b.clone(),
                    rank,
                });
            }
        }
    }
    entries.sort();
    Ok(BettiTable { ambient: ideal.ambient(), entries })
}

/// Castelnuovo-Mumford regularity of a proper nonzero monomial ideal.
pub fn regularity(ideal: &MonomialIdeal) -> Result<u64, Error> {
    Ok(betti_table(ideal)?.regularity())
}

/// Projective dimension of the quotient S/I.
pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize, Error> {
    Ok(betti_table(ideal)?.projective_dimension())
}

/// Families with a closed-form regularity value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityFamily {
    /// reg of the s-th power of the crown cover ideal: s(2n-2).
    CrownPower { n: usize, s: u32 },
    /// reg of the s-th symbolic power of the complete multipartite cover
    /// ideal: s(n - p_k) + p_k - 1 (parts sorted descending, p_k smallest).
    /// Complete graphs are the all-ones case, where this is s(n-1).
    MultipartiteSymbolic { parts: Vec<u32>, s: u32 },
    /// reg of the staged ideal (vertex product, first j cover generators to
    /// the s-th power): s(n - p_j) + p_j - 1, for s >= 2 and 1 <= j <= k.
    BracketStage { parts: Vec<u32>, s: u32, j: usize },
}

/// The closed-form regularity value for a supported family instance.
pub fn closed_form_regularity(family: &RegularityFamily) -> Result<u64, Error> {
    match family {
        RegularityFamily::CrownPower { n, s } => {
            if *n < 3 {
                return Err(Error::CrownSize { n: *n, min: 3 });
            }
            if *s < 1 {
                return Err(Error::PowerTooSmall { s: *s, min: 1 });
            }
            Ok(u64::from(*s) * (2 * *n as u64 - 2))
        }
        RegularityFamily::MultipartiteSymbolic { parts, s } => {
            let (sorted, _) = normalize_parts(parts)?;
            if *s < 1 {
                return Err(Error::PowerTooSmall { s: *s, min: 1 });
            }
            let n: u64 = sorted.iter().map(|&p| u64::from(p)).sum();
            let smallest = u64::from(*sorted.last().expect("k >= 2"));
            Ok(u64::from(*s) * (n - smallest) + smallest - 1)
        }
        RegularityFamily::BracketStage { parts, s, j } => {
            let (sorted, _) = normalize_parts(parts)?;
            if *s < 2 {
                return Err(Error::PowerTooSmall { s: *s, min: 2 });
            }
            if *j < 1 || *j > sorted.len() {
                return Err(Error::StageIndex { j: *j, k: sorted.len() });
            }
            let n: u64 = sorted.iter().map(|&p| u64::from(p)).sum();
            let pj = u64::from(sorted[*j - 1]);
            Ok(u64::from(*s) * (n - pj) + pj - 1)
        }
    }
}
