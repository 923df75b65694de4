//! Monomial ideals in canonical minimal form and their exact arithmetic:
//! sum, product, intersection, colon, membership, and minimal primes.
//!
//! Every constructor minimalizes (drops generators divisible by another
//! generator) and sorts by (degree, lex), so two ideals are equal exactly
//! when their generator vectors are equal.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::monomial::{Monomial, PrimeSupport};

/// A monomial ideal given by its unique minimal monomial generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// identity monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build the ideal generated by `gens`, minimalizing to canonical form.
    pub fn new(ambient: usize, gens: Vec<Monomial>) -> Result<Self, Error> {
        for g in &gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: g.ambient() });
            }
        }
        Ok(MonomialIdeal { ambient, gens: canonicalize(gens) })
    }

    /// The zero ideal (empty generating set).
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    /// The unit ideal, generated by the identity monomial.
    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::one(ambient)] }
    }

    /// The principal ideal (m).
    pub fn principal(m: Monomial) -> Self {
        let ambient = m.ambient();
        MonomialIdeal { ambient, gens: vec![m] }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_identity()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Largest total degree among the minimal generators.
    pub fn max_generator_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<(), Error> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient })
        }
    }

    /// Ideal sum: minimalized union of the generating sets.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        self.check_ambient(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal { ambient: self.ambient, gens: canonicalize(gens) })
    }

    /// Ideal product: minimalized set of pairwise generator products.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ok(MonomialIdeal { ambient: self.ambient, gens: canonicalize(gens) })
    }

    /// Ideal intersection: minimalized set of pairwise generator lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        self.check_ambient(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b)?);
            }
        }
        Ok(MonomialIdeal { ambient: self.ambient, gens: canonicalize(gens) })
    }

    /// Colon by a monomial: (I : m) = ({ g / gcd(g, m) }).
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal, Error> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: m.ambient() });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.colon_quotient(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal { ambient: self.ambient, gens: canonicalize(gens) })
    }

    /// Colon by an ideal: (I : J) = intersection of (I : g) over generators
    /// g of J. The colon by the zero ideal is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, Error> {
        self.check_ambient(other)?;
        let mut result = MonomialIdeal::unit(self.ambient);
        for g in &other.gens {
            result = result.intersect(&self.colon(g)?)?;
        }
        Ok(result)
    }

    /// Monomial membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, Error> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: m.ambient() });
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// Squarefree part of the ideal (radical), minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        MonomialIdeal { ambient: self.ambient, gens: canonicalize(gens) }
    }

    /// Inclusion-minimal monomial primes containing the ideal.
    ///
    /// Works on the radical (minimal primes are radical-invariant) and
    /// computes minimal transversals of the generator-support hypergraph.
    /// Requires a proper, nonzero ideal.
    pub fn minimal_primes(&self) -> Result<Vec<PrimeSupport>, Error> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let supports: Vec<Vec<usize>> =
            self.radical().gens.iter().map(Monomial::support).collect();
        let mut primes: Vec<PrimeSupport> = minimal_transversals(&supports)
            .into_iter()
            .map(|vars| PrimeSupport::new(self.ambient, vars).expect("transversal is nonempty"))
            .collect();
        primes.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.vars().cmp(b.vars())));
        Ok(primes)
    }

    /// Render as a comma-separated generator list using variable labels.
    pub fn display_with<S: AsRef<str>>(&self, labels: &[S]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(labels)).collect();
        parts.join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Sort, deduplicate, and drop every generator properly divisible by another.
fn canonicalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    // After dedup a divisor of g is strictly smaller in degree, hence earlier.
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'outer: for g in gens {
        for h in &kept {
            if h.degree() >= g.degree() {
                break;
            }
            if h.divides_unchecked(&g) {
                continue 'outer;
            }
        }
        kept.push(g);
    }
    kept
}

/// All inclusion-minimal transversals of a list of nonempty vertex sets.
///
/// Incremental construction: each partial transversal either already meets
/// the next set or branches on its elements, pruning non-minimal candidates
/// after every step.
pub(crate) fn minimal_transversals(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut partials: Vec<Vec<usize>> = vec![Vec::new()];
    for set in sets {
        let mut next: Vec<Vec<usize>> = Vec::new();
        for t in &partials {
            if set.iter().any(|v| t.binary_search(v).is_ok()) {
                next.push(t.clone());
            } else {
                for &v in set {
                    let mut u = t.clone();
                    let pos = u.binary_search(&v).unwrap_err();
                    u.insert(pos, v);
                    next.push(u);
                }
            }
        }
        next.sort();
        next.dedup();
        partials = prune_supersets(next);
    }
    partials
}

fn prune_supersets(candidates: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut keep = vec![true; candidates.len()];
    for (i, a) in candidates.iter().enumerate() {
        if !keep[i] {
            continue;
        }
        for (j, b) in candidates.iter().enumerate() {
            if i != j && keep[j] && is_subset(a, b) && a.len() < b.len() {
                keep[j] = false;
            }
        }
    }
    candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}
