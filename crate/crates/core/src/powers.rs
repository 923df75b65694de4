//! Ordinary, bracket, and symbolic powers of monomial ideals.
//!
//! Symbolic powers are defined for squarefree ideals as the intersection of
//! the s-th powers of the minimal primes (squarefree ideals have no embedded
//! primes, so this matches intersecting over all associated primes). For the
//! complete multipartite cover ideals there is also a two-step structural
//! recursion producing the same generators without any intersection.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::multipartite_monomials;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, PrimeSupport};

/// Ordinary power I^s (s-fold product); I^0 is the unit ideal.
pub fn power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal, Error> {
    let mut result = MonomialIdeal::unit(ideal.ambient());
    for _ in 0..s {
        result = result.product(ideal)?;
    }
    Ok(result)
}

/// Bracket power I^\[s\]: the ideal generated by the s-th powers of the
/// minimal generators. Requires s >= 1.
pub fn bracket_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal, Error> {
    if s < 1 {
        return Err(Error::PowerTooSmall { s, min: 1 });
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.pow(s))
        .collect::<Result<Vec<_>, _>>()?;
    MonomialIdeal::new(ideal.ambient(), gens)
}

fn minimal_primes_squarefree(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>, Error> {
    if !ideal.is_squarefree() {
        return Err(Error::NonSquarefree);
    }
    ideal.minimal_primes()
}

/// Symbolic power I^(s) of a squarefree proper nonzero ideal: the
/// intersection of p^s over the minimal primes p. I^(0) is the unit ideal.
///
/// The intersection is folded in increasing generator-count order with
/// minimalization after every step, which keeps the intermediate generating
/// sets small.
pub fn symbolic_power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal, Error> {
    let primes = minimal_primes_squarefree(ideal)?;
    if s == 0 {
        return Ok(MonomialIdeal::unit(ideal.ambient()));
    }
    let mut prime_powers: Vec<MonomialIdeal> =
        primes.iter().map(|p| p.power_ideal(s)).collect();
    prime_powers.sort_by_key(MonomialIdeal::num_generators);
    let mut result = MonomialIdeal::unit(ideal.ambient());
    for p in &prime_powers {
        result = result.intersect(p)?;
    }
    Ok(result)
}

/// Membership test for symbolic powers without computing the power: `u` lies
/// in I^(s) exactly when its exponent sum over every minimal prime is >= s.
pub fn symbolic_membership(
    ideal: &MonomialIdeal,
    u: &Monomial,
    s: u32,
) -> Result<bool, Error> {
    let primes = minimal_primes_squarefree(ideal)?;
    if u.ambient() != ideal.ambient() {
        return Err(Error::AmbientMismatch { left: ideal.ambient(), right: u.ambient() });
    }
    Ok(primes.iter().all(|p| u.degree_in(p.vars()) >= u64::from(s)))
}

/// Symbolic powers of the complete multipartite cover ideal by the
/// structural recursion
///
/// ```text
/// J^(s) = (vertex product) * J^(s-2) + (cover generators to the s-th power)
/// ```
///
/// with bases J^(0) = unit ideal and J^(1) = the cover ideal itself.
pub fn multipartite_symbolic_generators(
    parts: &[u32],
    s: u32,
) -> Result<MonomialIdeal, Error> {
    let mm = multipartite_monomials(parts)?;
    let cover = MonomialIdeal::new(mm.ambient, mm.cover_generators.clone())?;
    let mut by_level: Vec<MonomialIdeal> =
        vec![MonomialIdeal::unit(mm.ambient), cover.clone()];
    for level in 2..=s {
        let product = MonomialIdeal::principal(mm.vertex_product.clone())
            .product(&by_level[(level - 2) as usize])?;
        let powered = bracket_power(&cover, level)?;
        by_level.push(product.sum(&powered)?);
    }
    Ok(by_level[s as usize].clone())
}

/// The staged ideal interpolating between the vertex product and the bracket
/// power of the multipartite cover ideal: vertex product plus the s-th powers
/// of the first `j` cover generators (1-based, parts sorted descending).
pub fn bracket_stage_ideal(parts: &[u32], s: u32, j: usize) -> Result<MonomialIdeal, Error> {
    if s < 1 {
        return Err(Error::PowerTooSmall { s, min: 1 });
    }
    let mm = multipartite_monomials(parts)?;
    if j < 1 || j > mm.parts.len() {
        return Err(Error::StageIndex { j, k: mm.parts.len() });
    }
    let mut gens = vec![mm.vertex_product.clone()];
    for generator in &mm.cover_generators[..j] {
        gens.push(generator.pow(s)?);
    }
    MonomialIdeal::new(mm.ambient, gens)
}
