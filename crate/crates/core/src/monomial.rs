//! Monomials over a fixed ambient variable set, and monomial primes.
//!
//! A monomial is its exponent vector; the ambient ring is implied by the
//! vector length. Operations on monomials from different ambients fail with
//! [`Error::AmbientMismatch`] instead of silently truncating.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

use crate::error::Error;
use crate::ideal::MonomialIdeal;

/// Exponent of a single variable. Exponent arithmetic is checked; overflow
/// surfaces as [`Error::ExponentOverflow`].
pub type Exponent = u32;

/// A monomial x_0^{e_0} ... x_{n-1}^{e_{n-1}}, stored as the vector `e`.
///
/// The identity monomial (the constant 1) is the all-zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    /// Monomial with the given exponent vector; the ambient size is its length.
    pub fn from_exponents(exps: Vec<Exponent>) -> Self {
        Monomial { exps }
    }

    /// The identity monomial in `ambient` variables.
    pub fn one(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    /// The single variable x_index in `ambient` variables.
    ///
    /// Panics if `index >= ambient`; variable indices are internal and always
    /// produced in range.
    pub fn variable(ambient: usize, index: usize) -> Self {
        assert!(index < ambient, "variable index out of range");
        let mut exps = vec![0; ambient];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    /// Total degree (sum of exponents).
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing this monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_ambient(&self, other: &Monomial) -> Result<(), Error> {
        if self.ambient() == other.ambient() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left: self.ambient(), right: other.ambient() })
        }
    }

    /// Product of two monomials (exponentwise sum, checked).
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_ambient(other)?;
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// `self` raised to the `s`-th power (checked).
    pub fn pow(&self, s: u32) -> Result<Monomial, Error> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &a in &self.exps {
            exps.push(a.checked_mul(s).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps })
    }

    /// Least common multiple: exponentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_ambient(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Ok(Monomial { exps })
    }

    /// Greatest common divisor: exponentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Result<Monomial, Error> {
        self.check_ambient(other)?;
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Ok(Monomial { exps })
    }

    /// Whether `self` divides `other` (exponentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> Result<bool, Error> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.ambient(), other.ambient());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / gcd(self, m)`: the generator image under the colon by `m`.
    pub fn colon_quotient(&self, m: &Monomial) -> Result<Monomial, Error> {
        self.check_ambient(m)?;
        let exps = self.exps.iter().zip(&m.exps).map(|(&a, &b)| a - a.min(b)).collect();
        Ok(Monomial { exps })
    }

    /// Squarefree part: exponents clamped to at most 1.
    pub fn radical(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }

    /// Sum of the exponents of the listed variables.
    pub fn degree_in(&self, vars: &[usize]) -> u64 {
        vars.iter().map(|&v| u64::from(self.exps[v])).sum()
    }

    /// Render with the given variable labels, e.g. `x1^2x3`.
    pub fn display_with<S: AsRef<str>>(&self, labels: &[S]) -> String {
        debug_assert_eq!(labels.len(), self.ambient());
        if self.is_identity() {
            return String::from("1");
        }
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => out.push_str(labels[i].as_ref()),
                _ => {
                    let _ = write!(out, "{}^{}", labels[i].as_ref(), e);
                }
            }
        }
        out
    }
}

/// Canonical order: total degree first, then lexicographic on exponents.
/// Ideal generator lists are sorted in this order, so ideal equality is
/// representation equality.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

/// A monomial prime ideal, i.e. an ideal generated by a subset of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeSupport {
    ambient: usize,
    vars: Vec<usize>,
}

impl PrimeSupport {
    /// Prime generated by the given variable indices (nonempty, in range).
    pub fn new(ambient: usize, mut vars: Vec<usize>) -> Result<Self, Error> {
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::EmptyPrime);
        }
        if let Some(&bad) = vars.iter().find(|&&v| v >= ambient) {
            return Err(Error::VertexOutOfRange { index: bad, count: ambient });
        }
        Ok(PrimeSupport { ambient, vars })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    /// Number of generating variables (the height of the prime).
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// The prime as a monomial ideal.
    pub fn generator_ideal(&self) -> MonomialIdeal {
        let gens = self.vars.iter().map(|&v| Monomial::variable(self.ambient, v)).collect();
        MonomialIdeal::new(self.ambient, gens).expect("variables share the ambient")
    }

    /// The ordinary power p^s, generated by all degree-`s` monomials in the
    /// prime's variables; `s = 0` gives the unit ideal.
    pub fn power_ideal(&self, s: u32) -> MonomialIdeal {
        if s == 0 {
            return MonomialIdeal::unit(self.ambient);
        }
        let mut gens = Vec::new();
        let mut exps = vec![0 as Exponent; self.ambient];
        fill_degree(&self.vars, 0, s, &mut exps, &mut gens);
        MonomialIdeal::new(self.ambient, gens).expect("generators share the ambient")
    }

    /// Sum of the exponents of `m` in the prime's variables: the quantity the
    /// symbolic membership test compares against `s`.
    pub fn degree_of(&self, m: &Monomial) -> Result<u64, Error> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: m.ambient() });
        }
        Ok(m.degree_in(&self.vars))
    }
}

fn fill_degree(
    vars: &[usize],
    pos: usize,
    remaining: u32,
    exps: &mut Vec<Exponent>,
    out: &mut Vec<Monomial>,
) {
    if pos + 1 == vars.len() {
        exps[vars[pos]] = remaining;
        out.push(Monomial::from_exponents(exps.clone()));
        exps[vars[pos]] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[vars[pos]] = e;
        fill_degree(vars, pos + 1, remaining - e, exps, out);
    }
    exps[vars[pos]] = 0;
}
