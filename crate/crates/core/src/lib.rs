//! Exact commutative algebra for monomial ideals attached to finite simple
//! graphs.
//!
//! The crate covers, end to end and with exact integer arithmetic:
//!
//! - monomial and monomial-ideal arithmetic (lcm, colon, intersection,
//!   minimal primes) in canonical minimal form,
//! - graph families (crown graphs, complete multipartite graphs) with their
//!   edge ideals, cover ideals, and minimal vertex covers,
//! - ordinary, bracket, and symbolic powers of squarefree monomial ideals,
//! - Hilbert series via a pivot recursion, with reduction to h-polynomial,
//!   Krull dimension, and multiplicity,
//! - multigraded Betti numbers over the lcm lattice (upper Koszul simplicial
//!   complexes and exact reduced-homology ranks), Castelnuovo-Mumford
//!   regularity, and projective dimension,
//! - closed-form Hilbert series, regularity, and multiplicity values for the
//!   crown and complete multipartite families, suitable for cross-checking
//!   against the computed invariants.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and safe to share across threads.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod betti;
pub mod complex;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod poly;
pub mod powers;

pub use error::Error;
pub use ideal::MonomialIdeal;
pub use monomial::{Exponent, Monomial, PrimeSupport};
