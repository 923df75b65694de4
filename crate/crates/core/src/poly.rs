//! Dense univariate polynomials with exact arbitrary-precision integer
//! coefficients, as needed for Hilbert numerators.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial in t with integer coefficients; index = power of t.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// The monomial t^k.
    pub fn term(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// (1 - t)^k, expanded.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut p = IntPolynomial::one();
        let factor = IntPolynomial::from_i64(&[1, -1]);
        for _ in 0..k {
            p = &p * &factor;
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by t^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Value at t = 1 (the coefficient sum).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact synthetic division by (1 - t). Returns None when the division
    /// leaves a remainder, i.e. when the value at t = 1 is nonzero.
    pub fn div_exact_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        // q_i = a_0 + ... + a_i; exact iff the full prefix sum vanishes.
        let mut quotient = Vec::with_capacity(self.coeffs.len());
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc += c;
            quotient.push(acc.clone());
        }
        let remainder = quotient.pop().expect("nonzero polynomial");
        if !remainder.is_zero() {
            return None;
        }
        Some(IntPolynomial::new(quotient))
    }

    /// Render like `1 - 3t^2 + 2t^3` (unit coefficients elided on t-terms).
    pub fn display_text(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = magnitude.is_one();
            match k {
                0 => {
                    let _ = write!(out, "{magnitude}");
                }
                1 => {
                    if unit {
                        out.push('t');
                    } else {
                        let _ = write!(out, "{magnitude}t");
                    }
                }
                _ => {
                    if unit {
                        let _ = write!(out, "t^{k}");
                    } else {
                        let _ = write!(out, "{magnitude}t^{k}");
                    }
                }
            }
        }
        out
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) + rhs.coefficient(i));
        }
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coefficient(i) - rhs.coefficient(i));
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_text())
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut value = BigInt::one();
    for i in 0..k {
        value = value * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = IntPolynomial::from_i64(&[1, 0, 2, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p, IntPolynomial::from_i64(&[1, 0, 2]));
    }

    #[test]
    fn arithmetic_round_trip() {
        let p = IntPolynomial::from_i64(&[1, -1]);
        let q = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(&p * &q, IntPolynomial::from_i64(&[1, 0, -1]));
        assert_eq!(&(&p + &q), &IntPolynomial::from_i64(&[2]));
        assert_eq!(&p - &q, IntPolynomial::from_i64(&[0, -2]));
    }

    #[test]
    fn division_by_one_minus_t_is_exact_or_fails() {
        // 1 - 3t^2 + 2t^3 = (1 - t)^2 (1 + 2t)
        let p = IntPolynomial::from_i64(&[1, 0, -3, 2]);
        let q = p.div_exact_one_minus_t().unwrap();
        let r = q.div_exact_one_minus_t().unwrap();
        assert_eq!(r, IntPolynomial::from_i64(&[1, 2]));
        assert!(r.div_exact_one_minus_t().is_none());
    }

    #[test]
    fn one_minus_t_pow_expands() {
        assert_eq!(
            IntPolynomial::one_minus_t_pow(2),
            IntPolynomial::from_i64(&[1, -2, 1])
        );
    }

    #[test]
    fn display_matches_expected_layout() {
        let p = IntPolynomial::from_i64(&[1, 0, -3, 2]);
        assert_eq!(p.display_text(), "1 - 3t^2 + 2t^3");
        let q = IntPolynomial::from_i64(&[0, 1, 1]);
        assert_eq!(q.display_text(), "t + t^2");
        assert_eq!(IntPolynomial::zero().display_text(), "0");
        assert_eq!(IntPolynomial::from_i64(&[-1, 2]).display_text(), "-1 + 2t");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(27, 13), BigInt::from(20058300u64));
    }
}
