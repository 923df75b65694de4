#![allow(dead_code)]

use coverlab_core::betti::BettiTable;
use coverlab_core::poly::IntPolynomial;

/// The alternating sum 1 - sum_i (-1)^i beta_{i,b} t^|b| over a Betti table:
/// the K-polynomial of the quotient, which must equal the Hilbert numerator.
pub fn alternating_sum_polynomial(table: &BettiTable) -> IntPolynomial {
    let mut kpoly = IntPolynomial::one();
    for e in table.entries() {
        let sign = if e.index % 2 == 0 { -1i64 } else { 1 };
        let term = IntPolynomial::from_i64(&[sign * e.rank as i64])
            .shifted(e.multidegree.degree() as usize);
        kpoly = &kpoly + &term;
    }
    kpoly
}

/// All partitions of `n` into at least two parts, descending, e.g.
/// `partitions_of(3) = [[2,1], [1,1,1]]`.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out.retain(|p| p.len() >= 2);
    out
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// All multipartite part tuples with total vertex count in `2..=max_n`.
pub fn all_parts_up_to(max_n: u32) -> Vec<Vec<u32>> {
    (2..=max_n).flat_map(partitions_of).collect()
}
