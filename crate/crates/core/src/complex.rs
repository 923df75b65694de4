//! Small simplicial complexes and exact reduced homology ranks over a field
//! of characteristic zero.
//!
//! Ranks are obtained by fraction-free (Bareiss) elimination on the integer
//! boundary matrices: an i128 fast path with checked arithmetic, falling back
//! to arbitrary-precision integers when an intermediate minor overflows.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

/// A finite simplicial complex given by an explicit downward-closed face
/// list over vertex indices.
///
/// The void complex (no faces at all) is distinct from the irrelevant
/// complex whose only face is the empty set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexLite {
    vertices: Vec<usize>,
    faces: Vec<Vec<usize>>,
}

impl SimplicialComplexLite {
    /// Build from any face list: faces are sorted, deduplicated, and closed
    /// downward (every subset of a face becomes a face).
    pub fn new(faces: Vec<Vec<usize>>) -> Self {
        let mut closed: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        while let Some(f) = stack.pop() {
            if closed.contains(&f) {
                continue;
            }
            for i in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(i);
                stack.push(sub);
            }
            closed.push(f);
        }
        closed.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut vertices: Vec<usize> = closed.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplexLite { vertices, faces: closed }
    }

    /// The void complex: no faces, all reduced homology zero.
    pub fn void() -> Self {
        SimplicialComplexLite { vertices: Vec::new(), faces: Vec::new() }
    }

    pub(crate) fn from_closed_faces(vertices: Vec<usize>, mut faces: Vec<Vec<usize>>) -> Self {
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplexLite { vertices, faces }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Faces sorted by cardinality then lexicographically; the empty face is
    /// listed when present.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Largest face cardinality (dimension + 1), or None when void.
    pub fn max_cardinality(&self) -> Option<usize> {
        self.faces.iter().map(Vec::len).max()
    }
}

/// Ranks of the reduced homology groups of a complex.
///
/// `rank(d)` is the rank of the d-th reduced homology; d = -1 is the
/// homology of the empty-face level (rank 1 exactly for the irrelevant
/// complex). Indexing by face cardinality, `by_cardinality()[c]` equals
/// `rank(c as i64 - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn rank(&self, dim: i64) -> usize {
        let idx = dim + 1;
        if idx < 0 {
            return 0;
        }
        self.ranks.get(idx as usize).copied().unwrap_or(0)
    }

    pub fn by_cardinality(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Exact reduced homology ranks over characteristic zero.
pub fn reduced_homology_ranks(complex: &SimplicialComplexLite) -> ReducedHomology {
    let Some(max_card) = complex.max_cardinality() else {
        return ReducedHomology { ranks: Vec::new() };
    };
    // Group faces by cardinality.
    let mut levels: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); max_card + 1];
    for f in complex.faces() {
        levels[f.len()].push(f);
    }
    // boundary_rank[c] = rank of the boundary map from cardinality-c faces
    // to cardinality-(c-1) faces (the augmentation for c = 1).
    let mut boundary_rank = vec![0usize; max_card + 2];
    for c in 1..=max_card {
        if levels[c].is_empty() || levels[c - 1].is_empty() {
            continue;
        }
        let index: BTreeMap<&[usize], usize> = levels[c - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut matrix = vec![vec![0i64; levels[c].len()]; levels[c - 1].len()];
        for (col, face) in levels[c].iter().enumerate() {
            let mut sign = 1i64;
            for omit in 0..face.len() {
                let mut sub: Vec<usize> = face.to_vec();
                sub.remove(omit);
                let row = index[sub.as_slice()];
                matrix[row][col] = sign;
                sign = -sign;
            }
        }
        boundary_rank[c] = integer_matrix_rank(&matrix);
    }
    let ranks = (0..=max_card)
        .map(|c| levels[c].len() - boundary_rank[c] - boundary_rank[c + 1])
        .collect();
    ReducedHomology { ranks }
}

/// Rank of an integer matrix over the rationals, by fraction-free
/// elimination. Exact for any input.
pub fn integer_matrix_rank(rows: &[Vec<i64>]) -> usize {
    match rank_fraction_free_i128(rows) {
        Some(rank) => rank,
        None => rank_fraction_free_bigint(rows),
    }
}

fn rank_fraction_free_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let a = pivot.checked_mul(m[r][c])?;
                let b = m[r][col].checked_mul(m[rank][c])?;
                let num = a.checked_sub(b)?;
                if num % prev != 0 {
                    return None;
                }
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn rank_fraction_free_bigint(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = num_integer_div_rem(&num, &prev);
                assert!(rem.is_zero(), "fraction-free elimination divided inexactly");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}
