//! Smith normal form of integer matrices, in arbitrary precision.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Result of a Smith normal form computation.
///
/// `factors` are the nonzero diagonal entries `d₁ | d₂ | … | d_k > 0`
/// (including any leading 1s); `cokernel_rank` is the free rank of
/// `ℤ^cols / rowspace`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigUint>,
    pub cokernel_rank: usize,
}

/// Diagonalize by unimodular row/column operations. Exact; never overflows.
pub fn smith_normal_form(input: &[Vec<BigInt>]) -> SmithNormalForm {
    let rows = input.len();
    let cols = input.first().map_or(0, |r| r.len());
    debug_assert!(input.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut m: Vec<Vec<BigInt>> = input.to_vec();
    let mut factors = Vec::new();
    let mut k = 0usize;

    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&m, k) else {
            break; // remaining submatrix is zero
        };
        m.swap(k, pi);
        swap_cols(&mut m, k, pj);

        loop {
            // Clear column k with row operations; truncated division leaves
            // remainders strictly smaller than the pivot.
            let mut leftover = false;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = &m[i][k] / &m[k][k];
                for j in k..cols {
                    let sub = &q * &m[k][j];
                    m[i][j] -= sub;
                }
                leftover |= !m[i][k].is_zero();
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = &m[k][j] / &m[k][k];
                for i in k..rows {
                    let sub = &q * &m[i][k];
                    m[i][j] -= sub;
                }
                leftover |= !m[k][j].is_zero();
            }
            if leftover {
                // a remainder smaller than the pivot appeared; re-pivot
                let (pi, pj) = min_abs_entry(&m, k).expect("nonzero remainder");
                m.swap(k, pi);
                swap_cols(&mut m, k, pj);
                continue;
            }
            // Row and column k are clear. Enforce divisibility of the rest.
            if let Some((i, _)) = non_divisible_entry(&m, k) {
                for j in k..cols {
                    let add = m[i][j].clone();
                    m[k][j] += add;
                }
                let (pi, pj) = min_abs_entry(&m, k).expect("nonzero pivot");
                m.swap(k, pi);
                swap_cols(&mut m, k, pj);
                continue;
            }
            break;
        }

        if m[k][k].is_negative() {
            for j in k..cols {
                m[k][j] = -m[k][j].clone();
            }
        }
        factors.push(m[k][k].magnitude().clone());
        k += 1;
    }

    SmithNormalForm {
        cokernel_rank: cols - factors.len(),
        factors,
    }
}

fn min_abs_entry(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < m[bi][bj].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

fn non_divisible_entry(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let pivot = m[k][k].clone();
    for (i, row) in m.iter().enumerate().skip(k + 1) {
        for (j, v) in row.iter().enumerate().skip(k + 1) {
            if !(v % &pivot).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Convenience wrapper for small integer matrices.
pub fn smith_normal_form_i64(input: &[Vec<i64>]) -> SmithNormalForm {
    let m: Vec<Vec<BigInt>> = input
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    smith_normal_form(&m)
}
