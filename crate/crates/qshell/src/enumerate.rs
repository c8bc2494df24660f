//! Enumeration of Grassmannians and of the full subspace poset Σ(E).
//!
//! Counts are exact (big integers); enumeration generates canonical RREF
//! bases directly — choose the pivot columns, then run an odometer over the
//! free entries — so the work is proportional to the Gaussian binomial
//! rather than to the number of spanning tuples.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::gf::FieldSpec;
use crate::linalg::{Matrix, Subspace};
use crate::order::subspace_compare;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("Gaussian binomial needs 0 ≤ k ≤ n, got n={n}, k={k}")]
    InvalidBinomial { n: i64, k: i64 },
    #[error("Gaussian binomials are defined for q ≥ 2, got {0}")]
    InvalidOrder(u64),
    #[error("rank {r} is out of range for ambient dimension {n}")]
    InvalidRank { n: usize, r: usize },
}

/// The Gaussian binomial [n choose k]_q: the number of k-dimensional
/// subspaces of F_q^n.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> Result<BigUint, EnumerationError> {
    if q < 2 {
        return Err(EnumerationError::InvalidOrder(q));
    }
    if k < 0 || k > n {
        return Err(EnumerationError::InvalidBinomial { n, k });
    }
    let q = BigUint::from(q);
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for i in 0..k as u32 {
        numerator *= q.pow(n as u32 - i) - 1u32;
        denominator *= q.pow(i + 1) - 1u32;
    }
    // The product of (q^{n-i}-1)/(q^{i+1}-1) terms is an integer; a single
    // exact division at the end avoids rational bookkeeping.
    Ok(numerator / denominator)
}

/// |Σ(E)| for E = F_q^n: the total number of subspaces of every dimension.
pub fn total_subspace_count(n: usize, q: u64) -> Result<BigUint, EnumerationError> {
    let mut total = BigUint::ZERO;
    for r in 0..=n {
        total += gaussian_binomial(n as i64, r as i64, q)?;
    }
    Ok(total)
}

/// All r-dimensional subspaces of F_q^n, sorted ascending by the ≼ order.
pub fn enumerate_grassmannian(
    spec: &Arc<FieldSpec>,
    n: usize,
    r: usize,
) -> Result<Vec<Subspace>, EnumerationError> {
    if r > n {
        return Err(EnumerationError::InvalidRank { n, r });
    }
    if r == 0 {
        return Ok(vec![Subspace::zero(spec, n)]);
    }
    let q = spec.q();
    let mut out = Vec::new();
    for pivots in combinations(n, r) {
        // Free entries sit to the right of each row's pivot, outside the
        // pivot columns of the other rows.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((i, c));
                }
            }
        }
        let mut values = vec![0u64; free.len()];
        loop {
            let mut m = Matrix::zero(spec, r, n);
            for (i, &p) in pivots.iter().enumerate() {
                m.set(i, p, 1).expect("1 is a valid repr");
            }
            for (&(i, c), &v) in free.iter().zip(&values) {
                m.set(i, c, v).expect("odometer values stay below q");
            }
            let s = Subspace::from_matrix(&m);
            debug_assert_eq!(s.dim(), r);
            debug_assert_eq!(s.pivots(), pivots);
            out.push(s);
            // Advance the odometer, least-significant position first.
            let mut pos = 0;
            loop {
                if pos == values.len() {
                    break;
                }
                values[pos] += 1;
                if values[pos] < q {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }
    }
    out.sort_by(|a, b| subspace_compare(a, b).expect("equidimensional by construction"));
    Ok(out)
}

/// Σ(E): every subspace of F_q^n, zero subspace first, ordered by dimension
/// and within each dimension by ≼.
pub fn enumerate_all_subspaces(
    spec: &Arc<FieldSpec>,
    n: usize,
) -> Result<Vec<Subspace>, EnumerationError> {
    let mut out = Vec::new();
    for r in 0..=n {
        out.extend(enumerate_grassmannian(spec, n, r)?);
    }
    Ok(out)
}

/// All size-r subsets of {0..n}, each sorted ascending, in lexicographic
/// order.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn rec(n: usize, r: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for c in start..n {
            current.push(c);
            rec(n, r, c + 1, current, out);
            current.pop();
        }
    }
    rec(n, r, 0, &mut current, &mut out);
    out
}
