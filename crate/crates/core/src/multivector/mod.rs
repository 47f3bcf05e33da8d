//! Sparse exterior-algebra arithmetic over integer q-polynomials.
//!
//! Monomials are strictly increasing index tuples, elements are finitely
//! supported maps from monomials to [`QPolynomial`] coefficients, and the
//! wedge product tracks permutation signs at merge time so everything stays
//! in canonical form. The module also owns the dictionary between basis
//! monomials and the partitions labelling Schubert classes:
//! `e^{1+r1} ∧ … ∧ e^{k+rk}` corresponds to `λ = (rk, …, r1)`.

mod element;
mod monomial;
mod qpoly;

pub use element::Element;
pub use monomial::{wedge_monomials, Monomial};
pub use qpoly::QPolynomial;

use crate::schubert::Partition;
use crate::{Error, Result};

/// Monomial labelled by the partition `λ` inside the arity-`k` exterior
/// power: `(1 + r1, 2 + r2, …, k + rk)` with `(r1 ≤ … ≤ rk)` the parts of `λ`
/// read in reverse, padded with zeros.
pub fn partition_to_monomial(lambda: &Partition, k: usize) -> Result<Monomial> {
    if lambda.len() > k {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            arity: k,
        });
    }
    let indices = (0..k)
        .map(|j| (j as u32 + 1) + lambda.part(k - 1 - j))
        .collect();
    Ok(Monomial::from_sorted_unchecked(indices))
}

/// Inverse of [`partition_to_monomial`]: `λ_j = i_{k+1-j} - (k+1-j)`.
pub fn monomial_to_partition(m: &Monomial) -> Partition {
    let k = m.arity();
    let parts = (0..k)
        .map(|j| m.indices()[k - 1 - j] - (k - j) as u32)
        .collect();
    Partition::from_weakly_decreasing_unchecked(parts)
}
