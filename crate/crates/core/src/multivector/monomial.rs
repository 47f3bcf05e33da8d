use std::fmt;

use crate::{Error, Result};

/// A basis monomial `e^{i1} ∧ e^{i2} ∧ … ∧ e^{ik}` of the exterior algebra,
/// stored as its strictly increasing index sequence. The empty sequence is the
/// unit `1` of the degree-0 part.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial, rejecting repeated, unsorted, or zero indices.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        let valid =
            indices.first().is_none_or(|&i| i >= 1) && indices.windows(2).all(|w| w[0] < w[1]);
        if valid {
            Ok(Self { indices })
        } else {
            Err(Error::InvalidMonomial(indices))
        }
    }

    /// The unit of the degree-0 part.
    pub fn unit() -> Self {
        Self {
            indices: Vec::new(),
        }
    }

    pub fn single(index: u32) -> Result<Self> {
        Self::new(vec![index])
    }

    /// Skips validation; callers guarantee a strictly increasing sequence.
    pub(crate) fn from_sorted_unchecked(indices: Vec<u32>) -> Self {
        debug_assert!(indices.first().is_none_or(|&i| i >= 1));
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Number of wedge factors.
    pub fn arity(&self) -> usize {
        self.indices.len()
    }

    /// Sum of the indices.
    pub fn weight(&self) -> u64 {
        self.indices.iter().map(|&i| u64::from(i)).sum()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.indices.last().copied()
    }

    pub fn is_unit(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        for (t, i) in self.indices.iter().enumerate() {
            if t > 0 {
                write!(f, "^")?;
            }
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonicalizes `a ∧ b`: merges the index sequences and returns the sign of
/// the merging permutation, or `(0, unit)` when an index repeats.
pub fn wedge_monomials(a: &Monomial, b: &Monomial) -> (i32, Monomial) {
    let (av, bv) = (&a.indices, &b.indices);
    let mut merged = Vec::with_capacity(av.len() + bv.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < av.len() && j < bv.len() {
        if av[i] < bv[j] {
            merged.push(av[i]);
            i += 1;
        } else if av[i] > bv[j] {
            // bv[j] jumps over everything remaining in a
            inversions += av.len() - i;
            merged.push(bv[j]);
            j += 1;
        } else {
            return (0, Monomial::unit());
        }
    }
    merged.extend_from_slice(&av[i..]);
    merged.extend_from_slice(&bv[j..]);
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    (sign, Monomial { indices: merged })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[u32]) -> Monomial {
        Monomial::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn rejects_unsorted_and_zero_indices() {
        assert!(Monomial::new(vec![2, 1]).is_err());
        assert!(Monomial::new(vec![1, 1]).is_err());
        assert!(Monomial::new(vec![0, 1]).is_err());
        assert!(Monomial::new(vec![]).is_ok());
    }

    #[test]
    fn wedge_interleaving_free_pair() {
        let (s, w) = wedge_monomials(&m(&[1, 2]), &m(&[3, 4]));
        assert_eq!((s, w), (1, m(&[1, 2, 3, 4])));
    }

    #[test]
    fn wedge_single_transposition() {
        let (s, w) = wedge_monomials(&m(&[2]), &m(&[1]));
        assert_eq!((s, w), (-1, m(&[1, 2])));
    }

    #[test]
    fn wedge_repeated_index_annihilates() {
        let (s, w) = wedge_monomials(&m(&[1, 3]), &m(&[3, 5]));
        assert_eq!((s, w), (0, Monomial::unit()));
    }

    #[test]
    fn wedge_with_unit_is_identity() {
        let x = m(&[2, 5, 7]);
        assert_eq!(wedge_monomials(&x, &Monomial::unit()), (1, x.clone()));
        assert_eq!(wedge_monomials(&Monomial::unit(), &x), (1, x));
    }

    #[test]
    fn weight_and_arity() {
        let x = m(&[1, 4, 6]);
        assert_eq!(x.arity(), 3);
        assert_eq!(x.weight(), 11);
        assert_eq!(x.max_index(), Some(6));
    }
}
