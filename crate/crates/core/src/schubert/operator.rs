use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An integer polynomial in the commuting formal generators `D1, D2, …`.
/// Each monomial is a sorted multiset of positive generator indices; the
/// empty multiset is the identity (and stands in for `D0`).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OperatorPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), BigInt::one());
        Self { terms }
    }

    /// The generator `D_h`; `D_0` is the identity.
    pub fn generator(h: u32) -> Self {
        if h == 0 {
            return Self::identity();
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![h], BigInt::one());
        Self { terms }
    }

    /// A single monomial `c · D_{g1} ⋯ D_{gm}`; indices are sorted and zero
    /// indices (identity factors) dropped.
    pub fn term(gens: Vec<u32>, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut out = Self::zero();
        if !c.is_zero() {
            let mut gens: Vec<u32> = gens.into_iter().filter(|&g| g > 0).collect();
            gens.sort_unstable();
            out.terms.insert(gens, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending lexicographic order of the generator multiset.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(g, c)| (g.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, gens: &[u32]) -> BigInt {
        self.terms.get(gens).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add_assign_term(&mut self, gens: Vec<u32>, c: &BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        debug_assert!(gens.windows(2).all(|w| w[0] <= w[1]));
        match self.terms.entry(gens) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl Add<&OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (g, c) in rhs.terms() {
            out.add_assign_term(g.to_vec(), c);
        }
        out
    }
}

impl Sub<&OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (g, c) in rhs.terms() {
            out.add_assign_term(g.to_vec(), &(-c));
        }
        out
    }
}

impl Mul<&OperatorPoly> for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (ga, ca) in self.terms() {
            for (gb, cb) in rhs.terms() {
                let mut gens = Vec::with_capacity(ga.len() + gb.len());
                gens.extend_from_slice(ga);
                gens.extend_from_slice(gb);
                gens.sort_unstable();
                out.add_assign_term(gens, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Add for OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: OperatorPoly) -> OperatorPoly {
        &self + &rhs
    }
}

impl Sub for OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: OperatorPoly) -> OperatorPoly {
        &self - &rhs
    }
}

impl Mul for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: OperatorPoly) -> OperatorPoly {
        &self * &rhs
    }
}

impl Neg for OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        -&self
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (gens, c)) in self.terms().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            if gens.is_empty() {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                for (u, g) in gens.iter().enumerate() {
                    if u > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "D{g}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
