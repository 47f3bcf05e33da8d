use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{wedge_monomials, Monomial};
use super::qpoly::QPolynomial;

/// A finitely supported `Z[q]`-combination of basis monomials: an element of
/// an exterior power (or, with `grade = None`, of the whole exterior algebra).
///
/// The `grade` is advisory bookkeeping: when set, every monomial in the
/// support has that arity. Equality compares the supports only, so the zero
/// element of any grade equals `Element::zero()`.
#[derive(Clone, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, QPolynomial>,
    grade: Option<usize>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The zero element of a known exterior power.
    pub fn zero_graded(grade: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            grade: Some(grade),
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, QPolynomial::one())
    }

    pub fn term(m: Monomial, c: QPolynomial) -> Self {
        let grade = Some(m.arity());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms, grade }
    }

    /// The unit `1` of the degree-0 part.
    pub fn one() -> Self {
        Self::from_monomial(Monomial::unit())
    }

    pub fn grade(&self) -> Option<usize> {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order; coefficients are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QPolynomial)> {
        self.terms.iter()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> QPolynomial {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub(crate) fn add_assign_term(&mut self, m: Monomial, c: &QPolynomial) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        debug_assert!(self.grade.is_none_or(|g| g == m.arity()));
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPolynomial) -> Element {
        if c.is_zero() {
            return Element {
                terms: BTreeMap::new(),
                grade: self.grade,
            };
        }
        self.map_coeffs(|p| p * c)
    }

    pub fn scale_int(&self, c: &BigInt) -> Element {
        if c.is_zero() {
            return Element {
                terms: BTreeMap::new(),
                grade: self.grade,
            };
        }
        self.map_coeffs(|p| p * c)
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QPolynomial) -> QPolynomial) -> Element {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let fc = f(c);
                (!fc.is_zero()).then(|| (m.clone(), fc))
            })
            .collect();
        Element {
            terms,
            grade: self.grade,
        }
    }

    /// The signed bilinear extension of [`wedge_monomials`].
    pub fn wedge(&self, other: &Element) -> Element {
        let grade = match (self.grade, other.grade) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        let mut out = Element {
            terms: BTreeMap::new(),
            grade,
        };
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let (sign, m) = wedge_monomials(ma, mb);
                if sign == 0 {
                    continue;
                }
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                out.add_assign_term(m, &c);
            }
        }
        out
    }

    fn combined_grade(&self, other: &Element) -> Option<usize> {
        match (self.grade, other.grade) {
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(a), None) if other.is_zero() => Some(a),
            (None, Some(b)) if self.is_zero() => Some(b),
            _ => None,
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = Element {
            terms: self.terms.clone(),
            grade: self.combined_grade(rhs),
        };
        for (m, c) in rhs.terms() {
            out.add_assign_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = Element {
            terms: self.terms.clone(),
            grade: self.combined_grade(rhs),
        };
        for (m, c) in rhs.terms() {
            out.add_assign_term(m.clone(), &-c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            grade: self.grade,
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (m, c)) in self.terms().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            if c == &QPolynomial::one() {
                write!(f, "{m}")?;
            } else if c.num_terms() > 1 {
                write!(f, "({c})*{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ix: &[u32]) -> Monomial {
        Monomial::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn wedge_of_basis_vectors() {
        let x = Element::from_monomial(mono(&[1]));
        let y = Element::from_monomial(mono(&[2]));
        assert_eq!(x.wedge(&y), Element::from_monomial(mono(&[1, 2])));
        assert_eq!(x.wedge(&y).grade(), Some(2));
    }

    #[test]
    fn square_of_degree_one_element_vanishes() {
        let x = Element::from_monomial(mono(&[1])) + Element::from_monomial(mono(&[2]));
        assert!(x.wedge(&x).is_zero());
    }

    #[test]
    fn wedge_is_bilinear_over_q() {
        let x = Element::term(mono(&[1]), QPolynomial::q());
        let y = Element::from_monomial(mono(&[3])) - Element::from_monomial(mono(&[4]));
        let got = x.wedge(&y);
        let want = Element::term(mono(&[1, 3]), QPolynomial::q())
            - Element::term(mono(&[1, 4]), QPolynomial::q());
        assert_eq!(got, want);
    }

    #[test]
    fn addition_cancels_to_canonical_zero() {
        let x = Element::from_monomial(mono(&[2, 5]));
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z, Element::zero());
        assert_eq!(z.grade(), Some(2));
    }

    #[test]
    fn unit_is_wedge_identity() {
        let x = Element::from_monomial(mono(&[2, 4]));
        assert_eq!(Element::one().wedge(&x), x);
        assert_eq!(x.wedge(&Element::one()), x);
    }
}
