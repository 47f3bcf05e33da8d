use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// A polynomial in the indeterminate `q` with arbitrary-precision integer
/// coefficients, stored sparsely by q-degree. No zero coefficient is ever
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(0, c)
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        Self::term(1, 1)
    }

    /// The monomial `c * q^qdeg`.
    pub fn term(qdeg: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(qdeg, c);
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^qdeg` (zero when absent).
    pub fn coeff(&self, qdeg: u32) -> BigInt {
        self.coeffs.get(&qdeg).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at `q = 0`.
    pub fn at_q_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Highest q-degree with a nonzero coefficient.
    pub fn qdegree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.qdegree().is_none_or(|d| d == 0)
    }

    /// Nonzero terms in ascending q-degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The substitution `q ↦ -q`: negates every odd-degree coefficient.
    pub fn subst_neg_q(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&d, c)| (d, if d % 2 == 1 { -c } else { c.clone() }))
            .collect();
        Self { coeffs }
    }

    pub(crate) fn add_term(&mut self, qdeg: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(qdeg).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&qdeg);
        }
    }
}

impl From<i64> for QPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.iter() {
            out.add_term(d, c);
        }
        out
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (d, c) in rhs.iter() {
            out.add_term(d, &(-c));
        }
        out
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (da, ca) in self.iter() {
            for (db, cb) in rhs.iter() {
                out.add_term(da + db, &(ca * cb));
            }
        }
        out
    }
}

impl Mul<&BigInt> for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &BigInt) -> QPolynomial {
        if rhs.is_zero() {
            return QPolynomial::zero();
        }
        let coeffs = self.coeffs.iter().map(|(&d, c)| (d, c * rhs)).collect();
        QPolynomial { coeffs }
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        let coeffs = self.coeffs.iter().map(|(&d, c)| (d, -c)).collect();
        QPolynomial { coeffs }
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl Neg for QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        -&self
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (d, c)) in self.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
