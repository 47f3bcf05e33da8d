//! The Schubert derivation: degree-raising operators `D_h` acting on the
//! exterior algebra by a restricted composition sum, their finite-rank
//! projection `p_n`, and the quantum-reduced action on `∧^k M_n[q]`.
//!
//! `D_h` sends a basis monomial with indices `I = (i1 < … < ik)` to the sum
//! of the monomials `e^{i1+h1} ∧ … ∧ e^{ik+hk}` over the compositions
//! `h1 + … + hk = h` that keep the shifted sequence interleaved with the
//! original one (`i1 ≤ i1+h1 < i2 ≤ i2+h2 < … < ik`; the last shift is
//! unconstrained above). Every surviving monomial is already strictly
//! increasing, so no signs appear. Only admissible compositions are
//! enumerated; the unrestricted expansion lives in [`crate::oracle`] as the
//! reference implementation.

use crate::multivector::{Element, Monomial, QPolynomial};
use crate::schubert::Partition;
use crate::{Error, Result};

/// The pair `(k, n)` fixing a Grassmannian of `k`-planes in `n`-space:
/// monomials live in `∧^k M_n`, partitions in the `k × (n-k)` box.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GrassContext {
    k: usize,
    n: u32,
}

impl GrassContext {
    pub fn new(k: usize, n: u32) -> Result<Self> {
        if k >= 1 && (k as u32) <= n {
            Ok(Self { k, n })
        } else {
            Err(Error::InvalidContext { k, n })
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Width `n - k` of the partition box.
    pub fn width(&self) -> u32 {
        self.n - self.k as u32
    }

    /// The monomial `(1, 2, …, k)` of the identity class.
    pub fn bottom(&self) -> Monomial {
        Monomial::from_sorted_unchecked((1..=self.k as u32).collect())
    }

    /// The monomial `(n-k+1, …, n)` of the point class.
    pub fn top(&self) -> Monomial {
        Monomial::from_sorted_unchecked((self.width() + 1..=self.n).collect())
    }

    /// True when `m` is a basis monomial of `∧^k M_n`.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        m.arity() == self.k && m.max_index().is_none_or(|i| i <= self.n)
    }

    pub fn fits_box(&self, lambda: &Partition) -> bool {
        lambda.fits_box(self.k, self.width())
    }
}

/// Calls `f` with each admissible shifted index sequence
/// `(i1+h1, …, ik+hk)`, in lexicographic order of the composition.
fn for_each_admissible_shift(h: u32, indices: &[u32], f: &mut impl FnMut(&[u32])) {
    let k = indices.len();
    if k == 0 {
        if h == 0 {
            f(&[]);
        }
        return;
    }
    let mut shifted = vec![0u32; k];

    fn rec(
        j: usize,
        remaining: u32,
        indices: &[u32],
        shifted: &mut [u32],
        f: &mut impl FnMut(&[u32]),
    ) {
        let k = indices.len();
        if j == k - 1 {
            // the last shift is unconstrained above
            shifted[j] = indices[j] + remaining;
            f(shifted);
            return;
        }
        // keep i_j + h_j < i_{j+1}
        let cap = indices[j + 1] - indices[j] - 1;
        for hj in 0..=cap.min(remaining) {
            shifted[j] = indices[j] + hj;
            rec(j + 1, remaining - hj, indices, shifted, f);
        }
    }

    rec(0, h, indices, &mut shifted, f);
}

/// `D_h` on a basis monomial: the multiplicity-free sum over admissible
/// compositions. `D_0` is the identity.
pub fn d_h_pieri(h: u32, m: &Monomial) -> Element {
    let mut out = Element::zero_graded(m.arity());
    let one = QPolynomial::one();
    for_each_admissible_shift(h, m.indices(), &mut |shifted| {
        out.add_assign_term(Monomial::from_sorted_unchecked(shifted.to_vec()), &one);
    });
    out
}

/// Coefficient-wise linear extension of [`d_h_pieri`].
pub fn d_h_element(h: u32, x: &Element) -> Element {
    let mut out = match x.grade() {
        Some(g) => Element::zero_graded(g),
        None => Element::zero(),
    };
    for (m, c) in x.terms() {
        for_each_admissible_shift(h, m.indices(), &mut |shifted| {
            out.add_assign_term(Monomial::from_sorted_unchecked(shifted.to_vec()), c);
        });
    }
    out
}

/// The truncated generating series: `[D_0 x, D_1 x, …, D_order x]`.
pub fn d_t_truncated(order: u32, x: &Element) -> Vec<Element> {
    (0..=order).map(|h| d_h_element(h, x)).collect()
}

/// Projection onto `∧^k M_n`: drops every monomial whose largest index
/// exceeds `n`. Errors when the input is not of grade `k`.
pub fn project_pn(ctx: &GrassContext, x: &Element) -> Result<Element> {
    check_grade(ctx, x)?;
    let mut out = Element::zero_graded(ctx.k);
    for (m, c) in x.terms() {
        if m.max_index().is_none_or(|i| i <= ctx.n) {
            out.add_assign_term(m.clone(), c);
        }
    }
    Ok(out)
}

fn check_grade(ctx: &GrassContext, x: &Element) -> Result<()> {
    if let Some(g) = x.grade() {
        if g != ctx.k {
            return Err(Error::GradeMismatch {
                expected: ctx.k,
                found: Some(g),
            });
        }
    }
    for (m, _) in x.terms() {
        if m.arity() != ctx.k {
            return Err(Error::GradeMismatch {
                expected: ctx.k,
                found: Some(m.arity()),
            });
        }
    }
    Ok(())
}

fn check_in_box(ctx: &GrassContext, m: &Monomial) -> Result<()> {
    if m.arity() != ctx.k {
        return Err(Error::GradeMismatch {
            expected: ctx.k,
            found: Some(m.arity()),
        });
    }
    if let Some(i) = m.max_index() {
        if i > ctx.n {
            return Err(Error::IndexOutOfBox { index: i, n: ctx.n });
        }
    }
    Ok(())
}

/// The quantum-reduced action of `D_h` on a basis monomial of `∧^k M_n`:
///
/// `p_n(D_h m) + (-1)^{k-1} q · Σ e^{ik+hk-n} ∧ e^{i1+h1} ∧ … ∧ e^{i(k-1)+h(k-1)}`
///
/// where the quantum sum runs over the admissible compositions whose last
/// index overflows (`ik + hk > n`) and whose residue passes the gate
/// `ik + hk - n < i1`. Residues then land in `[1, n-1]` and below every other
/// index, so the written cyclic order is already increasing and the only sign
/// is the printed `(-1)^{k-1}`. Defined for `0 ≤ h ≤ n` only.
pub fn quantum_dh(ctx: &GrassContext, h: u32, m: &Monomial) -> Result<Element> {
    check_in_box(ctx, m)?;
    if h > ctx.n {
        return Err(Error::DegreeAboveRank { h, n: ctx.n });
    }
    let k = ctx.k;
    let first = m.indices()[0];
    let quantum_coeff = if k % 2 == 1 {
        QPolynomial::q()
    } else {
        -QPolynomial::q()
    };
    let one = QPolynomial::one();
    let mut out = Element::zero_graded(k);
    for_each_admissible_shift(h, m.indices(), &mut |shifted| {
        let last = shifted[k - 1];
        if last <= ctx.n {
            out.add_assign_term(Monomial::from_sorted_unchecked(shifted.to_vec()), &one);
        } else {
            let residue = last - ctx.n;
            if residue < first {
                let mut cycled = Vec::with_capacity(k);
                cycled.push(residue);
                cycled.extend_from_slice(&shifted[..k - 1]);
                out.add_assign_term(Monomial::from_sorted_unchecked(cycled), &quantum_coeff);
            }
        }
    });
    Ok(out)
}

/// `Z[q]`-linear extension of [`quantum_dh`].
pub fn quantum_dh_element(ctx: &GrassContext, h: u32, x: &Element) -> Result<Element> {
    let mut out = Element::zero_graded(ctx.k);
    for (m, c) in x.terms() {
        let dm = quantum_dh(ctx, h, m)?;
        out = out + dm.scale(c);
    }
    Ok(out)
}

/// `D_h` computed by freezing the maximal initial run of consecutive indices:
/// for `m = (s, s+1, …, s+j, i_{j+2}, …)` the first `j` indices pass through
/// untouched and `D_h` acts on the suffix starting at `e^{s+j}`. Equal to
/// [`d_h_pieri`] on every input.
pub fn factor_prefix(h: u32, m: &Monomial) -> Element {
    let ix = m.indices();
    let k = ix.len();
    if k <= 1 {
        return d_h_pieri(h, m);
    }
    let mut run = 1;
    while run < k && ix[run] == ix[0] + run as u32 {
        run += 1;
    }
    let prefix = Monomial::from_sorted_unchecked(ix[..run - 1].to_vec());
    let suffix = Monomial::from_sorted_unchecked(ix[run - 1..].to_vec());
    Element::from_monomial(prefix).wedge(&d_h_pieri(h, &suffix))
}
