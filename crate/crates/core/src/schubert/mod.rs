//! The ring layer: Giambelli operator polynomials, Schubert-class products,
//! intersection numbers, and Gromov-Witten numbers.
//!
//! A class `σ_λ` acts through the determinant `Δ_λ(D)` in the generators
//! `D_h` (entry `(a, b)` is `D_{r_b + b - a}` for the weakly increasing
//! rearrangement `r` of `λ`, with `D_0` the identity and negative indices
//! zero). Applying `Δ_λ(D)` to the bottom monomial reproduces the monomial of
//! `λ`, and products of classes are computed by evaluating these operator
//! polynomials in the classical (projected) or quantum action.

mod operator;
mod partition;

pub use operator::OperatorPoly;
pub use partition::Partition;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::derivation::{d_h_element, project_pn, quantum_dh_element, GrassContext};
use crate::multivector::{
    monomial_to_partition, partition_to_monomial, Element, Monomial, QPolynomial,
};
use crate::{Error, Result};

/// How the formal generators act on an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// `D_h` on the full exterior algebra.
    Infinite,
    /// `p_n ∘ D_h`, projecting after every generator application.
    Classical(GrassContext),
    /// The quantum-reduced action, extended `Z[q]`-linearly.
    Quantum(GrassContext),
}

/// Sign convention for quantum structure constants.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    /// The `(-1)^{k-1} q` correction term as written in the operator model.
    Raw,
    /// `q ↦ (-1)^{k-1} q` applied to results, making every structure
    /// constant non-negative.
    #[default]
    Bertram,
}

/// The Giambelli determinant `Δ_λ(D)` of size `k × k`, expanded over
/// permutations. Entries with negative index vanish and index 0 is the
/// identity.
pub fn giambelli_operator(lambda: &Partition, k: usize) -> Result<OperatorPoly> {
    if lambda.len() > k {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            arity: k,
        });
    }
    // weakly increasing rearrangement: r[b] = λ_{k-1-b}
    let entry = |row: usize, col: usize| -> Option<u32> {
        let idx = i64::from(lambda.part(k - 1 - col)) + col as i64 - row as i64;
        u32::try_from(idx).ok()
    };

    let mut out = OperatorPoly::zero();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    let mut gens: Vec<u32> = Vec::with_capacity(k);

    fn expand(
        col: usize,
        k: usize,
        entry: &impl Fn(usize, usize) -> Option<u32>,
        chosen: &mut Vec<usize>,
        used: &mut [bool],
        gens: &mut Vec<u32>,
        out: &mut OperatorPoly,
    ) {
        if col == k {
            let mut sorted = gens.clone();
            sorted.sort_unstable();
            let inversions: usize = chosen
                .iter()
                .enumerate()
                .map(|(c, &r)| chosen[..c].iter().filter(|&&p| p > r).count())
                .sum();
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            out.add_assign_term(sorted, &BigInt::from(sign));
            return;
        }
        for row in 0..k {
            if used[row] {
                continue;
            }
            let Some(idx) = entry(row, col) else {
                continue; // negative index: entry is zero
            };
            used[row] = true;
            chosen.push(row);
            let pushed = idx > 0;
            if pushed {
                gens.push(idx);
            }
            expand(col + 1, k, entry, chosen, used, gens, out);
            if pushed {
                gens.pop();
            }
            chosen.pop();
            used[row] = false;
        }
    }

    expand(0, k, &entry, &mut chosen, &mut used, &mut gens, &mut out);
    Ok(out)
}

/// Evaluates an operator polynomial on `x`, each generator acting per the
/// mode. Generators are applied in stored order; the action ring is
/// commutative so the order does not matter (asserted in tests).
pub fn apply_operator_poly(p: &OperatorPoly, x: &Element, mode: Mode) -> Result<Element> {
    if let Mode::Classical(ctx) | Mode::Quantum(ctx) = mode {
        for (m, _) in x.terms() {
            if m.arity() != ctx.k() {
                return Err(Error::GradeMismatch {
                    expected: ctx.k(),
                    found: Some(m.arity()),
                });
            }
            if let Some(i) = m.max_index() {
                if i > ctx.n() {
                    return Err(Error::IndexOutOfBox {
                        index: i,
                        n: ctx.n(),
                    });
                }
            }
        }
    }

    let mut total = match x.grade() {
        Some(g) => Element::zero_graded(g),
        None => Element::zero(),
    };
    for (gens, coeff) in p.terms() {
        let mut cur = x.clone();
        for &g in gens {
            if cur.is_zero() {
                break;
            }
            cur = match mode {
                Mode::Infinite => d_h_element(g, &cur),
                Mode::Classical(ctx) => project_pn(&ctx, &d_h_element(g, &cur))?,
                Mode::Quantum(ctx) => quantum_dh_element(&ctx, g, &cur)?,
            };
        }
        total = total + cur.scale_int(coeff);
    }
    Ok(total)
}

/// Expands `σ_λ · σ_μ` (or the quantum `σ_λ ∗ σ_μ`) in the class basis:
/// `Δ_μ(D)` is evaluated on the monomial of `λ` and the surviving monomials
/// are read back as partitions.
pub fn schubert_product(
    ctx: &GrassContext,
    lambda: &Partition,
    mu: &Partition,
    quantum: bool,
    convention: Convention,
) -> Result<BTreeMap<Partition, QPolynomial>> {
    for class in [lambda, mu] {
        if !ctx.fits_box(class) {
            return Err(Error::PartitionOutOfBox {
                parts: class.parts().to_vec(),
                rows: ctx.k(),
                cols: ctx.width(),
            });
        }
    }
    let p = giambelli_operator(mu, ctx.k())?;
    let x = Element::from_monomial(partition_to_monomial(lambda, ctx.k())?);
    let mode = if quantum {
        Mode::Quantum(*ctx)
    } else {
        Mode::Classical(*ctx)
    };
    let y = apply_operator_poly(&p, &x, mode)?;

    let flip = quantum && convention == Convention::Bertram && ctx.k().is_multiple_of(2);
    let mut out = BTreeMap::new();
    for (m, c) in y.terms() {
        let coeff = if flip { c.subst_neg_q() } else { c.clone() };
        out.insert(monomial_to_partition(m), coeff);
    }
    Ok(out)
}

/// The coefficient of the point class in the classical product of the given
/// classes: the number of points in the intersection of Schubert varieties
/// in general position. Zero when the degrees do not sum to `k(n-k)` or a
/// class does not fit the box.
pub fn intersection_number(ctx: &GrassContext, classes: &[Partition]) -> BigInt {
    let codim: u64 = classes.iter().map(|p| p.size()).sum();
    if codim != u64::from(ctx.width()) * ctx.k() as u64 {
        return BigInt::zero();
    }
    if classes.iter().any(|p| !ctx.fits_box(p)) {
        return BigInt::zero();
    }
    let mut cur = Element::from_monomial(ctx.bottom());
    for class in classes {
        let p = giambelli_operator(class, ctx.k()).expect("class fits the box");
        cur = apply_operator_poly(&p, &cur, Mode::Classical(*ctx)).expect("bottom stays in box");
        if cur.is_zero() {
            return BigInt::zero();
        }
    }
    cur.coeff(&ctx.top()).at_q_zero()
}

/// The degree-`d` Gromov-Witten number `⟨σ_{λ1}, …, σ_{λm}⟩_d`: the `q^d`
/// coefficient on the point class after quantum-mode application (Bertram
/// convention). Zero when the degrees do not sum to `k(n-k) + d·n` or a
/// class does not fit the box.
pub fn gw_number(ctx: &GrassContext, classes: &[Partition], d: u32) -> BigInt {
    let codim: u64 = classes.iter().map(|p| p.size()).sum();
    let expected = u64::from(ctx.width()) * ctx.k() as u64 + u64::from(d) * u64::from(ctx.n());
    if codim != expected {
        return BigInt::zero();
    }
    if classes.iter().any(|p| !ctx.fits_box(p)) {
        return BigInt::zero();
    }
    let mut cur = Element::from_monomial(ctx.bottom());
    for class in classes {
        let p = giambelli_operator(class, ctx.k()).expect("class fits the box");
        cur = apply_operator_poly(&p, &cur, Mode::Quantum(*ctx)).expect("bottom stays in box");
        if cur.is_zero() {
            return BigInt::zero();
        }
    }
    let coeff = cur.coeff(&ctx.top());
    let coeff = if ctx.k().is_multiple_of(2) {
        coeff.subst_neg_q()
    } else {
        coeff
    };
    coeff.coeff(d)
}

/// The operator polynomial reproducing `m` from the bottom monomial of its
/// arity: `m = G(D) · e^1 ∧ … ∧ e^k`.
pub fn giambelli_solve(m: &Monomial) -> OperatorPoly {
    giambelli_operator(&monomial_to_partition(m), m.arity())
        .expect("the partition of a monomial has at most arity-many parts")
}

/// The 180°-rotated complement of `λ` in the `k × (n-k)` box; pairing a class
/// with its complement gives intersection number one.
pub fn complement(ctx: &GrassContext, lambda: &Partition) -> Result<Partition> {
    if !ctx.fits_box(lambda) {
        return Err(Error::PartitionOutOfBox {
            parts: lambda.parts().to_vec(),
            rows: ctx.k(),
            cols: ctx.width(),
        });
    }
    let k = ctx.k();
    let parts = (0..k)
        .map(|j| ctx.width() - lambda.part(k - 1 - j))
        .collect();
    Ok(Partition::from_weakly_decreasing_unchecked(parts))
}

/// Every partition fitting the `k × (n-k)` box, in ascending lexicographic
/// order of the part list.
pub fn box_partitions(ctx: &GrassContext) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(cur: &mut Vec<u32>, rows_left: usize, max_part: u32, out: &mut Vec<Partition>) {
        out.push(Partition::from_weakly_decreasing_unchecked(cur.clone()));
        if rows_left == 0 {
            return;
        }
        for p in 1..=max_part {
            cur.push(p);
            rec(cur, rows_left - 1, p, out);
            cur.pop();
        }
    }
    rec(&mut cur, ctx.k(), ctx.width(), &mut out);
    out.sort();
    out.dedup();
    out
}
