//! Oracle-equivalence sweeps behind `grasscal verify`. Each suite runs the
//! production path against an independent reference over an exhaustive small
//! range and reports the first counterexample on failure.

use num_bigint::BigInt;
use num_traits::Zero;

use grasscal::derivation::{d_h_pieri, GrassContext};
use grasscal::multivector::{partition_to_monomial, Element, Monomial, QPolynomial};
use grasscal::oracle::{d_h_leibniz, lr_coefficient};
use grasscal::schubert::{
    apply_operator_poly, box_partitions, complement, giambelli_operator, intersection_number,
    schubert_product, Convention, Mode, Partition,
};

use crate::args::VerifySuite;
use crate::CliError;

pub fn run_verify(suite: &VerifySuite) -> Result<(bool, String), CliError> {
    match *suite {
        VerifySuite::PieriVsLeibniz {
            max_k,
            max_index,
            max_h,
        } => Ok(pieri_vs_leibniz(max_k, max_index, max_h)),
        VerifySuite::Giambelli { max_part, k } => Ok(giambelli(max_part, k)),
        VerifySuite::Duality { k, n } => {
            let ctx = GrassContext::new(k, n)?;
            Ok(duality(&ctx))
        }
        VerifySuite::Lr { k, n } => {
            let ctx = GrassContext::new(k, n)?;
            Ok(lr(&ctx))
        }
    }
}

/// All monomials with arity <= max_k and indices <= max_index.
fn monomials_up_to(max_k: usize, max_index: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        out.push(Monomial::new(prefix.clone()).expect("prefixes are strictly increasing"));
        if prefix.len() == max_k {
            continue;
        }
        let next = prefix.last().map_or(1, |&i| i + 1);
        for i in next..=max_index {
            let mut ext = prefix.clone();
            ext.push(i);
            stack.push(ext);
        }
    }
    out
}

/// All partitions with at most max_len parts, each at most max_part.
fn partitions_bounded(max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(cur: &mut Vec<u32>, left: usize, cap: u32, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("built weakly decreasing"));
        if left == 0 {
            return;
        }
        for p in 1..=cap {
            cur.push(p);
            rec(cur, left - 1, p, out);
            cur.pop();
        }
    }
    rec(&mut cur, max_len, max_part, &mut out);
    out
}

/// All partitions of exactly `total` with at most `max_len` parts.
fn partitions_of(total: u64, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(cur: &mut Vec<u32>, remaining: u64, cap: u64, left: usize, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(cur.clone()).expect("built weakly decreasing"));
            return;
        }
        if left == 0 {
            return;
        }
        let hi = cap.min(remaining);
        for p in (1..=hi).rev() {
            cur.push(p as u32);
            rec(cur, remaining - p, p, left - 1, out);
            cur.pop();
        }
    }
    rec(&mut cur, total, total.max(1), max_len, &mut out);
    out
}

fn pieri_vs_leibniz(max_k: usize, max_index: u32, max_h: u32) -> (bool, String) {
    let mut cases = 0usize;
    for m in monomials_up_to(max_k, max_index) {
        for h in 0..=max_h {
            let fast = d_h_pieri(h, &m);
            let slow = d_h_leibniz(h, &m);
            cases += 1;
            if fast != slow {
                return (
                    false,
                    format!(
                        "pieri-vs-leibniz: FAIL at h={h}, m={m}\n  pieri:   {fast}\n  leibniz: {slow}"
                    ),
                );
            }
        }
    }
    (true, format!("pieri-vs-leibniz: PASS ({cases} cases)"))
}

fn giambelli(max_part: u32, k: usize) -> (bool, String) {
    let bottom = Element::from_monomial(
        partition_to_monomial(&Partition::empty(), k).expect("empty partition fits"),
    );
    let mut cases = 0usize;
    for lambda in partitions_bounded(max_part, k) {
        let op = giambelli_operator(&lambda, k).expect("at most k parts by construction");
        let got = apply_operator_poly(&op, &bottom, Mode::Infinite)
            .expect("infinite mode has no preconditions");
        let want = Element::from_monomial(
            partition_to_monomial(&lambda, k).expect("at most k parts by construction"),
        );
        cases += 1;
        if got != want {
            return (
                false,
                format!("giambelli: FAIL at lambda={lambda}\n  got:  {got}\n  want: {want}"),
            );
        }
    }
    (true, format!("giambelli: PASS ({cases} partitions)"))
}

fn duality(ctx: &GrassContext) -> (bool, String) {
    let all = box_partitions(ctx);
    let full = u64::from(ctx.width()) * ctx.k() as u64;
    let mut cases = 0usize;
    for lambda in &all {
        let dual = complement(ctx, lambda).expect("box partitions have complements");
        for mu in &all {
            if lambda.size() + mu.size() != full {
                continue;
            }
            let want = if *mu == dual {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
            let got = intersection_number(ctx, &[lambda.clone(), mu.clone()]);
            cases += 1;
            if got != want {
                return (
                    false,
                    format!("duality: FAIL at lambda={lambda}, mu={mu}: got {got}, want {want}"),
                );
            }
        }
    }
    (true, format!("duality: PASS ({cases} pairs)"))
}

/// Classical structure constants against the Littlewood-Richardson rule.
/// In-box targets must match the rule; targets outside the box must be
/// exactly the ones the projection kills, with the unprojected action still
/// matching the rule there.
fn lr(ctx: &GrassContext) -> (bool, String) {
    let all = box_partitions(ctx);
    let k = ctx.k();
    let mut pairs = 0usize;
    let mut coefficients = 0usize;
    for lambda in &all {
        let x =
            Element::from_monomial(partition_to_monomial(lambda, k).expect("box partition fits"));
        for mu in &all {
            let op = giambelli_operator(mu, k).expect("box partition fits");
            let unprojected = apply_operator_poly(&op, &x, Mode::Infinite)
                .expect("infinite mode has no preconditions");
            let classical = schubert_product(ctx, lambda, mu, false, Convention::Raw)
                .expect("box partitions multiply");
            pairs += 1;
            for nu in partitions_of(lambda.size() + mu.size(), k) {
                let rule = QPolynomial::constant(BigInt::from(lr_coefficient(lambda, mu, &nu)));
                let target = partition_to_monomial(&nu, k).expect("at most k parts");
                let raw_coeff = unprojected.coeff(&target);
                coefficients += 1;
                if raw_coeff != rule {
                    return (
                        false,
                        format!(
                            "lr: FAIL at {lambda} * {mu} -> {nu}: operator model {raw_coeff:?}, rule {rule:?}"
                        ),
                    );
                }
                let boxed = classical.get(&nu).cloned().unwrap_or_default();
                let want_boxed = if ctx.fits_box(&nu) {
                    rule
                } else {
                    QPolynomial::zero()
                };
                if boxed != want_boxed {
                    return (
                        false,
                        format!(
                            "lr: FAIL at {lambda} * {mu} -> {nu}: projected {boxed:?}, want {want_boxed:?}"
                        ),
                    );
                }
            }
        }
    }
    (
        true,
        format!("lr: PASS ({pairs} pairs, {coefficients} coefficients)"),
    )
}
