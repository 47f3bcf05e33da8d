//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test -p grasscal-cli --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use grasscal::derivation::{d_h_element, d_h_pieri, project_pn, quantum_dh, GrassContext};
use grasscal::multivector::{partition_to_monomial, Element, Monomial, QPolynomial};
use grasscal::oracle::{d_h_leibniz, lr_coefficient, syt_rectangle_count};
use grasscal::schubert::{
    apply_operator_poly, box_partitions, giambelli_operator, giambelli_solve, gw_number,
    intersection_number, schubert_product, Convention, Mode, OperatorPoly, Partition,
};

fn mono(ix: &[u32]) -> Monomial {
    Monomial::new(ix.to_vec()).unwrap()
}

fn part(ps: &[u32]) -> Partition {
    Partition::new(ps.to_vec()).unwrap()
}

fn elem(monomials: &[&[u32]]) -> Element {
    monomials.iter().fold(Element::zero(), |acc, ix| {
        acc + Element::from_monomial(mono(ix))
    })
}

/// All monomials with arity <= max_k and indices <= max_index.
fn monomials_up_to(max_k: usize, max_index: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        out.push(Monomial::new(prefix.clone()).unwrap());
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

/// All monomials of exactly arity k with indices <= max_index.
fn monomials_of_arity(k: usize, max_index: u32) -> Vec<Monomial> {
    monomials_up_to(k, max_index)
        .into_iter()
        .filter(|m| m.arity() == k)
        .collect()
}

/// All partitions with at most max_len parts, each at most max_part.
fn partitions_bounded(max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(cur: &mut Vec<u32>, left: usize, cap: u32, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
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
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        if left == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p as u32);
            rec(cur, remaining - p, p, left - 1, out);
            cur.pop();
        }
    }
    rec(&mut cur, total, total.max(1), max_len, &mut out);
    out
}

fn random_monomial(rng: &mut ChaCha8Rng, max_index: u32, arity: usize) -> Monomial {
    let mut picked: Vec<u32> = rand::seq::index::sample(rng, max_index as usize, arity)
        .into_iter()
        .map(|i| i as u32 + 1)
        .collect();
    picked.sort_unstable();
    Monomial::new(picked).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, max_index: u32, max_arity: usize) -> Element {
    let arity = rng.random_range(0..=max_arity);
    let terms = rng.random_range(1..=3);
    let mut out = Element::zero_graded(arity);
    for _ in 0..terms {
        let c = rng.random_range(-4i64..=4);
        out = out
            + Element::term(
                random_monomial(rng, max_index, arity),
                QPolynomial::constant(c),
            );
    }
    out
}

/// Criterion 1: the four-lines count through the CLI, plus the displayed
/// iteration chain of D_1 on e1^e2, within 1 ms.
#[test]
fn criterion_1_four_lines_count() {
    let output = Command::new(env!("CARGO_BIN_EXE_grasscal"))
        .args(["intersect", "--k", "2", "--n", "4", "--classes", "1;1;1;1"])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim(), "2");

    let ctx = GrassContext::new(2, 4).unwrap();
    let chain = [
        elem(&[&[1, 3]]),
        elem(&[&[2, 3], &[1, 4]]),
        elem(&[&[2, 4]]).scale(&QPolynomial::constant(2)),
        elem(&[&[3, 4]]).scale(&QPolynomial::constant(2)),
    ];
    let mut x = Element::from_monomial(mono(&[1, 2]));
    for expected in &chain {
        x = project_pn(&ctx, &d_h_element(1, &x)).unwrap();
        assert_eq!(&x, expected, "iteration chain mismatch");
    }

    let classes = vec![part(&[1]); 4];
    assert_eq!(intersection_number(&ctx, &classes), BigInt::from(2));
    let reps = 10u32;
    let start = Instant::now();
    for _ in 0..reps {
        assert_eq!(intersection_number(&ctx, &classes), BigInt::from(2));
    }
    let avg = start.elapsed() / reps;
    assert!(
        avg < Duration::from_millis(1),
        "took {avg:?} per evaluation"
    );

    println!("ACCEPTANCE 1 four-lines count: PASS");
}

/// Criterion 2: the operator polynomial of e2^e5 and its application to the
/// bottom monomial, within 1 ms.
#[test]
fn criterion_2_closing_example() {
    let want_op = OperatorPoly::term(vec![1, 3], 1) - OperatorPoly::generator(4);
    let bottom = Element::from_monomial(mono(&[1, 2]));
    let want_elem = Element::from_monomial(mono(&[2, 5]));

    let g = giambelli_solve(&mono(&[2, 5]));
    assert_eq!(g, want_op);
    assert_eq!(
        apply_operator_poly(&g, &bottom, Mode::Infinite).unwrap(),
        want_elem
    );

    let reps = 10u32;
    let start = Instant::now();
    for _ in 0..reps {
        let g = giambelli_solve(&mono(&[2, 5]));
        let y = apply_operator_poly(&g, &bottom, Mode::Infinite).unwrap();
        assert_eq!(y, want_elem);
    }
    let avg = start.elapsed() / reps;
    assert!(
        avg < Duration::from_millis(1),
        "took {avg:?} per evaluation"
    );

    println!("ACCEPTANCE 2 closing example: PASS");
}

/// Criterion 3: restricted vs unrestricted expansion on every monomial with
/// k <= 4, indices <= 10, h <= 6, within 60 s.
#[test]
fn criterion_3_pieri_oracle_sweep() {
    let start = Instant::now();
    let mut cases = 0usize;
    for m in monomials_up_to(4, 10) {
        for h in 0..=6 {
            assert_eq!(d_h_pieri(h, &m), d_h_leibniz(h, &m), "h={h}, m={m}");
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(cases, 2702);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");

    println!("ACCEPTANCE 3 Pieri-vs-Leibniz sweep: PASS ({cases} cases in {elapsed:?})");
}

/// Criterion 4: 1000 randomized h-th order Leibniz cases and 200 randomized
/// commutation cases pass exactly.
#[test]
fn criterion_4_hs_axiom_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    for _ in 0..1000 {
        let alpha = random_element(&mut rng, 8, 3);
        let beta = random_element(&mut rng, 8, 3);
        let h = rng.random_range(0..=5u32);
        let lhs = d_h_element(h, &alpha.wedge(&beta));
        let rhs = (0..=h).fold(Element::zero(), |acc, h1| {
            acc + d_h_element(h1, &alpha).wedge(&d_h_element(h - h1, &beta))
        });
        assert_eq!(lhs, rhs, "Leibniz rule failed at h={h}");
    }

    for _ in 0..200 {
        let x = random_element(&mut rng, 8, 3);
        let i = rng.random_range(0..=5u32);
        let j = rng.random_range(0..=5u32);
        assert_eq!(
            d_h_element(i, &d_h_element(j, &x)),
            d_h_element(j, &d_h_element(i, &x)),
            "commutation failed at i={i}, j={j}"
        );
    }

    println!("ACCEPTANCE 4 h-th order Leibniz + commutation: PASS (1000 + 200 cases)");
}

/// Criterion 5: the determinant reconstructs every partition with <= 4 parts,
/// each <= 5, from the bottom monomial.
#[test]
fn criterion_5_giambelli_reconstruction() {
    let k = 4;
    let bottom = Element::from_monomial(mono(&[1, 2, 3, 4]));
    let all = partitions_bounded(5, k);
    assert!(all.len() >= 125, "got {}", all.len());
    for lambda in &all {
        let op = giambelli_operator(lambda, k).unwrap();
        let got = apply_operator_poly(&op, &bottom, Mode::Infinite).unwrap();
        let want = Element::from_monomial(partition_to_monomial(lambda, k).unwrap());
        assert_eq!(got, want, "lambda={lambda}");
    }

    println!(
        "ACCEPTANCE 5 Giambelli reconstruction: PASS ({} partitions)",
        all.len()
    );
}

/// Criterion 6: every classical structure constant of G_2(C^5) and G_3(C^6)
/// matches the Littlewood-Richardson rule; coefficients outside the box are
/// exactly the projection-killed ones. Within 120 s.
#[test]
fn criterion_6_classical_ring_vs_lr_oracle() {
    let start = Instant::now();
    let mut coefficients = 0usize;
    for (k, n) in [(2usize, 5u32), (3, 6)] {
        let ctx = GrassContext::new(k, n).unwrap();
        let all = box_partitions(&ctx);
        for lambda in &all {
            let x = Element::from_monomial(partition_to_monomial(lambda, k).unwrap());
            for mu in &all {
                let op = giambelli_operator(mu, k).unwrap();
                let unprojected = apply_operator_poly(&op, &x, Mode::Infinite).unwrap();
                let classical = schubert_product(&ctx, lambda, mu, false, Convention::Raw).unwrap();
                let mut support = 0usize;
                for nu in partitions_of(lambda.size() + mu.size(), k) {
                    let rule = QPolynomial::constant(BigInt::from(lr_coefficient(lambda, mu, &nu)));
                    let target = partition_to_monomial(&nu, k).unwrap();
                    assert_eq!(
                        unprojected.coeff(&target),
                        rule,
                        "unprojected {lambda} * {mu} at {nu}"
                    );
                    let boxed = classical.get(&nu).cloned().unwrap_or_default();
                    let want = if ctx.fits_box(&nu) {
                        rule
                    } else {
                        QPolynomial::zero()
                    };
                    assert_eq!(boxed, want, "projected {lambda} * {mu} at {nu}");
                    if !boxed.is_zero() {
                        support += 1;
                    }
                    coefficients += 1;
                }
                // the product has no terms beyond the enumerated targets
                assert_eq!(classical.values().filter(|c| !c.is_zero()).count(), support);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");

    println!("ACCEPTANCE 6 classical ring vs LR oracle: PASS ({coefficients} coefficients in {elapsed:?})");
}

type ClassMap = BTreeMap<Partition, QPolynomial>;

fn star_right(ctx: &GrassContext, map: &ClassMap, rho: &Partition) -> ClassMap {
    let mut out: ClassMap = BTreeMap::new();
    for (nu, c) in map {
        let prod = schubert_product(ctx, nu, rho, true, Convention::Bertram).unwrap();
        for (tau, d) in prod {
            let entry = out.entry(tau).or_default();
            *entry = &*entry + &(c * &d);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn star_left(ctx: &GrassContext, lambda: &Partition, map: &ClassMap) -> ClassMap {
    let mut out: ClassMap = BTreeMap::new();
    for (nu, c) in map {
        let prod = schubert_product(ctx, lambda, nu, true, Convention::Bertram).unwrap();
        for (tau, d) in prod {
            let entry = out.entry(tau).or_default();
            *entry = &*entry + &(c * &d);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Criterion 7: quantum checks — q = 0 degeneration, the hand-derived
/// products, associativity on random triples, and non-negativity in the
/// Bertram convention.
#[test]
fn criterion_7_quantum_checks() {
    // (a) q = 0 degeneration equals the classical product on all G_2(C^4) pairs
    let ctx24 = GrassContext::new(2, 4).unwrap();
    let box24 = box_partitions(&ctx24);
    for lambda in &box24 {
        for mu in &box24 {
            let quantum = schubert_product(&ctx24, lambda, mu, true, Convention::Bertram).unwrap();
            let classical =
                schubert_product(&ctx24, lambda, mu, false, Convention::Bertram).unwrap();
            let mut at_q0: ClassMap = BTreeMap::new();
            for (nu, c) in &quantum {
                let c0 = c.at_q_zero();
                if !c0.is_zero() {
                    at_q0.insert(nu.clone(), QPolynomial::constant(c0));
                }
            }
            assert_eq!(at_q0, classical, "q=0 degeneration at {lambda} * {mu}");
        }
    }

    // (b) hand-derived quantum products in the Bertram convention
    let cases: [(&[u32], &[u32], ClassMap); 3] = [
        (&[2], &[1, 1], {
            let mut m = BTreeMap::new();
            m.insert(Partition::empty(), QPolynomial::q());
            m
        }),
        (&[2], &[2, 2], {
            let mut m = BTreeMap::new();
            m.insert(part(&[1, 1]), QPolynomial::q());
            m
        }),
        (&[1], &[2, 1], {
            let mut m = BTreeMap::new();
            m.insert(part(&[2, 2]), QPolynomial::one());
            m.insert(Partition::empty(), QPolynomial::q());
            m
        }),
    ];
    for (lhs, rhs, want) in &cases {
        let got =
            schubert_product(&ctx24, &part(lhs), &part(rhs), true, Convention::Bertram).unwrap();
        assert_eq!(&got, want, "sigma{lhs:?} * sigma{rhs:?}");
    }

    // (c) associativity on 50 random triples in G_2(C^4) and G_2(C^5)
    let mut rng = ChaCha8Rng::seed_from_u64(0xa550c);
    for (k, n) in [(2usize, 4u32), (2, 5)] {
        let ctx = GrassContext::new(k, n).unwrap();
        let all = box_partitions(&ctx);
        for _ in 0..50 {
            let pick = |rng: &mut ChaCha8Rng| all[rng.random_range(0..all.len())].clone();
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let ab = schubert_product(&ctx, &a, &b, true, Convention::Bertram).unwrap();
            let bc = schubert_product(&ctx, &b, &c, true, Convention::Bertram).unwrap();
            assert_eq!(
                star_right(&ctx, &ab, &c),
                star_left(&ctx, &a, &bc),
                "associativity at {a}, {b}, {c} in G_{k}(C^{n})"
            );
        }
    }

    // (d) non-negative structure constants across three boxes
    for (k, n) in [(2usize, 4u32), (2, 5), (3, 6)] {
        let ctx = GrassContext::new(k, n).unwrap();
        let all = box_partitions(&ctx);
        for lambda in &all {
            for mu in &all {
                let prod = schubert_product(&ctx, lambda, mu, true, Convention::Bertram).unwrap();
                for (nu, c) in &prod {
                    for (d, coeff) in c.iter() {
                        assert_ne!(
                            coeff.sign(),
                            Sign::Minus,
                            "negative q^{d} coefficient at {lambda} * {mu} -> {nu} in G_{k}(C^{n})"
                        );
                    }
                }
            }
        }
    }

    println!(
        "ACCEPTANCE 7 quantum checks: PASS (degeneration, hand values, associativity, positivity)"
    );
}

/// Criterion 8: powers of the special class match the hook-length count of
/// standard tableaux of the box.
#[test]
fn criterion_8_sigma1_powers() {
    let expected = [(2usize, 4u32, 2u64), (2, 5, 5), (3, 6, 42)];
    for (k, n, value) in expected {
        let ctx = GrassContext::new(k, n).unwrap();
        let count = (n - k as u32) as usize * k;
        let classes = vec![part(&[1]); count];
        let got = intersection_number(&ctx, &classes);
        assert_eq!(got, BigInt::from(value), "sigma_1^{count} in G_{k}(C^{n})");
        assert_eq!(got, syt_rectangle_count(k, n - k as u32));
    }

    println!("ACCEPTANCE 8 sigma_1 powers vs hook lengths: PASS");
}

/// Criterion 9: the projected operator vanishes for h in [n+1, n+4] on every
/// basis monomial of the box.
#[test]
fn criterion_9_null_map_above_rank() {
    let mut cases = 0usize;
    for (k, n) in [(2usize, 4u32), (3, 6)] {
        let ctx = GrassContext::new(k, n).unwrap();
        for m in monomials_of_arity(k, n) {
            for h in n + 1..=n + 4 {
                let projected = project_pn(&ctx, &d_h_pieri(h, &m)).unwrap();
                assert!(projected.is_zero(), "h={h}, m={m} in G_{k}(C^{n})");
                cases += 1;
            }
        }
    }
    assert_eq!(cases, (6 + 20) * 4);

    println!("ACCEPTANCE 9 null map above the rank: PASS ({cases} cases)");
}

/// The quantum action itself also degenerates at q = 0 monomial-by-monomial;
/// kept alongside the criteria as a cheap cross-check of the machinery the
/// suite rides on.
#[test]
fn quantum_monomial_degeneration_cross_check() {
    for (k, n) in [(2usize, 4u32), (2, 5), (3, 6)] {
        let ctx = GrassContext::new(k, n).unwrap();
        for m in monomials_of_arity(k, n) {
            for h in 0..=n {
                let quantum = quantum_dh(&ctx, h, &m).unwrap();
                let classical = project_pn(&ctx, &d_h_pieri(h, &m)).unwrap();
                let at_q0 = quantum.map_coeffs(|c| QPolynomial::constant(c.at_q_zero()));
                assert_eq!(at_q0, classical, "h={h}, m={m} in G_{k}(C^{n})");
            }
        }
    }
}

/// gw reduces to the classical count at degree zero (stated with criterion 8
/// values so the reduction is pinned against known numbers).
#[test]
fn gw_degree_zero_matches_intersection() {
    for (k, n, value) in [(2usize, 4u32, 2u64), (2, 5, 5)] {
        let ctx = GrassContext::new(k, n).unwrap();
        let count = (n - k as u32) as usize * k;
        let classes = vec![part(&[1]); count];
        assert_eq!(gw_number(&ctx, &classes, 0), BigInt::from(value));
    }
}
