//! Slow, independent reference implementations used only by tests and by the
//! CLI `verify` command: the unrestricted Leibniz expansion of `D_h`, a
//! lattice-word Littlewood-Richardson rule, and hook-length tableau counts.
//! They deliberately share no shortcuts with the main code path.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::multivector::{wedge_monomials, Element, Monomial, QPolynomial};
use crate::schubert::Partition;

/// `D_h` by brute force: every composition `h1 + … + hk = h` with `hj ≥ 0`,
/// each shifted monomial canonicalized with its sign and summed. Collisions
/// and cancellations are what the restricted sum of
/// [`crate::derivation::d_h_pieri`] avoids; after they play out the two
/// agree.
pub fn d_h_leibniz(h: u32, m: &Monomial) -> Element {
    let k = m.arity();
    let mut out = Element::zero_graded(k);
    if k == 0 {
        if h == 0 {
            out.add_assign_term(Monomial::unit(), &QPolynomial::one());
        }
        return out;
    }

    let mut shifts = vec![0u32; k];
    fn rec(j: usize, remaining: u32, shifts: &mut Vec<u32>, m: &Monomial, out: &mut Element) {
        let k = m.arity();
        if j == k - 1 {
            shifts[j] = remaining;
            // canonicalize e^{i1+h1} ∧ … ∧ e^{ik+hk} one factor at a time
            let mut sign = 1i32;
            let mut acc = Monomial::unit();
            for (t, &i) in m.indices().iter().enumerate() {
                let single = Monomial::single(i + shifts[t]).unwrap();
                let (s, merged) = wedge_monomials(&acc, &single);
                if s == 0 {
                    return;
                }
                sign *= s;
                acc = merged;
            }
            out.add_assign_term(acc, &QPolynomial::constant(sign));
            return;
        }
        for hj in 0..=remaining {
            shifts[j] = hj;
            rec(j + 1, remaining - hj, shifts, m, out);
        }
    }
    rec(0, h, &mut shifts, m, &mut out);
    out
}

/// The Littlewood-Richardson coefficient `c^ν_{λμ}`: the number of
/// semistandard skew tableaux of shape `ν/λ` and content `μ` whose reverse
/// reading word (rows top to bottom, each read right to left) is a lattice
/// word. Counted by direct backtracking in reading order.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    if (0..lambda.len()).any(|i| lambda.part(i) > nu.part(i)) {
        return 0;
    }
    if mu.is_empty() {
        return 1; // shape ν/λ is empty by the size check
    }

    let rows = nu.len();
    // cells in reverse-reading-word order
    let cells: Vec<(usize, u32)> = (0..rows)
        .flat_map(|i| (lambda.part(i)..nu.part(i)).rev().map(move |j| (i, j)))
        .collect();

    struct State<'a> {
        lambda: &'a Partition,
        mu: &'a Partition,
        nu: &'a Partition,
        cells: Vec<(usize, u32)>,
        // tab[i][j] holds the entry at row i, column j (1-based values)
        tab: Vec<Vec<u32>>,
        counts: Vec<u64>,
        found: u64,
    }

    fn fill(pos: usize, st: &mut State) {
        if pos == st.cells.len() {
            st.found += 1;
            return;
        }
        let (i, j) = st.cells[pos];
        let values = st.mu.len() as u32;
        for v in 1..=values {
            // content bound
            if st.counts[v as usize] >= u64::from(st.mu.part(v as usize - 1)) {
                continue;
            }
            // lattice condition on the growing reverse reading word
            if v > 1 && st.counts[v as usize - 1] <= st.counts[v as usize] {
                continue;
            }
            // rows weakly increase left to right; the right neighbour is filled
            if j + 1 < st.nu.part(i) && v > st.tab[i][j as usize + 1] {
                continue;
            }
            // columns strictly increase downwards when the cell above is in the skew shape
            if i > 0 && j >= st.lambda.part(i - 1) && v <= st.tab[i - 1][j as usize] {
                continue;
            }
            st.tab[i][j as usize] = v;
            st.counts[v as usize] += 1;
            fill(pos + 1, st);
            st.counts[v as usize] -= 1;
        }
    }

    let tab = (0..rows).map(|i| vec![0u32; nu.part(i) as usize]).collect();
    let mut st = State {
        lambda,
        mu,
        nu,
        cells,
        tab,
        counts: vec![0; mu.len() + 1],
        found: 0,
    };
    fill(0, &mut st);
    st.found
}

/// Number of standard Young tableaux of the `rows × cols` rectangle, by the
/// hook-length formula.
pub fn syt_rectangle_count(rows: usize, cols: u32) -> BigInt {
    let n = rows as u64 * u64::from(cols);
    let mut numerator = BigInt::one();
    for t in 1..=n {
        numerator *= BigInt::from(t);
    }
    let mut hooks = BigInt::one();
    for i in 0..rows as u64 {
        for j in 0..u64::from(cols) {
            let hook = (u64::from(cols) - 1 - j) + (rows as u64 - 1 - i) + 1;
            hooks *= BigInt::from(hook);
        }
    }
    debug_assert!((&numerator % &hooks).is_zero());
    numerator / hooks
}
