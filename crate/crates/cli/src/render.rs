//! Exact text rendering. ASCII by default (`e2^e5`, `s(2,1)`, `D1*D3 - D4`);
//! the unicode style swaps in ε, ∧, σ and ·. Long sums wrap at term
//! boundaries when a width is given.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};

use grasscal::multivector::{monomial_to_partition, Element, Monomial, QPolynomial};
use grasscal::schubert::{OperatorPoly, Partition};

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub unicode: bool,
}

impl Style {
    fn eps(&self) -> &'static str {
        if self.unicode {
            "ε"
        } else {
            "e"
        }
    }
    fn wedge(&self) -> &'static str {
        if self.unicode {
            "∧"
        } else {
            "^"
        }
    }
    fn sigma(&self) -> &'static str {
        if self.unicode {
            "σ"
        } else {
            "s"
        }
    }
    fn times(&self) -> &'static str {
        if self.unicode {
            "·"
        } else {
            "*"
        }
    }
}

/// Which basis notation to print an [`Element`] in.
#[derive(Clone, Copy, Debug)]
pub enum Notation {
    Monomial,
    Class,
}

/// `e1^e4`; `None` for the unit monomial (rendered as a bare coefficient).
fn monomial_symbol(m: &Monomial, st: Style) -> Option<String> {
    if m.is_unit() {
        return None;
    }
    let body = m
        .indices()
        .iter()
        .map(|i| format!("{}{}", st.eps(), i))
        .collect::<Vec<_>>()
        .join(st.wedge());
    Some(body)
}

/// `s(2,1)`; `None` for the empty partition.
fn partition_symbol(p: &Partition, st: Style) -> Option<String> {
    if p.is_empty() {
        return None;
    }
    let parts = p
        .parts()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Some(format!("{}({})", st.sigma(), parts))
}

fn q_power(d: u32) -> String {
    match d {
        1 => "q".to_string(),
        _ => format!("q^{d}"),
    }
}

/// A polynomial on its own, e.g. `1 + q` or `q - 2*q^2`.
fn render_qpoly(c: &QPolynomial, st: Style) -> String {
    let mut out = String::new();
    for (t, (d, coeff)) in c.iter().enumerate() {
        let neg = coeff.sign() == Sign::Minus;
        let mag = coeff.magnitude();
        if t == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut pieces = Vec::new();
        if d == 0 || *mag != BigUint::from(1u32) {
            pieces.push(mag.to_string());
        }
        if d > 0 {
            pieces.push(q_power(d));
        }
        out.push_str(&pieces.join(st.times()));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// One summand as `(is_negative, body)`; the sign is pulled out only for
/// single-term coefficients so that sums read `a - b` rather than `a + -b`.
fn format_term(c: &QPolynomial, symbol: Option<&str>, st: Style) -> (bool, String) {
    if c.num_terms() == 1 {
        let (d, coeff) = c.iter().next().expect("one term");
        let neg = coeff.sign() == Sign::Minus;
        let mag = coeff.magnitude();
        let mut pieces: Vec<String> = Vec::new();
        let mag_is_one = *mag == BigUint::from(1u32);
        if d == 0 {
            if !mag_is_one || symbol.is_none() {
                pieces.push(mag.to_string());
            }
        } else {
            if !mag_is_one {
                pieces.push(mag.to_string());
            }
            pieces.push(q_power(d));
        }
        if let Some(s) = symbol {
            pieces.push(s.to_string());
        }
        if pieces.is_empty() {
            pieces.push("1".to_string());
        }
        (neg, pieces.join(st.times()))
    } else {
        let poly = render_qpoly(c, st);
        let body = match symbol {
            Some(s) => format!("({poly}){}{s}", st.times()),
            None => format!("({poly})"),
        };
        (false, body)
    }
}

/// Joins `(negative, body)` summands, wrapping between terms at `width`.
fn join_terms(terms: Vec<(bool, String)>, width: Option<usize>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut line_len = 0usize;
    for (t, (neg, body)) in terms.into_iter().enumerate() {
        let (sep, lead) = if t == 0 {
            ("", if neg { "-" } else { "" })
        } else {
            (" ", if neg { "- " } else { "+ " })
        };
        let chunk_len = sep.len() + lead.len() + body.len();
        if let Some(w) = width {
            if t > 0 && line_len + chunk_len > w {
                out.push_str("\n  ");
                out.push_str(lead);
                out.push_str(&body);
                line_len = 2 + lead.len() + body.len();
                continue;
            }
        }
        out.push_str(sep);
        out.push_str(lead);
        out.push_str(&body);
        line_len += chunk_len;
    }
    out
}

pub fn render_element(x: &Element, st: Style, notation: Notation, width: Option<usize>) -> String {
    let terms = x
        .terms()
        .map(|(m, c)| {
            let symbol = match notation {
                Notation::Monomial => monomial_symbol(m, st),
                Notation::Class => partition_symbol(&monomial_to_partition(m), st),
            };
            format_term(c, symbol.as_deref(), st)
        })
        .collect();
    join_terms(terms, width)
}

/// Class-basis coefficient map, partitions in descending lexicographic order.
pub fn render_class_map(
    map: &BTreeMap<Partition, QPolynomial>,
    st: Style,
    width: Option<usize>,
) -> String {
    let terms = map
        .iter()
        .rev()
        .map(|(p, c)| format_term(c, partition_symbol(p, st).as_deref(), st))
        .collect();
    join_terms(terms, width)
}

pub fn render_operator(p: &OperatorPoly, st: Style, width: Option<usize>) -> String {
    let terms = p
        .terms()
        .map(|(gens, c)| {
            let symbol = if gens.is_empty() {
                None
            } else {
                Some(
                    gens.iter()
                        .map(|g| format!("D{g}"))
                        .collect::<Vec<_>>()
                        .join(st.times()),
                )
            };
            format_term(&QPolynomial::constant(c.clone()), symbol.as_deref(), st)
        })
        .collect();
    join_terms(terms, width)
}

pub fn render_bigint(n: &BigInt) -> String {
    n.to_string()
}
