//! The machine-readable schema. Coefficients travel as decimal strings so
//! downstream consumers never truncate them to 64 bits.
//!
//! Element: `{"grade": k, "terms": [{"indices": [...],
//!            "coeff": [{"qdeg": d, "value": "…"}]}]}`
//! OperatorPoly: `{"terms": [{"gens": [...], "value": "…"}]}`
//! Class map: `{"terms": [{"partition": [...], "coeff": [...]}]}`
//! Plain number: `{"value": "…"}`

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use grasscal::multivector::{Element, Monomial, QPolynomial};
use grasscal::schubert::{OperatorPoly, Partition};

use crate::CliError;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct QTermJson {
    pub qdeg: u32,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ElementTermJson {
    pub indices: Vec<u32>,
    pub coeff: Vec<QTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ElementJson {
    pub grade: Option<usize>,
    pub terms: Vec<ElementTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OperatorTermJson {
    pub gens: Vec<u32>,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OperatorPolyJson {
    pub terms: Vec<OperatorTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassTermJson {
    pub partition: Vec<u32>,
    pub coeff: Vec<QTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassMapJson {
    pub terms: Vec<ClassTermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct NumberJson {
    pub value: String,
}

fn qpoly_to_json(c: &QPolynomial) -> Vec<QTermJson> {
    c.iter()
        .map(|(qdeg, value)| QTermJson {
            qdeg,
            value: value.to_string(),
        })
        .collect()
}

fn qpoly_from_json(terms: &[QTermJson]) -> Result<QPolynomial, CliError> {
    let mut out = QPolynomial::zero();
    for t in terms {
        let value: BigInt = t
            .value
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid integer string {:?}", t.value)))?;
        out = out + QPolynomial::term(t.qdeg, value);
    }
    Ok(out)
}

pub fn element_to_json(x: &Element) -> ElementJson {
    ElementJson {
        grade: x.grade(),
        terms: x
            .terms()
            .map(|(m, c)| ElementTermJson {
                indices: m.indices().to_vec(),
                coeff: qpoly_to_json(c),
            })
            .collect(),
    }
}

pub fn element_from_json(j: &ElementJson) -> Result<Element, CliError> {
    let mut out = match j.grade {
        Some(g) => Element::zero_graded(g),
        None => Element::zero(),
    };
    for t in &j.terms {
        if let Some(g) = j.grade {
            if t.indices.len() != g {
                return Err(CliError::Usage(format!(
                    "term {:?} does not match the declared grade {g}",
                    t.indices
                )));
            }
        }
        let m = Monomial::new(t.indices.clone())
            .map_err(|e| CliError::Usage(format!("invalid monomial in JSON: {e}")))?;
        out = out + Element::term(m, qpoly_from_json(&t.coeff)?);
    }
    Ok(out)
}

pub fn operator_to_json(p: &OperatorPoly) -> OperatorPolyJson {
    OperatorPolyJson {
        terms: p
            .terms()
            .map(|(gens, c)| OperatorTermJson {
                gens: gens.to_vec(),
                value: c.to_string(),
            })
            .collect(),
    }
}

pub fn operator_from_json(j: &OperatorPolyJson) -> Result<OperatorPoly, CliError> {
    let mut out = OperatorPoly::zero();
    for t in &j.terms {
        if t.gens.contains(&0) {
            return Err(CliError::Usage(
                "generator indices in JSON must be positive".to_string(),
            ));
        }
        let value: BigInt = t
            .value
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid integer string {:?}", t.value)))?;
        out = out + OperatorPoly::term(t.gens.clone(), value);
    }
    Ok(out)
}

/// Class maps serialize in descending lexicographic partition order, matching
/// the text rendering.
pub fn class_map_to_json(map: &BTreeMap<Partition, QPolynomial>) -> ClassMapJson {
    ClassMapJson {
        terms: map
            .iter()
            .rev()
            .map(|(p, c)| ClassTermJson {
                partition: p.parts().to_vec(),
                coeff: qpoly_to_json(c),
            })
            .collect(),
    }
}

pub fn class_map_from_json(j: &ClassMapJson) -> Result<BTreeMap<Partition, QPolynomial>, CliError> {
    let mut out = BTreeMap::new();
    for t in &j.terms {
        let p = Partition::new(t.partition.clone())
            .map_err(|e| CliError::Usage(format!("invalid partition in JSON: {e}")))?;
        out.insert(p, qpoly_from_json(&t.coeff)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ix: &[u32]) -> Monomial {
        Monomial::new(ix.to_vec()).unwrap()
    }

    #[test]
    fn element_round_trip() {
        let x = Element::term(mono(&[1, 4]), QPolynomial::constant(3) - QPolynomial::q())
            + Element::from_monomial(mono(&[2, 3]));
        let json = serde_json::to_string(&element_to_json(&x)).unwrap();
        let back: ElementJson = serde_json::from_str(&json).unwrap();
        assert_eq!(element_from_json(&back).unwrap(), x);
    }

    #[test]
    fn element_schema_shape() {
        let x = Element::term(mono(&[1, 2]), QPolynomial::q());
        let v = serde_json::to_value(element_to_json(&x)).unwrap();
        assert_eq!(v["grade"], 2);
        assert_eq!(v["terms"][0]["indices"], serde_json::json!([1, 2]));
        assert_eq!(v["terms"][0]["coeff"][0]["qdeg"], 1);
        assert_eq!(v["terms"][0]["coeff"][0]["value"], "1");
    }

    #[test]
    fn operator_round_trip() {
        let p = grasscal::schubert::giambelli_solve(&mono(&[2, 5]));
        let json = serde_json::to_string(&operator_to_json(&p)).unwrap();
        let back: OperatorPolyJson = serde_json::from_str(&json).unwrap();
        assert_eq!(operator_from_json(&back).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_json_values() {
        let bad = ElementJson {
            grade: Some(2),
            terms: vec![ElementTermJson {
                indices: vec![2, 1],
                coeff: vec![QTermJson {
                    qdeg: 0,
                    value: "1".into(),
                }],
            }],
        };
        assert!(element_from_json(&bad).is_err());

        let bad_value = ElementJson {
            grade: Some(1),
            terms: vec![ElementTermJson {
                indices: vec![1],
                coeff: vec![QTermJson {
                    qdeg: 0,
                    value: "ten".into(),
                }],
            }],
        };
        assert!(element_from_json(&bad_value).is_err());
    }
}
