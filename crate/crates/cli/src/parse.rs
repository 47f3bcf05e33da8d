//! Parsing of the shell-facing syntax: comma-separated index/part lists and
//! semicolon-separated class lists. An empty string is the empty list.

use grasscal::multivector::Monomial;
use grasscal::schubert::Partition;

use crate::CliError;

fn parse_u32_list(s: &str, what: &str) -> Result<Vec<u32>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|_| {
                CliError::Usage(format!(
                    "invalid {what} {s:?}: {tok:?} is not a non-negative integer"
                ))
            })
        })
        .collect()
}

pub fn parse_monomial(s: &str) -> Result<Monomial, CliError> {
    let indices = parse_u32_list(s, "monomial")?;
    Monomial::new(indices).map_err(|e| CliError::Usage(format!("invalid monomial {s:?}: {e}")))
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = parse_u32_list(s, "partition")?;
    Partition::new(parts).map_err(|e| CliError::Usage(format!("invalid partition {s:?}: {e}")))
}

/// Semicolon-separated partitions; an empty segment is the identity class.
pub fn parse_classes(s: &str) -> Result<Vec<Partition>, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_partition).collect()
}
