//! Serialized forms of codes, fields and distributions.
//!
//! Counts are written as decimal strings so arbitrary precision survives
//! any JSON consumer.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::gf2m::FieldContext;
use crate::hecke::HeckeTraceTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    BruteForce,
    Macwilliams,
    TraceEnumeration,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::BruteForce => "brute-force",
            Method::Macwilliams => "macwilliams",
            Method::TraceEnumeration => "trace-enumeration",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCount {
    pub weight: usize,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionJson {
    pub family: String,
    pub m: Option<u32>,
    pub n: usize,
    pub k: usize,
    pub method: String,
    pub distribution: Vec<WeightCount>,
}

impl DistributionJson {
    pub fn new(family: &str, m: Option<u32>, k: usize, method: Method, w: &WeightEnumerator) -> Self {
        Self {
            family: family.to_string(),
            m,
            n: w.n(),
            k,
            method: method.name().to_string(),
            distribution: w
                .sparse()
                .into_iter()
                .map(|(weight, c)| WeightCount {
                    weight,
                    count: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn enumerator(&self) -> Result<WeightEnumerator> {
        let entries = self
            .distribution
            .iter()
            .map(|wc| {
                if wc.weight > self.n {
                    return Err(Error::Parse(format!("weight {} exceeds n = {}", wc.weight, self.n)));
                }
                let c: BigUint = wc
                    .count
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad count {:?}", wc.count)))?;
                Ok((wc.weight, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightEnumerator::from_sparse(self.n, &entries))
    }
}

/// Dense CSV with header `weight,count`.
pub fn to_csv(w: &WeightEnumerator) -> String {
    let mut out = String::from("weight,count\n");
    for (i, c) in w.counts().iter().enumerate() {
        writeln!(out, "{i},{c}").unwrap();
    }
    out
}

/// Right-aligned two-column table over nonzero weights, with a Σ row.
pub fn to_table(w: &WeightEnumerator) -> String {
    let rows: Vec<(String, String)> = w
        .sparse()
        .into_iter()
        .map(|(i, c)| (i.to_string(), c.to_string()))
        .chain(std::iter::once(("Σ".to_string(), w.total().to_string())))
        .collect();
    let wl = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0).max("weight".len());
    let cl = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max("count".len());
    let mut out = format!("{:>wl$}  {:>cl$}\n", "weight", "count");
    for (a, b) in rows {
        let pad = wl - a.chars().count();
        writeln!(out, "{}{a}  {b:>cl$}", " ".repeat(pad)).unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub family: String,
    pub m: Option<u32>,
    pub n: usize,
    pub k: usize,
    pub generator: String,
    pub generator_poly: String,
}

impl From<&CyclicCode> for CodeJson {
    fn from(c: &CyclicCode) -> Self {
        Self {
            family: c.family().name().to_string(),
            m: c.m(),
            n: c.n(),
            k: c.k(),
            generator: c.generator().to_hex(),
            generator_poly: c.generator().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub m: u32,
    pub q: u32,
    pub modulus: String,
    pub modulus_poly: String,
    pub alpha: String,
}

impl From<&FieldContext> for FieldJson {
    fn from(ctx: &FieldContext) -> Self {
        Self {
            m: ctx.m(),
            q: ctx.q(),
            modulus: ctx.modulus_poly().to_hex(),
            modulus_poly: ctx.modulus_poly().to_string(),
            alpha: format!("{:x}", ctx.alpha().bits()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub k: u32,
    pub trace: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeJson {
    pub q: u64,
    pub traces: Vec<TraceEntry>,
}

impl From<&HeckeTraceTable> for HeckeJson {
    fn from(t: &HeckeTraceTable) -> Self {
        Self {
            q: t.q,
            traces: t
                .traces
                .iter()
                .map(|(&k, v)| TraceEntry { k, trace: v.to_string() })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let w = WeightEnumerator::from_u64s(7, &[1, 0, 0, 7, 7, 0, 0, 1]);
        let j = DistributionJson::new("hamming", Some(3), 4, Method::ClosedForm, &w);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains(r#""method":"closed-form""#));
        assert!(text.contains(r#"{"weight":3,"count":"7"}"#));
        let back: DistributionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.enumerator().unwrap(), w);
    }

    #[test]
    fn csv_and_table() {
        let w = WeightEnumerator::from_u64s(3, &[1, 0, 3, 0]);
        assert_eq!(to_csv(&w), "weight,count\n0,1\n1,0\n2,3\n3,0\n");
        let t = to_table(&w);
        assert_eq!(t, "weight  count\n     0      1\n     2      3\n     Σ      4\n");
    }

    #[test]
    fn bad_json_counts() {
        let j = DistributionJson {
            family: "custom".into(),
            m: None,
            n: 3,
            k: 1,
            method: "brute-force".into(),
            distribution: vec![WeightCount { weight: 5, count: "1".into() }],
        };
        assert!(j.enumerator().is_err());
    }
}
