//! JSON interchange format for representation data, Brauer tables and
//! module classes.
//!
//! Integers are arbitrary precision. They are written as JSON numbers when
//! they fit in 64 bits and as decimal strings otherwise; both forms are
//! accepted on input.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::brauer::{fusion_from_brauer, BrauerTable};
use crate::error::{Error, Result};
use crate::rep::{ModuleClass, RepDatum};
use crate::{Int, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(small) => serializer.serialize_i64(small),
            Err(_) => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = JsonInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(Int::from(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<JsonInt, E> {
                Err(E::custom(format!(
                    "non-integer value {v}; only integer-valued data is supported"
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                Int::from_str(v.trim())
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("`{v}` is not a decimal integer")))
            }
        }

        deserializer.deserialize_any(IntVisitor)
    }
}

type JsonMatrix = Vec<Vec<JsonInt>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDatumJson {
    pub label: String,
    pub num_simples: usize,
    pub trivial_index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_labels: Option<Vec<String>>,
    pub s: Vec<JsonInt>,
    pub p: Vec<JsonInt>,
    /// Dimension of the algebra; `s^T p` when omitted.
    #[serde(default)]
    pub dim: Option<JsonInt>,
    #[serde(default)]
    pub cartan: Option<JsonMatrix>,
    /// May be null only when a Brauer table accompanies the datum.
    #[serde(default)]
    pub fusion: Option<Vec<JsonMatrix>>,
    #[serde(default)]
    pub dual_permutation: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTableJson {
    pub p: u64,
    pub group_order: JsonInt,
    pub sylow_order: JsonInt,
    pub class_labels: Vec<String>,
    pub identity_class: usize,
    pub chi_simple: JsonMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleClassJson {
    pub c: Vec<JsonInt>,
}

/// A datum together with its optional Brauer table; the format of the
/// bundled catalog files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    #[serde(default)]
    pub key: Option<String>,
    #[serde(default)]
    pub provenance: Option<String>,
    pub datum: RepDatumJson,
    #[serde(default)]
    pub brauer: Option<BrauerTableJson>,
}

fn ints_from(v: Vec<JsonInt>) -> Vec<Int> {
    v.into_iter().map(|x| x.0).collect()
}

fn ints_to(v: &[Int]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

fn matrix_from(rows: JsonMatrix) -> Result<IntMatrix> {
    IntMatrix::from_rows(rows.into_iter().map(ints_from))
}

fn matrix_to(m: &IntMatrix) -> JsonMatrix {
    m.to_rows().iter().map(|r| ints_to(r)).collect()
}

impl RepDatumJson {
    pub fn from_datum(rep: &RepDatum) -> Self {
        RepDatumJson {
            label: rep.label.clone(),
            num_simples: rep.num_simples(),
            trivial_index: rep.trivial_index,
            simple_labels: rep.simple_labels.clone(),
            s: ints_to(&rep.s),
            p: ints_to(&rep.p),
            dim: Some(JsonInt(rep.dim.clone())),
            cartan: rep.cartan.as_ref().map(matrix_to),
            fusion: Some(rep.fusion.iter().map(matrix_to).collect()),
            dual_permutation: rep.dual_permutation.clone(),
        }
    }

    /// Builds the datum. Missing fusion is derived from `brauer` when given.
    pub fn into_datum(self, brauer: Option<&BrauerTable>) -> Result<RepDatum> {
        let s = ints_from(self.s);
        let p = ints_from(self.p);
        if s.len() != self.num_simples {
            return Err(Error::InvalidInput(format!(
                "num_simples is {} but s has {} entries",
                self.num_simples,
                s.len()
            )));
        }
        let dim = match self.dim {
            Some(d) => d.0,
            None => crate::linalg::dot(&s, &p),
        };
        let cartan = self.cartan.map(matrix_from).transpose()?;
        let fusion = match (self.fusion, brauer) {
            (Some(f), _) => f.into_iter().map(matrix_from).collect::<Result<Vec<_>>>()?,
            (None, Some(table)) => fusion_from_brauer(table)?,
            (None, None) => {
                return Err(Error::InvalidInput(
                    "fusion is required when no Brauer table is given".into(),
                ))
            }
        };
        let mut rep = RepDatum::new(self.label, self.trivial_index, s, p, dim, cartan, fusion)?;
        if let Some(labels) = self.simple_labels {
            rep = rep.with_simple_labels(labels)?;
        }
        if let Some(perm) = self.dual_permutation {
            rep = rep.with_dual_permutation(perm)?;
        }
        Ok(rep)
    }
}

impl BrauerTableJson {
    pub fn from_table(t: &BrauerTable) -> Self {
        BrauerTableJson {
            p: t.characteristic,
            group_order: JsonInt(t.group_order.clone()),
            sylow_order: JsonInt(t.sylow_order.clone()),
            class_labels: t.class_labels.clone(),
            identity_class: t.identity_class,
            chi_simple: matrix_to(&t.chi),
        }
    }

    pub fn into_table(self) -> Result<BrauerTable> {
        BrauerTable::new(
            self.p,
            self.group_order.0,
            self.sylow_order.0,
            self.class_labels,
            self.identity_class,
            matrix_from(self.chi_simple)?,
        )
    }
}

impl ModuleClassJson {
    pub fn from_class(v: &ModuleClass) -> Self {
        ModuleClassJson {
            c: ints_to(v.multiplicities()),
        }
    }

    pub fn into_class(self) -> Result<ModuleClass> {
        ModuleClass::new(ints_from(self.c))
    }
}

/// Parses either a bare datum or an entry `{ "datum": ..., "brauer": ... }`.
pub fn parse_input(text: &str) -> Result<(RepDatum, Option<BrauerTable>)> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("datum").is_some() {
        let entry: EntryJson = serde_json::from_value(value)?;
        let table = entry.brauer.map(BrauerTableJson::into_table).transpose()?;
        let rep = entry.datum.into_datum(table.as_ref())?;
        Ok((rep, table))
    } else {
        let datum: RepDatumJson = serde_json::from_value(value)?;
        Ok((datum.into_datum(None)?, None))
    }
}

pub fn datum_to_json(rep: &RepDatum) -> Result<String> {
    Ok(serde_json::to_string_pretty(&RepDatumJson::from_datum(rep))?)
}

pub fn datum_from_json(text: &str) -> Result<RepDatum> {
    let datum: RepDatumJson = serde_json::from_str(text)?;
    datum.into_datum(None)
}

pub fn class_from_json(text: &str) -> Result<ModuleClass> {
    let c: ModuleClassJson = serde_json::from_str(text)?;
    c.into_class()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_as_strings() {
        let big: Int = Int::from(u64::MAX) * 3;
        let text = serde_json::to_string(&vec![JsonInt(Int::from(-5)), JsonInt(big.clone())]).unwrap();
        assert_eq!(text, format!("[-5,\"{big}\"]"));
        let back: Vec<JsonInt> = serde_json::from_str(&text).unwrap();
        assert_eq!(back[1].0, big);
    }

    #[test]
    fn fractional_values_rejected() {
        let r: std::result::Result<JsonInt, _> = serde_json::from_str("1.5");
        assert!(r.is_err());
        let r: std::result::Result<JsonInt, _> = serde_json::from_str("\"abc\"");
        assert!(r.is_err());
    }

    #[test]
    fn bare_datum_requires_fusion() {
        let text = r#"{"label":"x","num_simples":1,"trivial_index":0,"s":[1],"p":[1],"cartan":null,"fusion":null}"#;
        assert!(matches!(parse_input(text), Err(Error::InvalidInput(_))));
        let text = r#"{"label":"x","num_simples":1,"trivial_index":0,"s":[1],"p":[1],"cartan":null,"fusion":[[[1]]]}"#;
        let (rep, table) = parse_input(text).unwrap();
        assert!(table.is_none());
        assert_eq!(rep.dim, Int::from(1));
    }

    #[test]
    fn num_simples_checked() {
        let text = r#"{"label":"x","num_simples":2,"trivial_index":0,"s":[1],"p":[1],"fusion":[[[1]]]}"#;
        assert!(parse_input(text).is_err());
    }

    #[test]
    fn module_class() {
        let v = class_from_json(r#"{"c": [1, 0, "2"]}"#).unwrap();
        assert_eq!(v, ModuleClass::from_i64(&[1, 0, 2]).unwrap());
        assert!(class_from_json(r#"{"c": [-1]}"#).is_err());
    }
}
