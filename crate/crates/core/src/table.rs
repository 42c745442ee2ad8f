//! Reference knots and links with published Conway polynomials.
//!
//! The table is a JSON array of `{name, pd, conway, components}` objects.
//! A copy ships with the crate; [`KnotTable::load`] reads another file.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{parse_pd, Diagram, DiagramError};
use crate::poly::{ParsePolyError, Poly};
use crate::skein::SkeinContext;
use crate::verify::VerificationReport;

pub const DEFAULT_TABLE_JSON: &str = include_str!("../data/knot_table.json");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read knot table {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed knot table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("table entry {name}: {source}")]
    Pd { name: String, source: DiagramError },
    #[error("table entry {name}: {source}")]
    Conway {
        name: String,
        source: ParsePolyError,
    },
    #[error("table has no entry named {0}")]
    Missing(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotTableEntry {
    pub name: String,
    pub pd: String,
    pub conway: String,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KnotTable {
    entries: Vec<KnotTableEntry>,
}

impl Default for KnotTable {
    fn default() -> Self {
        Self::from_json(DEFAULT_TABLE_JSON).expect("bundled knot table is well-formed")
    }
}

impl KnotTable {
    pub fn new(entries: Vec<KnotTableEntry>) -> Self {
        KnotTable { entries }
    }

    /// Parses the JSON document; every PD code and polynomial must be
    /// syntactically valid. Agreement with the skein engine is checked
    /// separately by [`KnotTable::cross_validate`].
    pub fn from_json(text: &str) -> Result<Self, TableError> {
        let table: KnotTable = serde_json::from_str(text)?;
        for e in &table.entries {
            parse_pd(&e.pd).map_err(|source| TableError::Pd {
                name: e.name.clone(),
                source,
            })?;
            e.conway
                .parse::<Poly<BigInt>>()
                .map_err(|source| TableError::Conway {
                    name: e.name.clone(),
                    source,
                })?;
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn entries(&self) -> &[KnotTableEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&KnotTableEntry, TableError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| TableError::Missing(name.to_string()))
    }

    pub fn get_mut(&mut self, name: &str) -> Result<&mut KnotTableEntry, TableError> {
        self.entries
            .iter_mut()
            .find(|e| e.name == name)
            .ok_or_else(|| TableError::Missing(name.to_string()))
    }

    pub fn diagram(&self, name: &str) -> Result<Diagram, TableError> {
        let e = self.get(name)?;
        parse_pd(&e.pd).map_err(|source| TableError::Pd {
            name: name.to_string(),
            source,
        })
    }

    /// The published polynomial recorded in the table.
    pub fn conway(&self, name: &str) -> Result<Poly<BigInt>, TableError> {
        let e = self.get(name)?;
        e.conway.parse().map_err(|source| TableError::Conway {
            name: name.to_string(),
            source,
        })
    }

    /// One report per entry: the skein engine on the PD code against the
    /// recorded polynomial and component count.
    pub fn cross_validate(&self, ctx: &mut SkeinContext<BigInt>) -> Vec<VerificationReport> {
        self.entries
            .iter()
            .map(|e| {
                let name = format!("table/{}", e.name);
                let expected = format!("{} ({} components)", e.conway, e.components);
                let computed = match parse_pd(&e.pd) {
                    Ok(d) => match ctx.conway(&d) {
                        Ok(p) => format!("{} ({} components)", p, d.component_count()),
                        Err(err) => format!("error: {err}"),
                    },
                    Err(err) => format!("error: {err}"),
                };
                // compare polynomials, not spellings
                let expected = match e.conway.parse::<Poly<BigInt>>() {
                    Ok(p) => format!("{} ({} components)", p, e.components),
                    Err(_) => expected,
                };
                VerificationReport::new(name, &e.pd, expected, computed)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_loads() {
        let t = KnotTable::default();
        for name in ["0_1", "3_1", "5_2", "8_19", "10_148", "6^2_3"] {
            assert!(t.get(name).is_ok(), "{name}");
        }
        assert!(matches!(t.get("4_1"), Err(TableError::Missing(_))));
    }

    #[test]
    fn bundled_table_cross_validates() {
        let t = KnotTable::default();
        let mut ctx = SkeinContext::new();
        for r in t.cross_validate(&mut ctx) {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn corrupted_entry_fails_validation() {
        let mut t = KnotTable::default();
        t.get_mut("8_19").unwrap().conway = "1+5z^2+4z^4+z^6".into();
        let mut ctx = SkeinContext::new();
        let reports = t.cross_validate(&mut ctx);
        assert_eq!(reports.iter().filter(|r| !r.passed).count(), 1);
    }

    #[test]
    fn malformed_documents_rejected() {
        assert!(matches!(
            KnotTable::from_json("{"),
            Err(TableError::Json(_))
        ));
        let bad_pd = r#"[{"name":"x","pd":"X(1,2)","conway":"1","components":1}]"#;
        assert!(matches!(
            KnotTable::from_json(bad_pd),
            Err(TableError::Pd { .. })
        ));
        let bad_poly = r#"[{"name":"x","pd":"O","conway":"1+","components":1}]"#;
        assert!(matches!(
            KnotTable::from_json(bad_poly),
            Err(TableError::Conway { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let t = KnotTable::default();
        assert_eq!(KnotTable::from_json(&t.to_json()).unwrap(), t);
    }
}
