//! The embedded catalog of published codes and its verification pipeline.
//!
//! Each record is one line of whitespace-separated `key=value` fields:
//!
//! | key | meaning |
//! |-----|---------|
//! | `id` | record name, e.g. `C_80,14`; parents carry a prime, `C'_12,1` |
//! | `cons` | `fourcirc` or `buildup` |
//! | `ring` | `F2`, `F2U`, `R16UV`, `F4`, `F4U` |
//! | `lambda`, `mu` | hex digits, default `1` |
//! | `a`, `b`, `c` | hex vectors of a four-circulant record |
//! | `parent`, `premap`, `eps`, `delta` | building-up inputs |
//! | `family`, `alpha`, `beta`, `d` | published weight-enumerator data |
//! | `aut` | published automorphism group order, stored only |
//! | `optimal` | `1` when the code is claimed optimal |

mod record;
mod verify;

use std::collections::HashMap;
use std::sync::OnceLock;

pub use record::{Built, CatalogRecord, PreMap, Published, Recipe};
pub use verify::{verify_record, Depth, Method, RecordReport, VerifyOptions};

use crate::construct::GeneratorOverRing;
use crate::error::{Error, Result};

const EMBEDDED: &str = include_str!("catalog.txt");

#[derive(Clone, Debug)]
pub struct Catalog {
    records: Vec<CatalogRecord>,
    index: HashMap<String, usize>,
}

/// Which records to act on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    Id(String),
    Length(usize),
    /// Every record with published values; parents are left out.
    All,
}

/// `C_56,1`, `c56,1`, `C_56_1` and `C56.1` all name the same record.
pub fn normalize_id(id: &str) -> String {
    let mut out = String::new();
    for ch in id.chars() {
        match ch {
            '_' | ' ' => {}
            '.' | '-' => out.push(','),
            c => out.push(c.to_ascii_uppercase()),
        }
    }
    // `C56_1` loses its separator above; restore it before the last number
    if !out.contains(',') {
        if let Some(pos) = id.rfind(['_', '.', '-']) {
            let tail = &id[pos + 1..];
            if tail.chars().all(|c| c.is_ascii_digit()) && out.len() > tail.len() {
                out.insert(out.len() - tail.len(), ',');
            }
        }
    }
    out
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let rec = CatalogRecord::from_line(line).map_err(|e| Error::Catalog(format!("line {}: {e}", i + 1)))?;
            records.push(rec);
        }
        Self::from_records(records)
    }

    pub fn from_records(records: Vec<CatalogRecord>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            if index.insert(normalize_id(&r.id), i).is_some() {
                return Err(Error::Catalog(format!("duplicate id {}", r.id)));
            }
        }
        let cat = Catalog { records, index };
        for r in &cat.records {
            if let Recipe::BuildingUp { parent, .. } = &r.recipe {
                if cat.get(parent).is_none() {
                    return Err(Error::Catalog(format!("{}: unknown parent {parent}", r.id)));
                }
            }
        }
        Ok(cat)
    }

    /// The catalog compiled into the library.
    pub fn embedded() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(EMBEDDED).expect("embedded catalog parses"))
    }

    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn records(&self) -> &[CatalogRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Option<&CatalogRecord> {
        self.index.get(&normalize_id(id)).map(|&i| &self.records[i])
    }

    /// Records with published values, i.e. everything but parents.
    pub fn published(&self) -> impl Iterator<Item = &CatalogRecord> {
        self.records.iter().filter(|r| r.published.is_some())
    }

    pub fn select(&self, filter: &Filter) -> Result<Vec<&CatalogRecord>> {
        match filter {
            Filter::Id(id) => self.get(id).map(|r| vec![r]).ok_or_else(|| Error::Catalog(format!("no record {id}"))),
            Filter::Length(n) => {
                let mut out = Vec::new();
                for r in self.published() {
                    if self.binary_length(r)? == *n {
                        out.push(r);
                    }
                }
                Ok(out)
            }
            Filter::All => Ok(self.published().collect()),
        }
    }

    /// Build a record, recursing through building-up parents.
    pub fn build(&self, rec: &CatalogRecord) -> Result<Built> {
        let parent = match &rec.recipe {
            Recipe::BuildingUp { parent, .. } => {
                let p = self.get(parent).ok_or_else(|| Error::Catalog(format!("unknown parent {parent}")))?;
                Some(self.build(p)?.generator)
            }
            Recipe::FourCirculant { .. } => None,
        };
        rec.build_with_parent(parent.as_ref())
    }

    pub fn generator(&self, id: &str) -> Result<GeneratorOverRing> {
        let rec = self.get(id).ok_or_else(|| Error::Catalog(format!("no record {id}")))?;
        Ok(self.build(rec)?.generator)
    }

    /// Length of the binary image, computed without building.
    pub fn binary_length(&self, rec: &CatalogRecord) -> Result<usize> {
        let ring_len = match &rec.recipe {
            Recipe::FourCirculant { a, .. } => 4 * a.chars().count(),
            Recipe::BuildingUp { delta, .. } => delta.chars().count() + 2,
        };
        Ok(ring_len * rec.ring.gray_expansion())
    }
}
