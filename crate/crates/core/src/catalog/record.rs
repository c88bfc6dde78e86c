use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construct::{
    build_four_circulant, building_up_extend, check_four_circulant, BuildingUpParams, FourCirculantParams,
    GeneratorOverRing,
};
use crate::error::{Error, Result};
use crate::gf2::{binary_generator, Family, FamilyParams};
use crate::ring::{RingElement, RingId, RingVector};

/// Transformation applied to a parent before building up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PreMap {
    /// Binary Gray image of the parent.
    Gray,
    /// Binary Gray image of the Frobenius conjugate `x ↦ x²` of an `F4`
    /// parent. Under the `F4` Gray map this exchanges the two halves.
    ConjGray,
}

impl PreMap {
    pub fn tag(self) -> &'static str {
        match self {
            PreMap::Gray => "gray",
            PreMap::ConjGray => "conj_gray",
        }
    }

    pub fn apply(self, parent: &GeneratorOverRing) -> Result<GeneratorOverRing> {
        let source = match self {
            PreMap::Gray => parent.clone(),
            PreMap::ConjGray => {
                if parent.ring() != RingId::F4 {
                    return Err(Error::InvalidArgument(format!(
                        "conj_gray needs a parent over F4, got {}",
                        parent.ring()
                    )));
                }
                let mut m = parent.matrix.clone();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let x = m.get(i, j);
                        m.set_code(i, j, x.square().code());
                    }
                }
                GeneratorOverRing::new(m)
            }
        };
        Ok(GeneratorOverRing::from_bits(&binary_generator(&source)?))
    }
}

impl FromStr for PreMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gray" => Ok(PreMap::Gray),
            "conj_gray" => Ok(PreMap::ConjGray),
            _ => Err(Error::Catalog(format!("unknown premap {s:?}"))),
        }
    }
}

/// How a code is built. Vectors are hex strings without parentheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", rename_all = "snake_case")]
pub enum Recipe {
    FourCirculant { lambda: char, mu: char, a: String, b: String, c: String },
    BuildingUp { parent: String, premap: Option<PreMap>, epsilon: char, delta: String },
}

impl Recipe {
    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::FourCirculant { .. } => "fourcirc",
            Recipe::BuildingUp { .. } => "buildup",
        }
    }
}

/// Published values attached to a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Published {
    pub family: FamilyParams,
    pub d: usize,
    /// Automorphism group order as text, e.g. `2^3*5`. Never checked.
    pub aut: Option<String>,
    /// The code is claimed optimal for its length.
    pub optimal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub ring: RingId,
    pub recipe: Recipe,
    pub published: Option<Published>,
}

fn strip_parens(s: &str) -> &str {
    s.trim().trim_start_matches('(').trim_end_matches(')')
}

fn single_char(key: &str, v: &str) -> Result<char> {
    let mut it = v.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c.to_ascii_uppercase()),
        _ => Err(Error::Catalog(format!("{key} must be one hex digit, got {v:?}"))),
    }
}

impl CatalogRecord {
    /// Parse one `key=value ...` line.
    pub fn from_line(line: &str) -> Result<Self> {
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        for tok in line.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| Error::Catalog(format!("field without '=': {tok:?}")))?;
            if fields.insert(k, v).is_some() {
                return Err(Error::Catalog(format!("duplicate field {k:?}")));
            }
        }
        let mut take = |k: &str| fields.remove(k);
        let id = take("id").ok_or_else(|| Error::Catalog("record without id".into()))?.to_string();
        let ctx = |e: Error| Error::Catalog(format!("{id}: {e}"));
        fn need<'a>(id: &str, v: Option<&'a str>, k: &str) -> Result<&'a str> {
            v.ok_or_else(|| Error::Catalog(format!("{id}: missing {k}")))
        }
        let need = |v, k| need(&id, v, k);
        let ring: RingId = need(take("ring"), "ring")?.parse().map_err(ctx)?;
        let cons = need(take("cons"), "cons")?;
        let recipe = match cons {
            "fourcirc" => Recipe::FourCirculant {
                lambda: take("lambda").map(|v| single_char("lambda", v)).transpose().map_err(ctx)?.unwrap_or('1'),
                mu: take("mu").map(|v| single_char("mu", v)).transpose().map_err(ctx)?.unwrap_or('1'),
                a: strip_parens(need(take("a"), "a")?).to_ascii_uppercase(),
                b: strip_parens(need(take("b"), "b")?).to_ascii_uppercase(),
                c: strip_parens(need(take("c"), "c")?).to_ascii_uppercase(),
            },
            "buildup" => Recipe::BuildingUp {
                parent: need(take("parent"), "parent")?.to_string(),
                premap: take("premap").map(str::parse).transpose().map_err(ctx)?,
                epsilon: single_char("eps", need(take("eps"), "eps")?).map_err(ctx)?,
                delta: strip_parens(need(take("delta"), "delta")?).to_ascii_uppercase(),
            },
            other => return Err(Error::Catalog(format!("{id}: unknown construction {other:?}"))),
        };
        let num = |v: Option<&str>, k: &str| -> Result<Option<i64>> {
            v.map(|s| s.parse::<i64>().map_err(|_| Error::Catalog(format!("{id}: {k} is not an integer: {s:?}"))))
                .transpose()
        };
        let family = take("family").map(|f| f.parse::<Family>()).transpose().map_err(ctx)?;
        let alpha = num(take("alpha"), "alpha")?;
        let beta = num(take("beta"), "beta")?;
        let d = num(take("d"), "d")?;
        let aut = take("aut").map(str::to_string);
        let optimal = take("optimal").is_some_and(|v| v == "1");
        let published = match (family, d) {
            (Some(family), Some(d)) => {
                Some(Published { family: FamilyParams { family, alpha, beta }, d: d as usize, aut, optimal })
            }
            (None, None) => None,
            _ => return Err(Error::Catalog(format!("{id}: family and d go together"))),
        };
        if let Some(k) = fields.keys().next() {
            return Err(Error::Catalog(format!("{id}: unknown field {k:?}")));
        }
        Ok(CatalogRecord { id, ring, recipe, published })
    }

    /// Inverse of [`CatalogRecord::from_line`].
    pub fn to_line(&self) -> String {
        let mut out = vec![
            format!("id={}", self.id),
            format!("cons={}", self.recipe.kind()),
            format!("ring={}", self.ring.tag()),
        ];
        match &self.recipe {
            Recipe::FourCirculant { lambda, mu, a, b, c } => {
                if *lambda != '1' || *mu != '1' {
                    out.push(format!("lambda={lambda}"));
                    out.push(format!("mu={mu}"));
                }
                out.extend([format!("a={a}"), format!("b={b}"), format!("c={c}")]);
            }
            Recipe::BuildingUp { parent, premap, epsilon, delta } => {
                out.push(format!("parent={parent}"));
                if let Some(p) = premap {
                    out.push(format!("premap={}", p.tag()));
                }
                out.push(format!("eps={epsilon}"));
                out.push(format!("delta={delta}"));
            }
        }
        if let Some(p) = &self.published {
            out.push(format!("family={}", p.family.family));
            if let Some(a) = p.family.alpha {
                out.push(format!("alpha={a}"));
            }
            if let Some(b) = p.family.beta {
                out.push(format!("beta={b}"));
            }
            out.push(format!("d={}", p.d));
            if let Some(a) = &p.aut {
                out.push(format!("aut={a}"));
            }
            if p.optimal {
                out.push("optimal=1".into());
            }
        }
        out.join(" ")
    }

    /// Four-circulant parameters, if that is the recipe.
    pub fn four_circulant_params(&self) -> Option<Result<FourCirculantParams>> {
        match &self.recipe {
            Recipe::FourCirculant { lambda, mu, a, b, c } => {
                Some(FourCirculantParams::parse(self.ring, *lambda, *mu, a, b, c))
            }
            Recipe::BuildingUp { .. } => None,
        }
    }

    /// Build the generator over the record's ring. A building-up recipe
    /// takes the already-built parent.
    pub fn build_with_parent(&self, parent: Option<&GeneratorOverRing>) -> Result<Built> {
        match &self.recipe {
            Recipe::FourCirculant { .. } => {
                let p = self.four_circulant_params().expect("four-circulant recipe")?;
                let conditions_hold = check_four_circulant(&p);
                Ok(Built { generator: build_four_circulant(&p)?, conditions_hold })
            }
            Recipe::BuildingUp { premap, epsilon, delta, parent: pid } => {
                let parent = parent.ok_or_else(|| Error::Catalog(format!("{}: parent {pid} not supplied", self.id)))?;
                let parent = match premap {
                    Some(m) => m.apply(parent)?,
                    None => parent.clone(),
                };
                if parent.ring() != self.ring {
                    return Err(Error::RingMismatch { left: self.ring, right: parent.ring() });
                }
                let params = BuildingUpParams {
                    parent,
                    epsilon: RingElement::from_symbol(self.ring, *epsilon)?,
                    delta: RingVector::parse(self.ring, delta)?,
                };
                let generator = building_up_extend(&params)?;
                // preconditions were enforced by the extension itself
                let conditions_hold = generator.is_self_orthogonal();
                Ok(Built { generator, conditions_hold })
            }
        }
    }
}

impl fmt::Display for CatalogRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// A rebuilt generator and whether its construction conditions held.
#[derive(Clone, Debug)]
pub struct Built {
    pub generator: GeneratorOverRing,
    pub conditions_hold: bool,
}
