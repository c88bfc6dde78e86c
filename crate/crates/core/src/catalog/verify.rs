use std::time::Instant;

use serde::Serialize;

use super::{Catalog, CatalogRecord, Recipe};
use crate::gf2::{
    binary_generator, classify_status, classify_type, default_workers, extract_family_params,
    full_weight_distribution_with, is_self_dual, low_weight_distribution_with, BitMatrix, CodeType, FamilyFit, Status,
    WeightDistribution,
};

/// How far verification goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    /// Construction conditions and binary self-duality only.
    Structure,
    /// Also weight counts up to `d + 2`, capped at weight 16 for the
    /// two-sided method.
    Weights,
    /// Weight counts up to `d + 2` without the cap.
    Extended,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Full,
    TwoSided,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub depth: Depth,
    pub workers: usize,
    /// Largest binary dimension enumerated in full; above it the two-sided
    /// method is used.
    pub full_limit: usize,
    /// Cap on `w_max` for the two-sided method at [`Depth::Weights`].
    pub two_sided_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { depth: Depth::Weights, workers: default_workers(), full_limit: 29, two_sided_cap: 16 }
    }
}

impl VerifyOptions {
    pub fn with_depth(depth: Depth) -> Self {
        VerifyOptions { depth, ..Self::default() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordReport {
    pub id: String,
    pub ring: String,
    pub construction: &'static str,
    pub n: usize,
    pub k: usize,
    pub conditions_hold: bool,
    pub self_dual: bool,
    pub method: Option<Method>,
    pub w_max: Option<usize>,
    /// Nonzero `(weight, count)` pairs up to `w_max`, the empty word included.
    pub counts: Vec<(usize, u64)>,
    pub d: Option<usize>,
    pub code_type: Option<CodeType>,
    pub fit: Option<FamilyFit>,
    pub status: Option<Status>,
    pub aut: Option<String>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

impl RecordReport {
    fn new(rec: &CatalogRecord) -> Self {
        RecordReport {
            id: rec.id.clone(),
            ring: rec.ring.tag().to_string(),
            construction: rec.recipe.kind(),
            n: 0,
            k: 0,
            conditions_hold: false,
            self_dual: false,
            method: None,
            w_max: None,
            counts: Vec::new(),
            d: None,
            code_type: None,
            fit: None,
            status: None,
            aut: rec.published.as_ref().and_then(|p| p.aut.clone()),
            failures: Vec::new(),
            pass: false,
            elapsed_ms: 0,
        }
    }

    /// Count of weight `w`, if computed.
    pub fn count(&self, w: usize) -> Option<u64> {
        if self.w_max.is_some_and(|m| w <= m) {
            Some(self.counts.iter().find(|&&(x, _)| x == w).map_or(0, |&(_, c)| c))
        } else {
            None
        }
    }

    /// One human-readable line.
    pub fn summary(&self) -> String {
        let mut s = format!("{} {} [{},{}", if self.pass { "PASS" } else { "FAIL" }, self.id, self.n, self.k);
        if let Some(d) = self.d {
            s.push_str(&format!(",{d}"));
        }
        s.push(']');
        if let Some(fit) = &self.fit {
            s.push_str(&format!(" {}", fit.params));
        }
        let shown: Vec<String> =
            self.counts.iter().filter(|&&(w, _)| w > 0).map(|(w, c)| format!("A{w}={c}")).collect();
        if !shown.is_empty() {
            s.push_str(&format!(" {}", shown.join(" ")));
        }
        for f in &self.failures {
            s.push_str(&format!(" | {f}"));
        }
        s
    }
}

/// Rebuild, check and measure one record.
pub fn verify_record(catalog: &Catalog, rec: &CatalogRecord, opts: &VerifyOptions) -> RecordReport {
    let start = Instant::now();
    let mut rep = RecordReport::new(rec);
    run(catalog, rec, opts, &mut rep);
    rep.pass = rep.failures.is_empty();
    rep.elapsed_ms = start.elapsed().as_millis() as u64;
    rep
}

fn run(catalog: &Catalog, rec: &CatalogRecord, opts: &VerifyOptions, rep: &mut RecordReport) {
    let built = match catalog.build(rec) {
        Ok(b) => b,
        Err(e) => {
            rep.failures.push(format!("build: {e}"));
            return;
        }
    };
    rep.conditions_hold = built.conditions_hold;
    if !built.conditions_hold {
        rep.failures.push(match rec.recipe {
            Recipe::FourCirculant { .. } => "four-circulant conditions fail".into(),
            Recipe::BuildingUp { .. } => "extension is not self-orthogonal".into(),
        });
    }
    let g = match binary_generator(&built.generator) {
        Ok(g) => g,
        Err(e) => {
            rep.failures.push(format!("binary image: {e}"));
            return;
        }
    };
    rep.n = g.cols();
    rep.k = g.rows();
    rep.self_dual = is_self_dual(&g);
    if !rep.self_dual {
        rep.failures.push("binary image is not self-dual".into());
        return;
    }
    let Some(published) = &rec.published else { return };
    if opts.depth == Depth::Structure {
        return;
    }
    let dist = match measure(&g, published.d, opts) {
        Ok((m, dist)) => {
            rep.method = Some(m);
            dist
        }
        Err(e) => {
            rep.failures.push(format!("enumeration: {e}"));
            return;
        }
    };
    rep.w_max = Some(dist.w_max);
    rep.counts = dist.nonzero().collect();
    rep.d = dist.min_distance();
    if rep.d != Some(published.d) {
        rep.failures.push(format!("d = {:?}, published {}", rep.d, published.d));
    }
    rep.code_type = classify_type(&dist).ok();
    if let (Some(d), Some(ty)) = (rep.d, rep.code_type) {
        rep.status = Some(classify_status(rep.n, d, ty, published.optimal));
    }
    match extract_family_params(rep.n, &dist) {
        Ok(fit) => {
            if !fit.admits(&published.family) {
                rep.failures.push(format!("measured {}, published {}", fit.params, published.family));
            }
            rep.fit = Some(fit);
        }
        Err(e) => rep.failures.push(e.to_string()),
    }
}

fn measure(g: &BitMatrix, d: usize, opts: &VerifyOptions) -> crate::Result<(Method, WeightDistribution)> {
    if g.rows() <= opts.full_limit {
        let full = full_weight_distribution_with(g, opts.full_limit, opts.workers)?;
        let w_max = d + 2;
        let counts = full.counts.clone();
        return Ok((Method::Full, WeightDistribution::partial(full.n, counts, w_max)));
    }
    let mut w_max = d + 2;
    if opts.depth == Depth::Weights {
        w_max = w_max.min(opts.two_sided_cap.max(d));
    }
    Ok((Method::TwoSided, low_weight_distribution_with(g, w_max, opts.workers)?))
}

impl Catalog {
    pub fn verify(&self, filter: &super::Filter, opts: &VerifyOptions) -> crate::Result<Vec<RecordReport>> {
        Ok(self.select(filter)?.into_iter().map(|r| verify_record(self, r, opts)).collect())
    }
}
