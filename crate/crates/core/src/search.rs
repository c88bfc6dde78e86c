//! Seeded random search over four-circulant and building-up parameters.
//!
//! # Random numbers
//!
//! The generator is SplitMix64:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. Worker `i` (from 0) is seeded with output
//! number `i + 1` of a SplitMix64 started at the configured seed. A value
//! below `m` is drawn by rejecting outputs `r < 2^64 mod m` and returning
//! `r mod m`, so it is exactly uniform. Ring elements are drawn in vector
//! order, and per candidate the draw order is `λ, μ, a, b, c` (four-circulant)
//! or `ε, δ` (building-up).
//!
//! # Streams
//!
//! Worker `i` evaluates candidates of rank `0, 1, 2, ...` from its own
//! stream. Hits from all workers are sorted by `(worker, rank)`, only the
//! first hit for each [`DedupKey`] is kept, and the list is cut to
//! `max_hits`. Without a time limit the output is a function of the
//! configuration alone.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalog::{CatalogRecord, Published, Recipe};
use crate::construct::{
    build_four_circulant, building_up_extend, check_codes, BuildingUpParams, FourCirculantParams, GeneratorOverRing,
};
use crate::error::{Error, Result};
use crate::gf2::{
    binary_generator, extract_family_params, full_weight_distribution_with, is_self_dual, low_weight_distribution_with,
    min_distance_with, BitMatrix, Family, FamilyParams,
};
use crate::ring::{dot, RingElement, RingId, RingVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Generator for worker `index`.
    pub fn substream(seed: u64, index: usize) -> Self {
        let mut root = SplitMix64::new(seed);
        let mut s = 0;
        for _ in 0..=index {
            s = root.next_u64();
        }
        SplitMix64::new(s)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..m`.
    pub fn below(&mut self, m: u64) -> u64 {
        assert!(m > 0);
        let threshold = m.wrapping_neg() % m;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % m;
            }
        }
    }

    fn pick<T: Copy>(&mut self, xs: &[T]) -> T {
        xs[self.below(xs.len() as u64) as usize]
    }

    fn codes(&mut self, order: usize, n: usize) -> Vec<u8> {
        (0..n).map(|_| self.below(order as u64) as u8).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub ring: RingId,
    /// Block size; four-circulant codes have ring length `4n`.
    pub n: usize,
    /// Allowed λ; empty means every involutory unit.
    pub lambdas: Vec<RingElement>,
    /// Allowed μ; empty means every involutory unit.
    pub mus: Vec<RingElement>,
    pub seed: u64,
    pub workers: usize,
    /// Candidates drawn in total, split evenly across workers.
    pub max_candidates: u64,
    pub max_hits: Option<usize>,
    /// Stop drawing after this long. Makes the output timing-dependent.
    pub time_limit: Option<Duration>,
    /// Sample `(μ, c)` from the precomputed set of orthogonal circulants
    /// when it fits in [`POOL_BUDGET`]; otherwise draw `c` until it passes.
    pub use_pool: bool,
    /// Drop hits with smaller minimum distance.
    pub min_distance: Option<usize>,
}

/// Largest `order^n · |μ set|` the orthogonal-circulant pool will scan.
pub const POOL_BUDGET: u128 = 1 << 24;

impl SearchConfig {
    pub fn new(ring: RingId, n: usize, seed: u64) -> Self {
        SearchConfig {
            ring,
            n,
            lambdas: Vec::new(),
            mus: Vec::new(),
            seed,
            workers: 1,
            max_candidates: 1000,
            max_hits: None,
            time_limit: None,
            use_pool: true,
            min_distance: None,
        }
    }

    pub fn binary_length(&self) -> usize {
        4 * self.n * self.ring.gray_expansion()
    }

    fn unit_set(&self, given: &[RingElement]) -> Result<Vec<u8>> {
        if given.is_empty() {
            return Ok(self.ring.involutory_units().iter().map(|u| u.code()).collect());
        }
        given
            .iter()
            .map(|u| {
                if u.ring() != self.ring {
                    return Err(Error::RingMismatch { left: self.ring, right: u.ring() });
                }
                u.require_involutory()?;
                Ok(u.code())
            })
            .collect()
    }

    fn per_worker(&self, worker: usize) -> u64 {
        let w = self.workers.max(1) as u64;
        self.max_candidates / w + u64::from((worker as u64) < self.max_candidates % w)
    }
}

/// Hits that agree on this are considered the same find.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DedupKey {
    Family {
        length: usize,
        family: Family,
        alpha: Option<i64>,
        beta: Option<i64>,
    },
    /// For lengths without a published family: `(length, d, A_d, A_{d+2})`.
    Counts {
        length: usize,
        d: usize,
        a_d: u64,
        a_d2: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub worker: usize,
    pub rank: u64,
    pub record: CatalogRecord,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `(weight, count)` for the nonzero weights `d ..= d + 2`.
    pub counts: Vec<(usize, u64)>,
    pub family: Option<FamilyParams>,
    pub key: DedupKey,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub candidates: u64,
    /// Candidates passing the construction conditions.
    pub survivors: u64,
    /// Survivors meeting the distance threshold, before deduplication.
    pub hits: u64,
    /// Whether the orthogonal-circulant pool was used.
    pub pool: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub stats: SearchStats,
}

struct Measured {
    d: usize,
    counts: Vec<(usize, u64)>,
    family: Option<FamilyParams>,
    key: DedupKey,
}

fn measure(g: &BitMatrix, workers: usize) -> Result<Measured> {
    let n = g.cols();
    let dist = if g.rows() <= 16 {
        full_weight_distribution_with(g, 16, workers)?
    } else {
        let d = min_distance_with(g, 0, workers)?;
        low_weight_distribution_with(g, d + 2, workers)?
    };
    let d = dist.min_distance().ok_or_else(|| Error::Indeterminate("no nonzero codeword found".into()))?;
    let counts: Vec<(usize, u64)> =
        (d..=d + 2).filter_map(|w| dist.count(w).filter(|&c| c > 0).map(|c| (w, c))).collect();
    let family = extract_family_params(n, &dist).ok().map(|f| f.params);
    let key = match family {
        Some(p) => DedupKey::Family { length: n, family: p.family, alpha: p.alpha, beta: p.beta },
        None => {
            DedupKey::Counts { length: n, d, a_d: dist.count(d).unwrap_or(0), a_d2: dist.count(d + 2).unwrap_or(0) }
        }
    };
    Ok(Measured { d, counts, family, key })
}

fn to_published(m: &Measured) -> Option<Published> {
    m.family.map(|family| Published { family, d: m.d, aut: None, optimal: false })
}

fn hex(codes: &[u8]) -> String {
    codes.iter().map(|&c| char::from_digit(c as u32, 16).unwrap().to_ascii_uppercase()).collect()
}

/// Every `(μ, c)` with `μ` allowed and `c` an orthogonal μ-circulant row.
fn orthogonal_pool(ring: RingId, n: usize, mus: &[u8]) -> Option<Vec<(u8, Vec<u8>)>> {
    let cost = (ring.order() as u128).checked_pow(n as u32)?.checked_mul(mus.len() as u128)?;
    if cost > POOL_BUDGET {
        return None;
    }
    let t = ring.tables();
    let mut out = Vec::new();
    let mut c = vec![0u8; n];
    loop {
        for &mu in mus {
            if crate::circulant::theta_sum_criterion(t, &[&c], mu, 1) {
                out.push((mu, c.clone()));
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return Some(out);
            }
            c[i] += 1;
            if (c[i] as usize) < ring.order() {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

fn merge(mut all: Vec<SearchHit>, max_hits: Option<usize>) -> Vec<SearchHit> {
    all.sort_by_key(|h| (h.worker, h.rank));
    let mut seen = HashSet::new();
    let mut out: Vec<SearchHit> = all.into_iter().filter(|h| seen.insert(h.key.clone())).collect();
    if let Some(m) = max_hits {
        out.truncate(m);
    }
    out
}

fn run_workers<F>(workers: usize, job: F) -> Result<(Vec<SearchHit>, SearchStats)>
where
    F: Fn(usize) -> Result<(Vec<SearchHit>, SearchStats)> + Sync,
{
    let workers = workers.max(1);
    let results: Vec<Result<(Vec<SearchHit>, SearchStats)>> = if workers == 1 {
        vec![job(0)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|i| {
                    let job = &job;
                    s.spawn(move || job(i))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };
    let mut hits = Vec::new();
    let mut stats = SearchStats::default();
    for r in results {
        let (h, s) = r?;
        hits.extend(h);
        stats.candidates += s.candidates;
        stats.survivors += s.survivors;
        stats.hits += s.hits;
    }
    Ok((hits, stats))
}

/// Random four-circulant search.
pub fn search_four_circulant(cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    if cfg.binary_length() > crate::gf2::MAX_COLS {
        return Err(Error::InvalidArgument(format!(
            "binary length {} exceeds {}",
            cfg.binary_length(),
            crate::gf2::MAX_COLS
        )));
    }
    let ring = cfg.ring;
    let lambdas = cfg.unit_set(&cfg.lambdas)?;
    let mus = cfg.unit_set(&cfg.mus)?;
    let pool = if cfg.use_pool { orthogonal_pool(ring, cfg.n, &mus) } else { None };
    if pool.as_ref().is_some_and(|p| p.is_empty()) {
        return Ok(SearchOutcome { hits: Vec::new(), stats: SearchStats { pool: true, ..Default::default() } });
    }
    let start = Instant::now();
    let order = ring.order();

    let (hits, mut stats) = run_workers(cfg.workers, |worker| {
        let mut rng = SplitMix64::substream(cfg.seed, worker);
        let mut hits = Vec::new();
        let mut stats = SearchStats::default();
        for rank in 0..cfg.per_worker(worker) {
            if cfg.time_limit.is_some_and(|l| start.elapsed() >= l) {
                break;
            }
            stats.candidates += 1;
            let lambda = rng.pick(&lambdas);
            let (mu, c) = match &pool {
                Some(p) => p[rng.below(p.len() as u64) as usize].clone(),
                None => {
                    let mu = rng.pick(&mus);
                    (mu, rng.codes(order, cfg.n))
                }
            };
            let a = rng.codes(order, cfg.n);
            let b = rng.codes(order, cfg.n);
            if !check_codes(ring, lambda, mu, &a, &b, &c) {
                continue;
            }
            stats.survivors += 1;
            let params = FourCirculantParams::new(
                RingElement::new(ring, lambda)?,
                RingElement::new(ring, mu)?,
                RingVector::new(ring, a.clone())?,
                RingVector::new(ring, b.clone())?,
                RingVector::new(ring, c.clone())?,
            )?;
            let g = binary_generator(&build_four_circulant(&params)?)?;
            if !is_self_dual(&g) {
                return Err(Error::NotSelfDual);
            }
            let m = measure(&g, 1)?;
            if cfg.min_distance.is_some_and(|t| m.d < t) {
                continue;
            }
            stats.hits += 1;
            let record = CatalogRecord {
                id: format!("S{}_{}_{}", g.cols(), worker, rank),
                ring,
                recipe: Recipe::FourCirculant {
                    lambda: RingElement::new(ring, lambda)?.symbol(),
                    mu: RingElement::new(ring, mu)?.symbol(),
                    a: hex(&a),
                    b: hex(&b),
                    c: hex(&c),
                },
                published: to_published(&m),
            };
            hits.push(SearchHit {
                worker,
                rank,
                record,
                n: g.cols(),
                k: g.rows(),
                d: m.d,
                counts: m.counts,
                family: m.family,
                key: m.key,
            });
        }
        Ok((hits, stats))
    })?;
    stats.pool = pool.is_some();
    Ok(SearchOutcome { hits: merge(hits, cfg.max_hits), stats })
}

/// Random building-up search on a fixed parent.
///
/// `parent_id` is written into the records of the hits. `cfg.n` is ignored;
/// `cfg.lambdas` restricts the choice of `ε`.
pub fn search_building_up(cfg: &SearchConfig, parent: &GeneratorOverRing, parent_id: &str) -> Result<SearchOutcome> {
    let ring = parent.ring();
    if ring != cfg.ring {
        return Err(Error::RingMismatch { left: cfg.ring, right: ring });
    }
    let two_k = parent.cols();
    if two_k != 2 * parent.rows() || !parent.is_self_orthogonal() {
        return Err(Error::Precondition("parent must generate a self-dual [2k, k] code".into()));
    }
    let pb = binary_generator(parent)?;
    if !is_self_dual(&pb) {
        return Err(Error::NotSelfDual);
    }
    if (two_k + 2) * ring.gray_expansion() > crate::gf2::MAX_COLS {
        return Err(Error::InvalidArgument("extended code is too long".into()));
    }
    let t = ring.tables();
    let minus_one = t.neg(1);
    let eps_set: Vec<u8> = cfg.unit_set(&cfg.lambdas)?.into_iter().filter(|&e| t.mul(e, e) == minus_one).collect();
    if eps_set.is_empty() {
        return Err(Error::Precondition("no allowed ε has ε² = -1".into()));
    }
    let start = Instant::now();

    let (hits, stats) = run_workers(cfg.workers, |worker| {
        let mut rng = SplitMix64::substream(cfg.seed, worker);
        let mut hits = Vec::new();
        let mut stats = SearchStats::default();
        for rank in 0..cfg.per_worker(worker) {
            if cfg.time_limit.is_some_and(|l| start.elapsed() >= l) {
                break;
            }
            stats.candidates += 1;
            let eps = rng.pick(&eps_set);
            let delta = rng.codes(ring.order(), two_k);
            if dot(t, &delta, &delta) != minus_one {
                continue;
            }
            stats.survivors += 1;
            let params = BuildingUpParams {
                parent: parent.clone(),
                epsilon: RingElement::new(ring, eps)?,
                delta: RingVector::new(ring, delta.clone())?,
            };
            let g = binary_generator(&building_up_extend(&params)?)?;
            if !is_self_dual(&g) {
                return Err(Error::NotSelfDual);
            }
            let m = measure(&g, 1)?;
            if cfg.min_distance.is_some_and(|t| m.d < t) {
                continue;
            }
            stats.hits += 1;
            let record = CatalogRecord {
                id: format!("S{}_{}_{}", g.cols(), worker, rank),
                ring,
                recipe: Recipe::BuildingUp {
                    parent: parent_id.to_string(),
                    premap: None,
                    epsilon: RingElement::new(ring, eps)?.symbol(),
                    delta: hex(&delta),
                },
                published: to_published(&m),
            };
            hits.push(SearchHit {
                worker,
                rank,
                record,
                n: g.cols(),
                k: g.rows(),
                d: m.d,
                counts: m.counts,
                family: m.family,
                key: m.key,
            });
        }
        Ok((hits, stats))
    })?;
    Ok(SearchOutcome { hits: merge(hits, cfg.max_hits), stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0, as published with the algorithm
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn substreams_differ_and_repeat() {
        let a: Vec<u64> = (0..4).map(|i| SplitMix64::substream(7, i).next_u64()).collect();
        let b: Vec<u64> = (0..4).map(|i| SplitMix64::substream(7, i).next_u64()).collect();
        assert_eq!(a, b);
        assert_eq!(a.iter().collect::<HashSet<_>>().len(), 4);
    }

    #[test]
    fn below_is_in_range() {
        let mut r = SplitMix64::new(1);
        for m in [1u64, 2, 3, 16, 1000, u64::MAX] {
            for _ in 0..100 {
                assert!(r.below(m) < m);
            }
        }
    }

    #[test]
    fn zero_candidates_gives_nothing() {
        let mut cfg = SearchConfig::new(RingId::F2, 4, 1);
        cfg.max_candidates = 0;
        let out = search_four_circulant(&cfg).unwrap();
        assert!(out.hits.is_empty());
        assert_eq!(out.stats.candidates, 0);
    }

    #[test]
    fn small_search_finds_self_dual_codes() {
        let mut cfg = SearchConfig::new(RingId::F2, 4, 3);
        cfg.max_candidates = 400;
        let out = search_four_circulant(&cfg).unwrap();
        assert!(!out.hits.is_empty());
        for h in &out.hits {
            assert_eq!((h.n, h.k), (16, 8));
        }
        let keys: HashSet<_> = out.hits.iter().map(|h| &h.key).collect();
        assert_eq!(keys.len(), out.hits.len());
    }

    #[test]
    fn pool_covers_every_orthogonal_circulant() {
        let mus: Vec<u8> = RingId::F2U.involutory_units().iter().map(|u| u.code()).collect();
        let pool = orthogonal_pool(RingId::F2U, 4, &mus).unwrap();
        assert_eq!(pool.len() as u64, crate::construct::count_orthogonal_circulants(RingId::F2U, 4).unwrap());
    }
}
