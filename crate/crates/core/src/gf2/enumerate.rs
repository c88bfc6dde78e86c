//! Codeword enumeration.
//!
//! Full enumeration walks all `2^k` messages in binary reflected Gray order,
//! so each step is one row XOR and one popcount.
//!
//! Low-weight enumeration uses the two halves of a self-dual `(I | A)` code
//! as disjoint information sets. A word of weight `<= 2p` has at most `p`
//! ones in one half, so enumerating messages of weight `<= p` through the
//! left generator `(I | A)` and through the right generator `(A⁻¹ | I)`
//! finds all of them; words light on both halves are seen twice and are
//! subtracted during the left pass. Messages of a fixed weight are visited
//! in revolving-door order, one element swapped per step.
//!
//! Both enumerations split into shards that can run on separate workers;
//! merged counts do not depend on the shard count.

use std::thread;

use super::bitmatrix::{invert_square, BitMatrix};
use super::weights::WeightDistribution;
use crate::error::{Error, Result};

/// Default bound on the dimension for full enumeration.
pub const FULL_ENUMERATION_LIMIT: usize = 32;

/// Shard `index` of `count` equal parts of a message space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    fn validate(self) -> Result<()> {
        if self.count == 0 || self.index >= self.count {
            return Err(Error::InvalidArgument(format!("bad shard {}/{}", self.index, self.count)));
        }
        Ok(())
    }
}

pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

/// Run `job` for every shard on up to `workers` threads and add the results.
fn run_sharded<F>(workers: usize, len: usize, job: F) -> Vec<u64>
where
    F: Fn(Shard) -> Vec<u64> + Sync,
{
    let workers = workers.max(1);
    if workers == 1 {
        return job(Shard::WHOLE);
    }
    let parts: Vec<Vec<u64>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|index| {
                let job = &job;
                s.spawn(move || job(Shard { index, count: workers }))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });
    let mut total = vec![0u64; len];
    for p in parts {
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    total
}

/// Complete weight distribution by Gray-code enumeration of the row space.
pub fn full_weight_distribution(g: &BitMatrix) -> Result<WeightDistribution> {
    full_weight_distribution_with(g, FULL_ENUMERATION_LIMIT, default_workers())
}

pub fn full_weight_distribution_with(g: &BitMatrix, limit: usize, workers: usize) -> Result<WeightDistribution> {
    let basis = g.independent_rows();
    if basis.len() > limit {
        return Err(Error::EnumerationLimit { k: basis.len(), limit });
    }
    let n = g.cols();
    let counts = run_sharded(workers, n + 1, |shard| gray_sweep(&basis, n, shard));
    Ok(WeightDistribution::complete(n, counts))
}

/// Counts for one shard of the Gray-code sweep over a basis (`k <= 63`).
pub fn full_enumeration_shard(g: &BitMatrix, shard: Shard) -> Result<Vec<u64>> {
    shard.validate()?;
    let basis = g.independent_rows();
    if basis.len() > 63 {
        return Err(Error::EnumerationLimit { k: basis.len(), limit: 63 });
    }
    Ok(gray_sweep(&basis, g.cols(), shard))
}

fn gray_sweep(basis: &[u128], n: usize, shard: Shard) -> Vec<u64> {
    let total = 1u64 << basis.len();
    let per = total.div_ceil(shard.count as u64);
    let lo = (per * shard.index as u64).min(total);
    let hi = (lo + per).min(total);
    let mut counts = vec![0u64; n + 1];
    if lo >= hi {
        return counts;
    }
    let start = lo ^ (lo >> 1);
    let mut word = 0u128;
    for (i, &r) in basis.iter().enumerate() {
        if (start >> i) & 1 == 1 {
            word ^= r;
        }
    }
    counts[word.count_ones() as usize] += 1;
    for step in lo + 1..hi {
        word ^= basis[step.trailing_zeros() as usize];
        counts[word.count_ones() as usize] += 1;
    }
    counts
}

/// Visit every `t`-subset of `{0, …, n-1}` in revolving-door order.
///
/// `visit` is called first with the initial subset `{0, …, t-1}` as
/// `(None, set)`, then once per step with the element swapped out and the
/// element swapped in. Each step changes exactly one element.
pub fn revolving_door<F>(n: usize, t: usize, mut visit: F)
where
    F: FnMut(Option<(usize, usize)>, &[usize]),
{
    if t > n {
        return;
    }
    // c[1..=t] hold the subset, c[t+1] = n is a sentinel; c[0] is unused.
    let mut c: Vec<usize> = (0..t + 2).map(|j| j.saturating_sub(1)).collect();
    c[t + 1] = n;
    visit(None, &c[1..=t]);
    if t == 0 || t == n {
        return;
    }
    loop {
        let swap;
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                swap = (c[1], c[1] + 1);
                c[1] += 1;
                visit(Some(swap), &c[1..=t]);
                continue;
            }
            match door_climb(&mut c, t, 2, true) {
                Some(s) => swap = s,
                None => return,
            }
        } else {
            if c[1] > 0 {
                swap = (c[1], c[1] - 1);
                c[1] -= 1;
                visit(Some(swap), &c[1..=t]);
                continue;
            }
            match door_climb(&mut c, t, 2, false) {
                Some(s) => swap = s,
                None => return,
            }
        }
        visit(Some(swap), &c[1..=t]);
    }
}

/// The non-trivial steps of the revolving-door successor, alternating
/// between trying to decrease and to increase `c[j]`.
#[inline]
fn door_climb(c: &mut [usize], t: usize, mut j: usize, mut decrease: bool) -> Option<(usize, usize)> {
    loop {
        if j > t {
            return None;
        }
        if decrease {
            // here c[j] = c[j-1] + 1
            if c[j] >= j {
                let out = c[j];
                c[j] = c[j - 1];
                c[j - 1] = j - 2;
                return Some((out, j - 2));
            }
            j += 1;
            decrease = false;
        } else {
            // here c[j-1] = j - 2
            if c[j] + 1 < c[j + 1] {
                let out = c[j - 1];
                c[j - 1] = c[j];
                c[j] += 1;
                return Some((out, c[j]));
            }
            j += 1;
            decrease = true;
        }
    }
}

/// Precomputed halves of a self-dual `(I_k | A)` generator.
#[derive(Clone, Debug)]
pub struct TwoSidedEnumerator {
    k: usize,
    /// Row `i` of `A`: right half of the codeword with message `e_i`.
    left: Vec<u64>,
    /// Row `i` of `A⁻¹`: left half of the codeword whose right half is `e_i`.
    right: Vec<u64>,
}

impl TwoSidedEnumerator {
    /// Requires a self-dual code with `k <= 64`.
    pub fn new(g: &BitMatrix) -> Result<Self> {
        if !super::is_self_dual(g) {
            return Err(Error::NotSelfDual);
        }
        let k = g.cols() / 2;
        if k > 64 {
            return Err(Error::InvalidArgument(format!("dimension {k} exceeds 64")));
        }
        let basis = g.basis();
        let sys = basis.systematic_form()?;
        let half_mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let left: Vec<u64> = sys.matrix.row_words().iter().map(|&r| ((r >> k) as u64) & half_mask).collect();
        let right = invert_square(&left)
            .ok_or_else(|| Error::InvalidArgument("right half is not an information set".into()))?;
        Ok(TwoSidedEnumerator { k, left, right })
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    fn tasks(&self, p: usize) -> Vec<(usize, usize)> {
        let mut tasks = vec![(0, 0)];
        for i in 1..=p.min(self.k) {
            for top in i - 1..self.k {
                tasks.push((i, top));
            }
        }
        tasks
    }

    /// Net counts for one shard, indexed by weight `0..=w_max`.
    pub fn shard_counts(&self, w_max: usize, shard: Shard) -> Result<Vec<i64>> {
        shard.validate()?;
        let w_max = w_max - w_max % 2;
        let p = w_max / 2;
        let mut net = vec![0i64; w_max + 1];
        for (idx, &(i, top)) in self.tasks(p).iter().enumerate() {
            if idx % shard.count != shard.index {
                continue;
            }
            let mut hits = vec![0u64; w_max + 1];
            let mut doubles = vec![0u64; w_max + 1];
            sweep_task(&self.left, i, top, w_max, Some((p, &mut doubles)), &mut hits);
            sweep_task(&self.right, i, top, w_max, None, &mut hits);
            for w in 0..=w_max {
                net[w] += hits[w] as i64 - doubles[w] as i64;
            }
        }
        Ok(net)
    }
}

/// All messages of weight `i` whose largest support index is `top`, through
/// the half-matrix `rows`; counts words of total weight `<= w_max`. With
/// `doubles`, words whose other half also has weight `<= p` are tallied there.
fn sweep_task(
    rows: &[u64],
    i: usize,
    top: usize,
    w_max: usize,
    doubles: Option<(usize, &mut Vec<u64>)>,
    hits: &mut [u64],
) {
    if i == 0 {
        hits[0] += 1;
        if let Some((_, d)) = doubles {
            d[0] += 1;
        }
        return;
    }
    let base = rows[top];
    let s = i - 1;
    let mut acc = rows[..s].iter().fold(base, |a, &r| a ^ r);
    match doubles {
        Some((p, d)) => revolving_door(top, s, |swap, _| {
            if let Some((out, inn)) = swap {
                acc ^= rows[out] ^ rows[inn];
            }
            let other = acc.count_ones() as usize;
            let w = i + other;
            if w <= w_max {
                hits[w] += 1;
                if other <= p {
                    d[w] += 1;
                }
            }
        }),
        None => revolving_door(top, s, |swap, _| {
            if let Some((out, inn)) = swap {
                acc ^= rows[out] ^ rows[inn];
            }
            let w = i + acc.count_ones() as usize;
            if w <= w_max {
                hits[w] += 1;
            }
        }),
    }
}

/// Exact `A_w` for all `w <= w_max` of a self-dual code (odd `w_max` is
/// rounded down).
pub fn low_weight_distribution(g: &BitMatrix, w_max: usize) -> Result<WeightDistribution> {
    low_weight_distribution_with(g, w_max, default_workers())
}

pub fn low_weight_distribution_with(g: &BitMatrix, w_max: usize, workers: usize) -> Result<WeightDistribution> {
    let e = TwoSidedEnumerator::new(g)?;
    let w_max = w_max - w_max % 2;
    let workers = workers.max(1);
    let net: Vec<i64> = if workers == 1 {
        e.shard_counts(w_max, Shard::WHOLE)?
    } else {
        let parts: Vec<Vec<i64>> = thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|index| {
                    let e = &e;
                    s.spawn(move || e.shard_counts(w_max, Shard { index, count: workers }))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect::<Result<_>>()
        })?;
        (0..=w_max).map(|w| parts.iter().map(|p| p[w]).sum()).collect()
    };
    let counts = net
        .into_iter()
        .map(|c| u64::try_from(c).map_err(|_| Error::InvalidArgument("negative net count".into())))
        .collect::<Result<Vec<u64>>>()?;
    Ok(WeightDistribution::partial(g.cols(), counts, w_max))
}

/// Smallest nonzero weight. Uses full enumeration when the dimension is at
/// most `limit`, otherwise low-weight passes with `w_max = 2, 4, …`.
pub fn min_distance(g: &BitMatrix) -> Result<usize> {
    min_distance_with(g, FULL_ENUMERATION_LIMIT.min(28), default_workers())
}

pub fn min_distance_with(g: &BitMatrix, limit: usize, workers: usize) -> Result<usize> {
    let k = g.rank();
    if k == 0 {
        return Err(Error::InvalidArgument("zero code has no minimum distance".into()));
    }
    if k <= limit {
        let d = full_weight_distribution_with(g, limit, workers)?;
        return d.min_distance().ok_or_else(|| Error::InvalidArgument("zero code".into()));
    }
    let e = TwoSidedEnumerator::new(g)?;
    let mut w_max = 2;
    loop {
        let net = e.shard_counts(w_max, Shard::WHOLE)?;
        if let Some(w) = (1..=w_max).find(|&w| net[w] > 0) {
            return Ok(w);
        }
        w_max += 2;
        if w_max > g.cols() {
            return Err(Error::InvalidArgument("no nonzero codeword found".into()));
        }
    }
}
