use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Codeword counts by Hamming weight.
///
/// A partial distribution is exact for every weight `<= w_max` and says
/// nothing about heavier words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub counts: Vec<u64>,
    pub complete: bool,
    pub w_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeType {
    /// Singly-even: some weight is not a multiple of 4.
    TypeI,
    /// Doubly-even: every weight is a multiple of 4.
    TypeII,
}

impl WeightDistribution {
    pub fn complete(n: usize, counts: Vec<u64>) -> Self {
        assert_eq!(counts.len(), n + 1);
        WeightDistribution { n, counts, complete: true, w_max: n }
    }

    pub fn partial(n: usize, mut counts: Vec<u64>, w_max: usize) -> Self {
        let w_max = w_max.min(n);
        counts.resize(n + 1, 0);
        for c in counts.iter_mut().skip(w_max + 1) {
            *c = 0;
        }
        WeightDistribution { n, counts, complete: w_max == n, w_max }
    }

    /// `A_w` if it is known.
    pub fn count(&self, w: usize) -> Option<u64> {
        (w <= self.w_max).then(|| self.counts[w])
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(w, A_w)` for every known weight with a nonzero count.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().take(self.w_max + 1).filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c))
    }

    /// Smallest nonzero weight seen, if any lies within range.
    pub fn min_distance(&self) -> Option<usize> {
        self.nonzero().map(|(w, _)| w).find(|&w| w > 0)
    }

    /// Pointwise sum of two distributions over the same range.
    pub fn merge(&mut self, other: &WeightDistribution) {
        assert_eq!((self.n, self.w_max), (other.n, other.w_max));
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// Binary MacWilliams transform `B_j = |C|⁻¹ Σ_i A_i K_j(i)` of a complete
    /// distribution. `None` if some `B_j` is not an integer.
    pub fn macwilliams_transform(&self) -> Result<Option<Vec<i128>>> {
        if !self.complete {
            return Err(Error::Indeterminate("MacWilliams transform needs a complete distribution".into()));
        }
        let n = self.n;
        let size = self.total() as i128;
        let binom = binomials(n);
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc: i128 = 0;
            for (i, &a) in self.counts.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                acc += a as i128 * krawtchouk(&binom, n, j, i);
            }
            if acc % size != 0 {
                return Ok(None);
            }
            out.push(acc / size);
        }
        Ok(Some(out))
    }
}

fn binomials(n: usize) -> Vec<Vec<i128>> {
    let mut c = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = 1;
        for j in 1..=i {
            c[i][j] = c[i - 1][j - 1] + if j < i { c[i - 1][j] } else { 0 };
        }
    }
    c
}

/// `K_j(i) = Σ_s (-1)^s C(i,s) C(n-i, j-s)`.
fn krawtchouk(binom: &[Vec<i128>], n: usize, j: usize, i: usize) -> i128 {
    (0..=j.min(i))
        .filter(|&s| j - s <= n - i)
        .map(|s| {
            let term = binom[i][s] * binom[n - i][j - s];
            if s % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Type II iff every weight is `≡ 0 (mod 4)`. A partial distribution can only
/// prove Type I, through a witness weight.
pub fn classify_type(dist: &WeightDistribution) -> Result<CodeType> {
    let mut any = false;
    for (w, _) in dist.nonzero().filter(|&(w, _)| w > 0) {
        any = true;
        if w % 4 != 0 {
            return Ok(CodeType::TypeI);
        }
    }
    if !any {
        return Err(Error::Indeterminate("no nonzero weights observed".into()));
    }
    if dist.complete {
        Ok(CodeType::TypeII)
    } else {
        Err(Error::Indeterminate("partial distribution cannot certify Type II".into()))
    }
}
