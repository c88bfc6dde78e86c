//! Generator matrices from the λ-circulant four-block construction and the
//! building-up extension, plus the orthogonal-circulant census.
//!
//! The four-block generator is `(I_2n | X)` with
//!
//! ```text
//!     X = | -AᵀCJ  -B |
//!         |  BᵀCJ  -A |
//! ```
//!
//! where `A`, `B` are λ-circulant, `C` is μ-circulant (or any orthogonal
//! matrix) and `J` is the exchange matrix. It generates a self-dual code iff
//! `AAᵀ + BBᵀ = -I` and `CCᵀ = I`.

use serde::Serialize;

use crate::circulant::{exchange_matrix, lambda_circulant, theta_sum_criterion, LambdaCirculant, RingMatrix};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ring::{dot, RingElement, RingId, RingVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCirculantParams {
    pub lambda: RingElement,
    pub mu: RingElement,
    pub a: RingVector,
    pub b: RingVector,
    pub c: RingVector,
}

impl FourCirculantParams {
    /// Validates shared ring, equal lengths and `λ² = μ² = 1`.
    pub fn new(lambda: RingElement, mu: RingElement, a: RingVector, b: RingVector, c: RingVector) -> Result<Self> {
        let ring = a.ring();
        for r in [lambda.ring(), mu.ring(), b.ring(), c.ring()] {
            if r != ring {
                return Err(Error::RingMismatch { left: ring, right: r });
            }
        }
        if a.is_empty() {
            return Err(Error::InvalidArgument("empty generating vector".into()));
        }
        for len in [b.len(), c.len()] {
            if len != a.len() {
                return Err(Error::LengthMismatch { left: a.len(), right: len });
            }
        }
        lambda.require_involutory()?;
        mu.require_involutory()?;
        Ok(FourCirculantParams { lambda, mu, a, b, c })
    }

    /// Parse hex vectors with `λ = μ = 1`.
    pub fn parse_unit(ring: RingId, a: &str, b: &str, c: &str) -> Result<Self> {
        Self::parse(ring, '1', '1', a, b, c)
    }

    pub fn parse(ring: RingId, lambda: char, mu: char, a: &str, b: &str, c: &str) -> Result<Self> {
        Self::new(
            RingElement::from_symbol(ring, lambda)?,
            RingElement::from_symbol(ring, mu)?,
            RingVector::parse(ring, a)?,
            RingVector::parse(ring, b)?,
            RingVector::parse(ring, c)?,
        )
    }

    pub fn ring(&self) -> RingId {
        self.a.ring()
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

/// A generator matrix over a ring; one code is one row space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOverRing {
    pub matrix: RingMatrix,
}

impl GeneratorOverRing {
    pub fn new(matrix: RingMatrix) -> Self {
        GeneratorOverRing { matrix }
    }

    /// View a binary generator as a generator over `F2`.
    pub fn from_bits(bits: &BitMatrix) -> Self {
        let mut m = RingMatrix::zeros(RingId::F2, bits.rows(), bits.cols());
        for i in 0..bits.rows() {
            for j in 0..bits.cols() {
                m.set_code(i, j, bits.get(i, j) as u8);
            }
        }
        GeneratorOverRing { matrix: m }
    }

    pub fn ring(&self) -> RingId {
        self.matrix.ring()
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// Every pair of rows is orthogonal.
    pub fn is_self_orthogonal(&self) -> bool {
        self.matrix.gram().is_zero()
    }

    /// Whether the left `rows × rows` block is the identity.
    pub fn has_identity_prefix(&self) -> bool {
        let k = self.rows();
        k <= self.cols() && (0..k).all(|i| (0..k).all(|j| self.matrix.code(i, j) == (i == j) as u8))
    }
}

fn blocks(p: &FourCirculantParams) -> Result<(RingMatrix, RingMatrix, RingMatrix)> {
    let a = lambda_circulant(&LambdaCirculant { lambda: p.lambda, gen: p.a.clone() })?;
    let b = lambda_circulant(&LambdaCirculant { lambda: p.lambda, gen: p.b.clone() })?;
    let c = lambda_circulant(&LambdaCirculant { lambda: p.mu, gen: p.c.clone() })?;
    Ok((a, b, c))
}

/// `(I_2n | X)`; builds the matrix only, without asserting self-duality.
pub fn build_four_circulant(p: &FourCirculantParams) -> Result<GeneratorOverRing> {
    let (a, b, c) = blocks(p)?;
    assemble(p.ring(), &a, &b, &c)
}

/// Variant taking an explicit matrix `C` instead of `(μ, c)`; `C` must satisfy `CCᵀ = I`.
pub fn build_four_circulant_with_orthogonal(
    lambda: RingElement,
    a: &RingVector,
    b: &RingVector,
    c: &RingMatrix,
) -> Result<GeneratorOverRing> {
    let ring = a.ring();
    lambda.require_involutory()?;
    if c.ring() != ring {
        return Err(Error::RingMismatch { left: ring, right: c.ring() });
    }
    if !c.is_square() || c.rows() != a.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: c.rows() });
    }
    if c.gram() != RingMatrix::identity(ring, c.rows()) {
        return Err(Error::Precondition("C·Cᵀ = I".into()));
    }
    let am = lambda_circulant(&LambdaCirculant { lambda, gen: a.clone() })?;
    let bm = lambda_circulant(&LambdaCirculant { lambda, gen: b.clone() })?;
    assemble(ring, &am, &bm, c)
}

fn assemble(ring: RingId, a: &RingMatrix, b: &RingMatrix, c: &RingMatrix) -> Result<GeneratorOverRing> {
    let n = a.rows();
    let cj = c.try_mul(&exchange_matrix(ring, n))?;
    let top_left = a.transpose().try_mul(&cj)?.neg();
    let bottom_left = b.transpose().try_mul(&cj)?;
    let mut g = RingMatrix::zeros(ring, 2 * n, 4 * n);
    g.paste(0, 0, &RingMatrix::identity(ring, 2 * n));
    g.paste(0, 2 * n, &top_left);
    g.paste(0, 3 * n, &b.neg());
    g.paste(n, 2 * n, &bottom_left);
    g.paste(n, 3 * n, &a.neg());
    Ok(GeneratorOverRing::new(g))
}

/// The Θ-only self-duality test: `Σ_{x∈{a,b}} Θ(x,x,j)[λ]` is `-1, 0, …, 0`
/// and `Θ(c,c,j)[μ]` is `1, 0, …, 0` for `j ∈ [0, ⌊n/2⌋]`.
pub fn check_four_circulant(p: &FourCirculantParams) -> bool {
    check_codes(p.ring(), p.lambda.code(), p.mu.code(), p.a.codes(), p.b.codes(), p.c.codes())
}

/// Allocation-free form of [`check_four_circulant`] for the search loop.
#[inline]
pub(crate) fn check_codes(ring: RingId, lambda: u8, mu: u8, a: &[u8], b: &[u8], c: &[u8]) -> bool {
    let t = ring.tables();
    theta_sum_criterion(t, &[a, b], lambda, t.neg(1)) && theta_sum_criterion(t, &[c], mu, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingUpParams {
    pub parent: GeneratorOverRing,
    pub epsilon: RingElement,
    pub delta: RingVector,
}

/// Extend a self-dual `[2k, k]` code to a self-dual `[2k+2, k+1]` code.
///
/// The result has first row `(1, 0, δ)` and row `i+1` equal to
/// `(-γ_i, εγ_i, r_i)` with `γ_i = <r_i, δ>`.
pub fn building_up_extend(p: &BuildingUpParams) -> Result<GeneratorOverRing> {
    let ring = p.parent.ring();
    let (k, two_k) = (p.parent.rows(), p.parent.cols());
    if p.epsilon.ring() != ring {
        return Err(Error::RingMismatch { left: ring, right: p.epsilon.ring() });
    }
    if p.delta.ring() != ring {
        return Err(Error::RingMismatch { left: ring, right: p.delta.ring() });
    }
    if two_k != 2 * k {
        return Err(Error::Precondition(format!("parent must be [2k, k], got {k}×{two_k}")));
    }
    if p.delta.len() != two_k {
        return Err(Error::Precondition(format!("δ must have length {two_k}, got {}", p.delta.len())));
    }
    let t = ring.tables();
    let minus_one = t.neg(1);
    if p.epsilon.square().code() != minus_one {
        return Err(Error::Precondition("ε² = -1".into()));
    }
    if dot(t, p.delta.codes(), p.delta.codes()) != minus_one {
        return Err(Error::Precondition("<δ, δ> = -1".into()));
    }
    if !p.parent.is_self_orthogonal() {
        return Err(Error::Precondition("parent rows are not self-orthogonal".into()));
    }

    let mut g = RingMatrix::zeros(ring, k + 1, two_k + 2);
    g.set_code(0, 0, 1);
    for (j, &d) in p.delta.codes().iter().enumerate() {
        g.set_code(0, j + 2, d);
    }
    for i in 0..k {
        let r = p.parent.matrix.row_codes(i);
        let gamma = dot(t, r, p.delta.codes());
        g.set_code(i + 1, 0, t.neg(gamma));
        g.set_code(i + 1, 1, t.mul(p.epsilon.code(), gamma));
        for (j, &x) in r.iter().enumerate() {
            g.set_code(i + 1, j + 2, x);
        }
    }
    Ok(GeneratorOverRing::new(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantCensus {
    /// Pairs `(μ, c)` with `μ² = 1` and `C·Cᵀ = I`.
    pub pairs: u64,
    /// Distinct matrices among those pairs.
    pub distinct_matrices: u64,
}

/// Default limit on `|R|^n · |U'|` Θ evaluations for the census.
pub const CENSUS_BUDGET: u128 = 1 << 32;

/// Number of pairs `(μ, c)` such that the μ-circulant of `c` is orthogonal.
pub fn count_orthogonal_circulants(ring: RingId, n: usize) -> Result<u64> {
    Ok(orthogonal_circulant_census(ring, n, CENSUS_BUDGET)?.pairs)
}

pub fn orthogonal_circulant_census(ring: RingId, n: usize, budget: u128) -> Result<CirculantCensus> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let units: Vec<u8> = ring.involutory_units().iter().map(|u| u.code()).collect();
    let estimated = (ring.order() as u128)
        .checked_pow(n as u32)
        .and_then(|s| s.checked_mul(units.len() as u128))
        .unwrap_or(u128::MAX);
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let t = ring.tables();
    let order = ring.order() as u8;
    let mut c = vec![0u8; n];
    let mut census = CirculantCensus { pairs: 0, distinct_matrices: 0 };
    let mut tails: Vec<Vec<u8>> = Vec::with_capacity(units.len());
    loop {
        tails.clear();
        for &mu in &units {
            if theta_sum_criterion(t, &[&c], mu, 1) {
                census.pairs += 1;
                // μ enters the matrix only through the wrapped entries μ·c_1 … μ·c_{n-1}
                let tail: Vec<u8> = c[1..].iter().map(|&x| t.mul(mu, x)).collect();
                if !tails.contains(&tail) {
                    tails.push(tail);
                }
            }
        }
        census.distinct_matrices += tails.len() as u64;
        // odometer step
        let mut i = 0;
        loop {
            if i == n {
                return Ok(census);
            }
            c[i] += 1;
            if c[i] < order {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}
