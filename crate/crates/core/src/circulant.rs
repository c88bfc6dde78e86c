//! λ-circulant matrices, the exchange matrix and the Θ functional.
//!
//! The Θ-based criteria decide products such as `A Aᵀ = -I` from
//! `⌊n/2⌋ + 1` ring values of the generating vectors, without building `A`.

use crate::error::{Error, Result};
use crate::ring::{dot, RingElement, RingId, RingVector, Tables};

/// A dense matrix over one ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    ring: RingId,
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl RingMatrix {
    pub fn zeros(ring: RingId, rows: usize, cols: usize) -> Self {
        RingMatrix { ring, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(ring: RingId, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(ring: RingId, rows: &[RingVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.ring() != ring {
                return Err(Error::RingMismatch { left: ring, right: r.ring() });
            }
            if r.len() != cols {
                return Err(Error::LengthMismatch { left: cols, right: r.len() });
            }
            entries.extend_from_slice(r.codes());
        }
        Ok(RingMatrix { ring, rows: rows.len(), cols, entries })
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> RingElement {
        RingElement::new(self.ring, self.entries[i * self.cols + j]).expect("valid code")
    }

    pub(crate) fn code(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub(crate) fn set_code(&mut self, i: usize, j: usize, c: u8) {
        self.entries[i * self.cols + j] = c;
    }

    pub fn row(&self, i: usize) -> RingVector {
        RingVector::from_codes_unchecked(self.ring, self.row_codes(i).to_vec())
    }

    pub(crate) fn row_codes(&self, i: usize) -> &[u8] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.code(i, j);
            }
        }
        t
    }

    pub fn try_mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { left: self.cols, right: other.rows });
        }
        let t = self.ring.tables();
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc = t.add(acc, t.mul(self.code(i, k), other.code(k, j)));
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring, right: other.ring });
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::LengthMismatch { left: self.rows * self.cols, right: other.rows * other.cols });
        }
        let t = self.ring.tables();
        let entries = self.entries.iter().zip(&other.entries).map(|(&a, &b)| t.add(a, b)).collect();
        Ok(RingMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries })
    }

    pub fn neg(&self) -> RingMatrix {
        let t = self.ring.tables();
        let entries = self.entries.iter().map(|&a| t.neg(a)).collect();
        RingMatrix { ring: self.ring, rows: self.rows, cols: self.cols, entries }
    }

    /// `self · selfᵀ`.
    pub fn gram(&self) -> RingMatrix {
        let t = self.ring.tables();
        let mut out = Self::zeros(self.ring, self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                out.entries[i * self.rows + j] = dot(t, self.row_codes(i), self.row_codes(j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&c| c == 0)
    }

    /// Place `block` with its top-left corner at `(r0, c0)`.
    pub(crate) fn paste(&mut self, r0: usize, c0: usize, block: &RingMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set_code(r0 + i, c0 + j, block.code(i, j));
            }
        }
    }

    /// If this matrix is λ-circulant, its generating vector.
    pub fn lambda_circulant_generator(&self, lambda: RingElement) -> Option<RingVector> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let gen = self.row(0);
        let rebuilt = lambda_circulant(&LambdaCirculant { lambda, gen: gen.clone() }).ok()?;
        (rebuilt == *self).then_some(gen)
    }
}

/// A λ-circulant matrix described by `λ` and its first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaCirculant {
    pub lambda: RingElement,
    pub gen: RingVector,
}

/// Row 0 is the generating vector; each later row is the previous one rotated
/// right by one place, with the wrapped entry multiplied by `λ`.
pub fn lambda_circulant(spec: &LambdaCirculant) -> Result<RingMatrix> {
    let ring = spec.gen.ring();
    if spec.lambda.ring() != ring {
        return Err(Error::RingMismatch { left: ring, right: spec.lambda.ring() });
    }
    let t = ring.tables();
    let n = spec.gen.len();
    let mut m = RingMatrix::zeros(ring, n, n);
    let mut row = spec.gen.codes().to_vec();
    for i in 0..n {
        m.entries[i * n..(i + 1) * n].copy_from_slice(&row);
        row.rotate_right(1);
        row[0] = t.mul(spec.lambda.code(), row[0]);
    }
    Ok(m)
}

/// The `n × n` anti-diagonal identity.
pub fn exchange_matrix(ring: RingId, n: usize) -> RingMatrix {
    let mut m = RingMatrix::zeros(ring, n, n);
    for i in 0..n {
        m.entries[i * n + (n - 1 - i)] = 1;
    }
    m
}

/// Θ(x, y, j)[λ] over raw codes.
///
/// Splitting the sum at `i = n - j` replaces the residue `[i+j]_n` with two
/// straight index ranges.
#[inline]
pub(crate) fn theta_codes(t: &Tables, x: &[u8], y: &[u8], j: usize, lambda: u8) -> u8 {
    let n = x.len();
    if j == 0 {
        return dot(t, x, y);
    }
    let head = dot(t, &x[j..], &y[..n - j]);
    let tail = dot(t, &x[..j], &y[n - j..]);
    t.add(head, t.mul(lambda, tail))
}

/// `Θ(x, y, j)[λ] = Σ_{i<n-j} x_{[i+j]} y_i + λ Σ_{i≥n-j} x_{[i+j]} y_i`;
/// at `j = 0` it is the plain inner product and `λ` is ignored.
pub fn theta(x: &RingVector, y: &RingVector, j: usize, lambda: RingElement) -> Result<RingElement> {
    check_pair(x, y)?;
    if lambda.ring() != x.ring() {
        return Err(Error::RingMismatch { left: x.ring(), right: lambda.ring() });
    }
    if j >= x.len() {
        return Err(Error::InvalidArgument(format!("shift {j} out of range for length {}", x.len())));
    }
    let code = theta_codes(x.ring().tables(), x.codes(), y.codes(), j, lambda.code());
    RingElement::new(x.ring(), code)
}

fn check_pair(x: &RingVector, y: &RingVector) -> Result<()> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch { left: x.ring(), right: y.ring() });
    }
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.is_empty() {
        return Err(Error::InvalidArgument("empty vector".into()));
    }
    Ok(())
}

/// The generating vector `(v_0, …, v_{n-1})` of the λ-circulant `B·Aᵀ`,
/// where `v_j = Θ(b, a, j)[λ]`. Requires `λ² = 1`.
pub fn circulant_product_vector(b: &RingVector, a: &RingVector, lambda: RingElement) -> Result<RingVector> {
    check_pair(b, a)?;
    lambda.require_involutory()?;
    let t = a.ring().tables();
    let codes = (0..a.len()).map(|j| theta_codes(t, b.codes(), a.codes(), j, lambda.code())).collect();
    Ok(RingVector::from_codes_unchecked(a.ring(), codes))
}

/// Whether `Σ_{x∈S} Θ(x,x,j)[λ]` equals `target` at `j = 0` and vanishes for
/// `j ∈ [1, ⌊n/2⌋]`. The remaining shifts follow from `f(j) = λ f(n-j)`.
#[inline]
pub(crate) fn theta_sum_criterion(t: &Tables, set: &[&[u8]], lambda: u8, target: u8) -> bool {
    let n = set[0].len();
    for j in 0..=n / 2 {
        let mut acc = 0;
        for x in set {
            acc = t.add(acc, theta_codes(t, x, x, j, lambda));
        }
        let want = if j == 0 { target } else { 0 };
        if acc != want {
            return false;
        }
    }
    true
}

fn check_set(set: &[RingVector], lambda: RingElement) -> Result<()> {
    let first = set.first().ok_or_else(|| Error::InvalidArgument("empty vector set".into()))?;
    for x in set {
        check_pair(first, x)?;
    }
    if lambda.ring() != first.ring() {
        return Err(Error::RingMismatch { left: first.ring(), right: lambda.ring() });
    }
    lambda.require_involutory()
}

/// True iff `Σ_{X} X·Xᵀ = -I` for the λ-circulants `X` generated by the
/// vectors in `set`, decided through Θ alone.
pub fn satisfies_neg_identity(set: &[RingVector], lambda: RingElement) -> Result<bool> {
    check_set(set, lambda)?;
    let ring = lambda.ring();
    let t = ring.tables();
    let rows: Vec<&[u8]> = set.iter().map(|x| x.codes()).collect();
    Ok(theta_sum_criterion(t, &rows, lambda.code(), t.neg(1)))
}

/// True iff the μ-circulant `C` generated by `c` satisfies `C·Cᵀ = I`.
pub fn is_orthogonal_circulant(c: &RingVector, mu: RingElement) -> Result<bool> {
    check_set(std::slice::from_ref(c), mu)?;
    let t = c.ring().tables();
    Ok(theta_sum_criterion(t, &[c.codes()], mu.code(), 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(ring: RingId, s: &str) -> RingVector {
        RingVector::parse(ring, s).unwrap()
    }

    fn e(ring: RingId, c: u8) -> RingElement {
        RingElement::new(ring, c).unwrap()
    }

    #[test]
    fn theta_examples() {
        let x = v(RingId::F2, "110");
        let one = RingId::F2.one();
        assert_eq!(theta(&x, &x, 0, one).unwrap().code(), 0);
        assert_eq!(theta(&x, &x, 1, one).unwrap().code(), 1);
        let z = RingVector::zero(RingId::F2, 3);
        for j in 0..3 {
            assert!(theta(&x, &z, j, one).unwrap().is_zero());
        }
        assert!(theta(&x, &x, 3, one).is_err());
        assert!(theta(&x, &v(RingId::F2, "11"), 0, one).is_err());
    }

    #[test]
    fn theta_at_zero_ignores_lambda() {
        let x = v(RingId::F2U, "1232");
        let y = v(RingId::F2U, "3102");
        let base = theta(&x, &y, 0, e(RingId::F2U, 1)).unwrap();
        for l in RingId::F2U.elements() {
            assert_eq!(theta(&x, &y, 0, l).unwrap(), base);
        }
    }

    #[test]
    fn lambda_circulant_examples() {
        let id = lambda_circulant(&LambdaCirculant { lambda: RingId::F2.one(), gen: v(RingId::F2, "100") }).unwrap();
        assert_eq!(id, RingMatrix::identity(RingId::F2, 3));

        let m = lambda_circulant(&LambdaCirculant { lambda: e(RingId::F2U, 3), gen: v(RingId::F2U, "010") }).unwrap();
        assert_eq!(m.row(0), v(RingId::F2U, "010"));
        assert_eq!(m.row(1), v(RingId::F2U, "001"));
        assert_eq!(m.row(2), v(RingId::F2U, "300"));
    }

    #[test]
    fn circulant_of_table_vector() {
        let a = v(RingId::F4, "1110320");
        let m = lambda_circulant(&LambdaCirculant { lambda: RingId::F4.one(), gen: a.clone() }).unwrap();
        assert_eq!(m.row(0), a);
        assert_eq!(m.row(1), v(RingId::F4, "0111032"));
        assert_eq!(m.row(6), v(RingId::F4, "1103201"));
        assert_eq!(m.lambda_circulant_generator(RingId::F4.one()), Some(a));
    }

    #[test]
    fn exchange_examples() {
        assert_eq!(exchange_matrix(RingId::F2, 1), RingMatrix::identity(RingId::F2, 1));
        let j2 = exchange_matrix(RingId::F2, 2);
        assert_eq!(j2.row(0), v(RingId::F2, "01"));
        assert_eq!(j2.row(1), v(RingId::F2, "10"));
        for n in 1..=64 {
            let j = exchange_matrix(RingId::F4, n);
            assert_eq!(j.transpose(), j);
            assert_eq!(j.try_mul(&j).unwrap(), RingMatrix::identity(RingId::F4, n));
        }
    }

    #[test]
    fn product_vector_of_units() {
        let e0 = RingVector::unit(RingId::F2U, 4, 0);
        let p = circulant_product_vector(&e0, &e0, RingId::F2U.one()).unwrap();
        assert_eq!(p, e0);
        assert!(circulant_product_vector(&e0, &e0, e(RingId::F2U, 2)).is_err());
    }

    fn materialized_product(b: &RingVector, a: &RingVector, lambda: RingElement) -> RingMatrix {
        let bm = lambda_circulant(&LambdaCirculant { lambda, gen: b.clone() }).unwrap();
        let am = lambda_circulant(&LambdaCirculant { lambda, gen: a.clone() }).unwrap();
        bm.try_mul(&am.transpose()).unwrap()
    }

    #[test]
    fn product_vector_matches_matrix_product_on_table_data() {
        let a = v(RingId::R16UV, "957");
        let b = v(RingId::R16UV, "D85");
        let lambda = e(RingId::R16UV, 0xF);
        let p = circulant_product_vector(&b, &a, lambda).unwrap();
        let direct = materialized_product(&b, &a, lambda);
        assert_eq!(direct.row(0), p);
        assert_eq!(lambda_circulant(&LambdaCirculant { lambda, gen: p }).unwrap(), direct);
    }

    #[test]
    fn neg_identity_examples() {
        let one = RingId::F2.one();
        assert!(satisfies_neg_identity(&[RingVector::unit(RingId::F2, 5, 0)], one).unwrap());
        assert!(!satisfies_neg_identity(&[v(RingId::F2, "111")], one).unwrap());
        let a = v(RingId::F2, "00110110101100111001");
        let b = v(RingId::F2, "01111111101101111110");
        assert!(satisfies_neg_identity(&[a, b], one).unwrap());
        assert!(satisfies_neg_identity(&[], one).is_err());
    }

    #[test]
    fn orthogonal_circulant_examples() {
        let one = RingId::F2.one();
        for k in 0..6 {
            assert!(is_orthogonal_circulant(&RingVector::unit(RingId::F2, 6, k), one).unwrap());
        }
        assert!(!is_orthogonal_circulant(&RingVector::zero(RingId::F2, 6), one).unwrap());
        let c = v(RingId::F2, "01111111000111111101");
        assert!(is_orthogonal_circulant(&c, one).unwrap());
        assert!(is_orthogonal_circulant(&c, e(RingId::F2, 0)).is_err());
    }

    #[test]
    fn neg_identity_agrees_with_direct_evaluation_f2u() {
        // exhaustive over F2U^3 pairs with λ = 3
        let ring = RingId::F2U;
        let lambda = e(ring, 3);
        let all: Vec<RingVector> = (0..64u32)
            .map(|m| RingVector::new(ring, vec![(m & 3) as u8, ((m >> 2) & 3) as u8, ((m >> 4) & 3) as u8]).unwrap())
            .collect();
        let minus_i = RingMatrix::identity(ring, 3).neg();
        for a in &all {
            for b in &all {
                let fast = satisfies_neg_identity(&[a.clone(), b.clone()], lambda).unwrap();
                let aa = materialized_product(a, a, lambda);
                let bb = materialized_product(b, b, lambda);
                assert_eq!(fast, aa.try_add(&bb).unwrap() == minus_i);
            }
        }
    }
}
