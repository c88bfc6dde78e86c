//! Binary codes: bit matrices, binary images of ring codes, enumeration,
//! weight distributions, distance bounds and weight-enumerator families.

mod bitmatrix;
mod bounds;
mod enumerate;
mod family;
mod weights;

pub use bitmatrix::{BitMatrix, Systematic, MAX_COLS};
pub use bounds::{classify_status, distance_bound, DistanceBound, Status};
pub use enumerate::{
    default_workers, full_enumeration_shard, full_weight_distribution, full_weight_distribution_with,
    low_weight_distribution, low_weight_distribution_with, min_distance, min_distance_with, revolving_door, Shard,
    TwoSidedEnumerator, FULL_ENUMERATION_LIMIT,
};
pub use family::{extract_family_params, Family, FamilyFit, FamilyParams};
pub use weights::{classify_type, CodeType, WeightDistribution};

use crate::construct::GeneratorOverRing;
use crate::error::Result;
use crate::ring::gray_pack;

/// `G·Gᵀ = 0` and `rank G = n/2` with `n` even.
pub fn is_self_dual(g: &BitMatrix) -> bool {
    let n = g.cols();
    n.is_multiple_of(2) && g.rank() == n / 2 && g.is_self_orthogonal()
}

/// Binary generator of the Gray image of a ring code.
///
/// The Gray maps are only additive, so each ring row `r` contributes the
/// images of `m·r` for every `m` in an additive basis of the ring (`{1}`,
/// `{1, u}` or `{1, ω}`, `{1, u, v, uv}` or `{1, ω, u, ωu}`); dependent rows
/// are then dropped.
pub fn binary_generator(code: &GeneratorOverRing) -> Result<BitMatrix> {
    let ring = code.ring();
    let t = ring.tables();
    let m = &code.matrix;
    let cols = m.cols() * ring.gray_expansion();
    let mut out = BitMatrix::zeros(0, cols);
    let mut scaled = vec![0u8; m.cols()];
    for i in 0..m.rows() {
        let row = m.row(i);
        for &g in ring.module_basis() {
            for (s, &x) in scaled.iter_mut().zip(row.codes()) {
                *s = t.mul(g, x);
            }
            out.push_row(gray_pack(ring, &scaled)?);
        }
    }
    Ok(out.basis())
}

/// Whether every row weight is a multiple of 4; for a self-dual code this
/// decides Type II.
pub fn is_doubly_even(g: &BitMatrix) -> bool {
    g.row_words().iter().all(|r| r.count_ones() % 4 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::RingMatrix;
    use crate::ring::{RingId, RingVector};

    #[test]
    fn f2_generator_is_unchanged() {
        let rows = [RingVector::parse(RingId::F2, "1010").unwrap(), RingVector::parse(RingId::F2, "0101").unwrap()];
        let g = GeneratorOverRing::new(RingMatrix::from_rows(RingId::F2, &rows).unwrap());
        let b = binary_generator(&g).unwrap();
        assert_eq!(b, BitMatrix::from_strings(&["1010", "0101"]).unwrap());
        assert_eq!(GeneratorOverRing::from_bits(&b), g);
    }

    #[test]
    fn self_dual_examples() {
        assert!(is_self_dual(&BitMatrix::from_strings(&["11"]).unwrap()));
        assert!(!is_self_dual(&BitMatrix::from_strings(&["10"]).unwrap()));
        assert!(!is_self_dual(&BitMatrix::from_strings(&["1111"]).unwrap()));
    }

    #[test]
    fn order_four_rows_double() {
        // (1 | 1) over F2+uF2 has 4 codewords, binary image [4, 2]
        let rows = [RingVector::parse(RingId::F2U, "11").unwrap()];
        let g = GeneratorOverRing::new(RingMatrix::from_rows(RingId::F2U, &rows).unwrap());
        let b = binary_generator(&g).unwrap();
        assert_eq!((b.rows(), b.cols()), (2, 4));
        assert!(is_self_dual(&b));
    }
}
