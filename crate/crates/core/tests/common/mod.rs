//! Reference implementations used as test oracles. Nothing here calls the
//! library's arithmetic tables, Gray tables or enumerators.

#![allow(dead_code)]

use sdcirc::construct::{building_up_extend, BuildingUpParams, GeneratorOverRing};
use sdcirc::gf2::{binary_generator, BitMatrix};
use sdcirc::search::SplitMix64;
use sdcirc::{RingElement, RingId, RingVector};

/// Product of two codes, worked out from each ring's presentation.
pub fn oracle_mul(ring: RingId, x: u8, y: u8) -> u8 {
    let bit = |v: u8, i: u8| (v >> i) & 1;
    match ring {
        RingId::F2 => x & y,
        // (a0 + a1 u)(b0 + b1 u), u² = 0
        RingId::F2U => (bit(x, 0) & bit(y, 0)) | (((bit(x, 0) & bit(y, 1)) ^ (bit(x, 1) & bit(y, 0))) << 1),
        // (a0 + a1 ω)(b0 + b1 ω), ω² = ω + 1
        RingId::F4 => f4_mul(x, y),
        // monomials u^i v^j as bits i + 2j, u² = v² = 0
        RingId::R16UV => {
            let mut out = 0;
            for m1 in 0..4u8 {
                for m2 in 0..4u8 {
                    if bit(x, m1) == 1 && bit(y, m2) == 1 && m1 & m2 == 0 {
                        out ^= 1 << (m1 | m2);
                    }
                }
            }
            out
        }
        // (p1 + q1 u)(p2 + q2 u) over F4, u² = 0
        RingId::F4U => {
            let (p1, q1, p2, q2) = (x & 3, x >> 2, y & 3, y >> 2);
            f4_mul(p1, p2) | ((f4_mul(p1, q2) ^ f4_mul(q1, p2)) << 2)
        }
    }
}

fn f4_mul(x: u8, y: u8) -> u8 {
    let (a0, a1, b0, b1) = (x & 1, x >> 1 & 1, y & 1, y >> 1 & 1);
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | c1 << 1
}

pub fn el(ring: RingId, code: u8) -> RingElement {
    RingElement::new(ring, code).unwrap()
}

/// Gray image built from the map definitions on whole vectors.
pub fn oracle_gray(v: &RingVector) -> Vec<u8> {
    let codes = v.codes();
    match v.ring() {
        RingId::F2 => codes.to_vec(),
        RingId::F2U => phi_f2u(codes),
        // aω + b(1+ω) ↦ (a, b): e0 + e1ω has b = e0, a = e0 + e1
        RingId::F4 => {
            let a: Vec<u8> = codes.iter().map(|&e| (e & 1) ^ (e >> 1 & 1)).collect();
            let b: Vec<u8> = codes.iter().map(|&e| e & 1).collect();
            [a, b].concat()
        }
        // a + bv ↦ (b, a + b) over F2+uF2, then φ
        RingId::R16UV => {
            let a: Vec<u8> = codes.iter().map(|&e| e & 3).collect();
            let b: Vec<u8> = codes.iter().map(|&e| e >> 2).collect();
            let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
            phi_f2u(&[b, sum].concat())
        }
        // e = x + yω with x, y in F2+uF2; aω + b(1+ω) has b = x, a = x + y
        RingId::F4U => {
            let x: Vec<u8> = codes.iter().map(|&e| (e & 1) | (e >> 2 & 1) << 1).collect();
            let y: Vec<u8> = codes.iter().map(|&e| (e >> 1 & 1) | (e >> 3 & 1) << 1).collect();
            let a: Vec<u8> = x.iter().zip(&y).map(|(p, q)| p ^ q).collect();
            phi_f2u(&[a, x].concat())
        }
    }
}

/// a + bu ↦ (b, a + b)
fn phi_f2u(codes: &[u8]) -> Vec<u8> {
    let a: Vec<u8> = codes.iter().map(|&e| e & 1).collect();
    let b: Vec<u8> = codes.iter().map(|&e| e >> 1 & 1).collect();
    let sum: Vec<u8> = a.iter().zip(&b).map(|(x, y)| x ^ y).collect();
    [b, sum].concat()
}

/// Dense matrix over a ring using oracle arithmetic.
pub type Dense = Vec<Vec<u8>>;

pub fn oracle_circulant(ring: RingId, lambda: u8, gen: &[u8]) -> Dense {
    let n = gen.len();
    // entry (i, j) = gen[j - i] if j ≥ i, else λ·gen[n + j - i]
    (0..n)
        .map(|i| (0..n).map(|j| if j >= i { gen[j - i] } else { oracle_mul(ring, lambda, gen[n + j - i]) }).collect())
        .collect()
}

pub fn dense_mul(ring: RingId, x: &Dense, y: &Dense) -> Dense {
    let (r, m, c) = (x.len(), y.len(), y[0].len());
    (0..r)
        .map(|i| (0..c).map(|j| (0..m).fold(0, |acc, l| acc ^ oracle_mul(ring, x[i][l], y[l][j]))).collect())
        .collect()
}

pub fn dense_transpose(x: &Dense) -> Dense {
    (0..x[0].len()).map(|j| x.iter().map(|row| row[j]).collect()).collect()
}

pub fn dense_of(g: &GeneratorOverRing) -> Dense {
    (0..g.rows()).map(|i| g.matrix.row(i).codes().to_vec()).collect()
}

/// `G·Gᵀ = 0` by direct multiplication.
pub fn oracle_self_orthogonal(g: &GeneratorOverRing) -> bool {
    let d = dense_of(g);
    dense_mul(g.ring(), &d, &dense_transpose(&d)).iter().flatten().all(|&x| x == 0)
}

/// Weight distribution by summing every subset of rows.
pub fn naive_distribution(g: &BitMatrix) -> Vec<u64> {
    let rows: Vec<u128> = g.row_words().to_vec();
    assert!(rows.len() <= 24, "naive oracle is for small codes");
    let mut counts = vec![0u64; g.cols() + 1];
    for mask in 0u64..1 << rows.len() {
        let mut w = 0u128;
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                w ^= r;
            }
        }
        counts[w.count_ones() as usize] += 1;
    }
    counts
}

/// A random binary self-dual `[2k, k]` code: repeated building-up from the
/// repetition code, then a random column permutation.
pub fn random_self_dual(rng: &mut SplitMix64, k: usize) -> BitMatrix {
    let mut g = GeneratorOverRing::from_bits(&BitMatrix::from_strings(&["11"]).unwrap());
    while g.rows() < k {
        let len = g.cols();
        let delta = loop {
            let d: Vec<u8> = (0..len).map(|_| rng.below(2) as u8).collect();
            if d.iter().filter(|&&b| b == 1).count() % 2 == 1 {
                break d;
            }
        };
        let p = BuildingUpParams {
            parent: g,
            epsilon: RingId::F2.one(),
            delta: RingVector::new(RingId::F2, delta).unwrap(),
        };
        g = building_up_extend(&p).unwrap();
    }
    let b = binary_generator(&g).unwrap();
    let mut perm: Vec<usize> = (0..b.cols()).collect();
    for i in (1..perm.len()).rev() {
        perm.swap(i, rng.below(i as u64 + 1) as usize);
    }
    b.permute_columns(&perm)
}

pub fn random_vector(rng: &mut SplitMix64, ring: RingId, n: usize) -> RingVector {
    RingVector::new(ring, (0..n).map(|_| rng.below(ring.order() as u64) as u8).collect()).unwrap()
}

/// `w` adjusted in one unit coordinate of `v` so that `<v, w> = 0`.
pub fn make_orthogonal(v: &RingVector, w: &RingVector) -> Option<RingVector> {
    let ring = v.ring();
    let j = (0..v.len()).find(|&j| ring.units().contains(&v.get(j)))?;
    let inv = ring.elements().find(|y| v.get(j).try_mul(*y).unwrap() == ring.one())?;
    let ip = v.inner_product(w).unwrap();
    let mut codes = w.codes().to_vec();
    // w_j -= ip · v_j⁻¹
    codes[j] = w.get(j).try_add(ip.try_mul(inv).unwrap().neg()).unwrap().code();
    Some(RingVector::new(ring, codes).unwrap())
}
