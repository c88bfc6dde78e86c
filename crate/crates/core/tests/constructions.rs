mod common;

use std::collections::HashSet;

use common::{dense_mul, dense_transpose, oracle_circulant, oracle_self_orthogonal, random_self_dual, random_vector};
use sdcirc::catalog::Catalog;
use sdcirc::construct::{
    build_four_circulant, building_up_extend, check_four_circulant, orthogonal_circulant_census, BuildingUpParams,
    FourCirculantParams, GeneratorOverRing,
};
use sdcirc::gf2::{binary_generator, is_self_dual, BitMatrix};
use sdcirc::search::SplitMix64;
use sdcirc::{RingId, RingVector};

fn oracle_orthogonal(ring: RingId, mu: u8, c: &[u8]) -> bool {
    let m = oracle_circulant(ring, mu, c);
    let g = dense_mul(ring, &m, &dense_transpose(&m));
    g.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == u8::from(i == j)))
}

fn all_vectors(ring: RingId, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let q = ring.order();
    (0..q.pow(n as u32)).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let d = (idx % q) as u8;
                idx /= q;
                d
            })
            .collect()
    })
}

/// Check against oracle self-orthogonality whenever `C` is orthogonal; the
/// fast test must never accept when the oracle rejects.
fn compare(p: &FourCirculantParams) -> bool {
    let fast = check_four_circulant(p);
    let g = build_four_circulant(p).unwrap();
    let slow = oracle_self_orthogonal(&g);
    if fast {
        assert!(slow, "accepted but G·Gᵀ ≠ 0: {p:?}");
    }
    if oracle_orthogonal(p.ring(), p.mu.code(), p.c.codes()) {
        assert_eq!(fast, slow, "{p:?}");
    }
    fast
}

#[test]
fn four_circulant_test_is_exact_for_short_vectors() {
    for ring in RingId::ALL {
        let n = if ring.order() <= 4 { 3 } else { 1 };
        let vecs: Vec<Vec<u8>> = all_vectors(ring, n).collect();
        let mut accepted = 0;
        for lambda in ring.involutory_units() {
            for mu in ring.involutory_units() {
                for c in vecs.iter().filter(|c| oracle_orthogonal(ring, mu.code(), c)) {
                    for a in &vecs {
                        for b in &vecs {
                            let v = |x: &Vec<u8>| RingVector::new(ring, x.clone()).unwrap();
                            let p = FourCirculantParams::new(lambda, mu, v(a), v(b), v(c)).unwrap();
                            accepted += usize::from(compare(&p));
                        }
                    }
                }
            }
        }
        assert!(accepted > 0, "{ring}: no accepted parameters");
    }
}

#[test]
fn four_circulant_random_params() {
    let mut rng = SplitMix64::new(7);
    for _ in 0..300 {
        let ring = RingId::ALL[rng.below(5) as usize];
        let n = 1 + rng.below(5) as usize;
        let units = ring.involutory_units();
        let lambda = units[rng.below(units.len() as u64) as usize];
        let mu = units[rng.below(units.len() as u64) as usize];
        let p = FourCirculantParams::new(
            lambda,
            mu,
            random_vector(&mut rng, ring, n),
            random_vector(&mut rng, ring, n),
            random_vector(&mut rng, ring, n),
        )
        .unwrap();
        compare(&p);
    }
}

#[test]
fn catalog_four_circulants_pass_the_oracle() {
    let cat = Catalog::embedded();
    for rec in cat.records() {
        if let Some(p) = rec.four_circulant_params() {
            let p = p.unwrap();
            if p.n() > 14 {
                continue;
            }
            assert!(check_four_circulant(&p), "{}", rec.id);
            let g = build_four_circulant(&p).unwrap();
            assert!(oracle_self_orthogonal(&g), "{}", rec.id);
            assert!(g.has_identity_prefix());
        }
    }
}

fn random_delta(rng: &mut SplitMix64, ring: RingId, len: usize) -> RingVector {
    let minus_one = ring.one().neg();
    loop {
        let d = random_vector(rng, ring, len);
        if d.inner_product(&d).unwrap() == minus_one {
            return d;
        }
    }
}

#[test]
fn building_up_gives_self_dual_codes() {
    let cat = Catalog::embedded();
    let mut rng = SplitMix64::new(11);
    let parents = ["C'_12,1", "C'_12,7", "C'_12,13", "C'_12,17"];
    for round in 0..40 {
        let parent = cat.generator(parents[round % parents.len()]).unwrap();
        let ring = parent.ring();
        let minus_one = ring.one().neg();
        let eps: Vec<_> = ring.elements().filter(|e| e.square() == minus_one).collect();
        let p = BuildingUpParams {
            parent: parent.clone(),
            epsilon: eps[rng.below(eps.len() as u64) as usize],
            delta: random_delta(&mut rng, ring, parent.cols()),
        };
        let g = building_up_extend(&p).unwrap();
        assert_eq!((g.rows(), g.cols()), (parent.rows() + 1, parent.cols() + 2));
        assert!(oracle_self_orthogonal(&g));
        let b = binary_generator(&g).unwrap();
        assert!(is_self_dual(&b));
    }
}

#[test]
fn building_up_binary_random_parents() {
    let mut rng = SplitMix64::new(3);
    for k in 1..12 {
        let parent = GeneratorOverRing::from_bits(&random_self_dual(&mut rng, k));
        let p =
            BuildingUpParams { parent, epsilon: RingId::F2.one(), delta: random_delta(&mut rng, RingId::F2, 2 * k) };
        let g = building_up_extend(&p).unwrap();
        assert!(oracle_self_orthogonal(&g));
        assert!(is_self_dual(&binary_generator(&g).unwrap()));
    }
}

#[test]
fn building_up_from_the_repetition_code() {
    let parent = GeneratorOverRing::from_bits(&BitMatrix::from_strings(&["11"]).unwrap());
    let mut codes = Vec::new();
    for delta in ["10", "01"] {
        let p = BuildingUpParams {
            parent: parent.clone(),
            epsilon: RingId::F2.one(),
            delta: RingVector::parse(RingId::F2, delta).unwrap(),
        };
        let g = binary_generator(&building_up_extend(&p).unwrap()).unwrap();
        assert!(is_self_dual(&g));
        codes.push((0..g.rows()).map(|i| g.row_string(i)).collect::<Vec<_>>());
    }
    assert_eq!(codes[0], ["1010", "1111"]);
    assert_eq!(codes[1], ["1001", "1111"]);
    // the even-weight δ values are refused
    for delta in ["00", "11"] {
        let p = BuildingUpParams {
            parent: parent.clone(),
            epsilon: RingId::F2.one(),
            delta: RingVector::parse(RingId::F2, delta).unwrap(),
        };
        assert!(building_up_extend(&p).is_err());
    }
}

#[test]
fn building_up_refuses_bad_parents() {
    let parent = GeneratorOverRing::from_bits(&BitMatrix::from_strings(&["10"]).unwrap());
    let p = BuildingUpParams { parent, epsilon: RingId::F2.one(), delta: RingVector::parse(RingId::F2, "10").unwrap() };
    assert!(building_up_extend(&p).is_err());
}

fn brute_census(ring: RingId, n: usize) -> (u64, u64) {
    let mut pairs = 0;
    let mut distinct = HashSet::new();
    for c in all_vectors(ring, n) {
        for mu in ring.involutory_units() {
            if oracle_orthogonal(ring, mu.code(), &c) {
                pairs += 1;
                distinct.insert(oracle_circulant(ring, mu.code(), &c));
            }
        }
    }
    (pairs, distinct.len() as u64)
}

#[test]
fn census_matches_brute_force() {
    for (ring, max_n) in [(RingId::F2, 8), (RingId::F2U, 4), (RingId::F4, 4), (RingId::R16UV, 2), (RingId::F4U, 2)] {
        for n in 1..=max_n {
            let c = orthogonal_circulant_census(ring, n, 1 << 32).unwrap();
            assert_eq!((c.pairs, c.distinct_matrices), brute_census(ring, n), "{ring} n={n}");
        }
    }
}

#[test]
fn census_respects_the_budget() {
    assert!(orthogonal_circulant_census(RingId::R16UV, 8, 1 << 20).is_err());
    assert!(orthogonal_circulant_census(RingId::F2, 0, 1 << 20).is_err());
}
