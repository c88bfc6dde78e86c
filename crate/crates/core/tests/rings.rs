mod common;

use common::{el, make_orthogonal, oracle_gray, oracle_mul};
use proptest::prelude::*;
use sdcirc::ring::{RingElement, RingId, RingVector};

#[test]
fn multiplication_matches_presentations() {
    for ring in RingId::ALL {
        for x in ring.elements() {
            for y in ring.elements() {
                assert_eq!(x.try_mul(y).unwrap().code(), oracle_mul(ring, x.code(), y.code()), "{ring} {x:?} {y:?}");
                assert_eq!(x.try_add(y).unwrap().code(), x.code() ^ y.code());
            }
        }
    }
}

#[test]
fn ring_axioms_exhaustively() {
    for ring in RingId::ALL {
        let one = ring.one();
        let zero = ring.zero();
        for x in ring.elements() {
            assert_eq!(x.try_add(x).unwrap(), zero);
            assert_eq!(x.try_mul(one).unwrap(), x);
            assert_eq!(x.try_mul(zero).unwrap(), zero);
            assert_eq!(x.neg().try_add(x).unwrap(), zero);
            for y in ring.elements() {
                assert_eq!(x.try_mul(y).unwrap(), y.try_mul(x).unwrap());
                for z in ring.elements() {
                    let l = x.try_mul(y.try_add(z).unwrap()).unwrap();
                    let r = x.try_mul(y).unwrap().try_add(x.try_mul(z).unwrap()).unwrap();
                    assert_eq!(l, r);
                    assert_eq!(x.try_mul(y).unwrap().try_mul(z).unwrap(), x.try_mul(y.try_mul(z).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn involutory_unit_counts() {
    let counts: Vec<usize> = RingId::ALL.iter().map(|r| r.involutory_units().len()).collect();
    assert_eq!(counts, [1, 2, 8, 1, 4]);
    for ring in RingId::ALL {
        let inv = ring.involutory_units();
        for u in ring.units() {
            assert_eq!(inv.contains(&u), u.try_mul(u).unwrap() == ring.one());
        }
    }
    let f4u: Vec<u8> = RingId::F4U.involutory_units().iter().map(|u| u.code()).collect();
    assert_eq!(f4u, [1, 5, 9, 13]);
}

#[test]
fn unit_counts() {
    let counts: Vec<usize> = RingId::ALL.iter().map(|r| r.units().len()).collect();
    assert_eq!(counts, [1, 2, 8, 3, 12]);
}

#[test]
fn hex_symbols_round_trip() {
    for ring in RingId::ALL {
        for x in ring.elements() {
            assert_eq!(RingElement::from_symbol(ring, x.symbol()).unwrap(), x);
        }
        let all: String = ring.elements().map(|x| x.symbol()).collect();
        let v = RingVector::parse(ring, &format!("({all})")).unwrap();
        assert_eq!(v.to_hex(), format!("({all})"));
    }
    assert!(RingVector::parse(RingId::F2U, "(14)").is_err());
    assert!(RingVector::parse(RingId::F2, "(").is_err());
}

#[test]
fn gray_examples() {
    let img = |r, s| RingVector::parse(r, s).unwrap().gray_image();
    assert_eq!(img(RingId::F2U, "2"), [1, 1]);
    assert_eq!(img(RingId::F4, "2"), [1, 0]);
    assert_eq!(img(RingId::R16UV, "0"), [0, 0, 0, 0]);
    assert_eq!(img(RingId::F4U, "1"), [0, 0, 1, 1]);
    assert_eq!(img(RingId::F4, "23"), [1, 0, 0, 1]);
    assert_eq!(RingVector::parse(RingId::F4, "23").unwrap().lee_weight(), 2);
}

fn ring_strategy() -> impl Strategy<Value = RingId> {
    prop::sample::select(RingId::ALL.to_vec())
}

fn vector(ring: RingId, n: usize) -> impl Strategy<Value = RingVector> {
    prop::collection::vec(0..ring.order() as u8, n).prop_map(move |c| RingVector::new(ring, c).unwrap())
}

fn binary_dot(x: &[u8], y: &[u8]) -> u8 {
    x.iter().zip(y).fold(0, |acc, (a, b)| acc ^ (a & b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn gray_image_matches_vector_definition((ring, v) in ring_strategy().prop_flat_map(|r| (Just(r), 1usize..12).prop_flat_map(|(r, n)| (Just(r), vector(r, n))))) {
        prop_assert_eq!(v.gray_image(), oracle_gray(&v));
        prop_assert_eq!(v.lee_weight() as usize, oracle_gray(&v).iter().filter(|&&b| b == 1).count());
        prop_assert_eq!(v.gray_image().len(), v.len() * ring.gray_expansion());
    }

    #[test]
    fn gray_maps_preserve_orthogonality((v, w) in ring_strategy().prop_flat_map(|r| (1usize..10).prop_flat_map(move |n| (vector(r, n), vector(r, n))))) {
        if let Some(w) = make_orthogonal(&v, &w) {
            prop_assert!(v.inner_product(&w).unwrap().is_zero());
            prop_assert_eq!(binary_dot(&v.gray_image(), &w.gray_image()), 0);
        }
    }

    #[test]
    fn gray_image_is_additive((v, w) in ring_strategy().prop_flat_map(|r| (1usize..10).prop_flat_map(move |n| (vector(r, n), vector(r, n))))) {
        let s = v.try_add(&w).unwrap();
        let sum: Vec<u8> = v.gray_image().iter().zip(w.gray_image()).map(|(a, b)| a ^ b).collect();
        prop_assert_eq!(s.gray_image(), sum);
    }

    #[test]
    fn scaling_by_units_keeps_the_inner_product_class((v, s) in ring_strategy().prop_flat_map(|r| (vector(r, 6), 0..r.order() as u8).prop_map(move |(v, s)| (v, el(r, s))))) {
        let ip = v.inner_product(&v).unwrap();
        let scaled = v.scale(s).unwrap();
        prop_assert_eq!(scaled.inner_product(&scaled).unwrap(), ip.try_mul(s.square()).unwrap());
    }
}
