mod common;

use std::collections::{BTreeMap, HashSet};

use fsz_core::catalog::{make, CatalogSpec};
use fsz_core::{Perm, PermGroup};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::group;

#[test]
fn stream_length_equals_order() {
    for spec in [
        "symmetric:5",
        "dihedral:30",
        "quaternion:24",
        "wreath:3",
        "product:alternating:4,cyclic:5",
    ] {
        let g = group(spec);
        let order = g.order_u64().unwrap();
        let elements: HashSet<Perm> = g.elements().collect();
        assert_eq!(elements.len() as u64, order, "{spec}");
        assert_eq!(g.elements().count() as u64, order, "{spec}");
    }
}

#[test]
fn element_orders_divide_group_order() {
    let g = group("wreath:3");
    let order = g.order_u64().unwrap();
    for x in g.elements() {
        assert_eq!(order % x.order(), 0);
    }
}

#[test]
fn closed_under_products_and_inverses() {
    let g = group("alternating:5");
    let elements: Vec<Perm> = g.elements().collect();
    let set: HashSet<&Perm> = elements.iter().collect();
    for x in elements.iter().step_by(7) {
        assert!(set.contains(&x.inverse()));
        for y in elements.iter().step_by(11) {
            assert!(set.contains(&(x * y)));
        }
    }
}

#[test]
fn rank_and_unrank_are_inverse() {
    let g = group("semidihedral:64");
    for (i, x) in g.elements().enumerate() {
        assert_eq!(g.rank(&x), Some(i as u64));
        assert_eq!(g.unrank(i as u64), x);
    }
}

#[test]
fn construction_is_deterministic() {
    let a: Vec<Perm> = group("wreath:3").elements().collect();
    let b: Vec<Perm> = group("wreath:3").elements().collect();
    assert_eq!(a, b);
    let mut r1 = ChaCha8Rng::seed_from_u64(3);
    let mut r2 = ChaCha8Rng::seed_from_u64(3);
    let g = group("symmetric:7");
    for _ in 0..20 {
        assert_eq!(g.random_element(&mut r1), g.random_element(&mut r2));
    }
}

#[test]
fn random_elements_are_uniform_on_s3() {
    let g = group("symmetric:3");
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let samples = 6000;
    let mut counts: BTreeMap<Perm, u32> = BTreeMap::new();
    for _ in 0..samples {
        *counts.entry(g.random_element(&mut rng)).or_default() += 1;
    }
    assert_eq!(counts.len(), 6);
    let expected = f64::from(samples) / 6.0;
    let chi2: f64 = counts
        .values()
        .map(|&c| (f64::from(c) - expected).powi(2) / expected)
        .sum();
    // 5 degrees of freedom, upper 0.1% point
    assert!(chi2 < 20.52, "chi-square {chi2}");
}

#[test]
fn orders_match_closed_forms() {
    let factorial = |n: u32| (1..=n).map(BigUint::from).product::<BigUint>();
    for n in 1..=9 {
        let g = make(&CatalogSpec::Symmetric(n)).unwrap();
        assert_eq!(g.order(), &factorial(n as u32));
    }
    let big = make(&CatalogSpec::Symmetric(30)).unwrap();
    assert_eq!(big.order(), &factorial(30));
    assert_eq!(big.order_u64(), None);
}

#[test]
fn subgroup_membership() {
    let s5 = group("symmetric:5");
    let a5 = group("alternating:5");
    assert!(a5.is_subgroup_of(&s5));
    assert!(!s5.is_subgroup_of(&a5));
    let t = Perm::from_cycles(5, &[vec![0, 1]]).unwrap();
    assert!(s5.contains(&t));
    assert!(!a5.contains(&t));
    let trivial = PermGroup::trivial(5);
    assert_eq!(trivial.elements().count(), 1);
}
