mod common;

use std::collections::BTreeSet;

use fsz_core::arith::{inverse_mod, prime_residues};
use fsz_core::fsz::{
    check_coprime_normal_reduction, count_gm_naive, counts_for_query, divisor_candidates,
    find_witness, find_witness_with, gm_set, gm_sets_agree, test_fsz, test_fsz_center,
    test_fsz_with, verify_witness, FszStatus, FszWitness, GmQuery, TestOptions,
};
use fsz_core::structure::centralizer;
use fsz_core::{FszError, Perm, PermGroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_count, direct_product, g2_five, g2_root_centralizer, g2_unipotent, group};

fn elements(g: &PermGroup) -> Vec<Perm> {
    g.elements().collect()
}

#[test]
fn gm_sets_lie_in_the_centralizer() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = group("symmetric:5");
    for _ in 0..30 {
        let x = g.random_element(&mut rng);
        let u = g.random_element(&mut rng);
        let c = centralizer(&g, &x).unwrap();
        for m in 1..=6 {
            let set: Vec<Perm> = gm_set(&g, &u, &x, m).collect();
            assert!(set.iter().all(|a| c.contains(a)));
            if !u.commutes_with(&x) {
                assert!(set.is_empty());
            }
        }
    }
}

#[test]
fn counting_in_the_centralizer_is_enough() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for spec in ["wreath:3", "quaternion:40", "symmetric:5"] {
        let g = group(spec);
        let all = elements(&g);
        for _ in 0..10 {
            let x = g.random_element(&mut rng);
            let c = centralizer(&g, &x).unwrap();
            let inside = elements(&c);
            let u = c.random_element(&mut rng);
            for m in 1..=5 {
                assert_eq!(
                    brute_count(&all, &u, &x, m),
                    brute_count(&inside, &u, &x, m)
                );
            }
        }
    }
}

#[test]
fn conjugation_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = group("symmetric:5");
    let all = elements(&g);
    for _ in 0..25 {
        let x = g.random_element(&mut rng);
        let c = centralizer(&g, &x).unwrap();
        let u = c.random_element(&mut rng);
        let y = g.random_element(&mut rng);
        for m in 1..=6 {
            assert_eq!(
                brute_count(&all, &u, &x, m),
                brute_count(&all, &u.conjugate_by(&y), &x.conjugate_by(&y), m)
            );
        }
    }
}

#[test]
fn exchange_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = group("wreath:3");
    let order = g.order_u64().unwrap();
    let all = elements(&g);
    let units = prime_residues(order);
    for _ in 0..25 {
        let x = g.random_element(&mut rng);
        let c = centralizer(&g, &x).unwrap();
        let u = c.random_element(&mut rng);
        let n = units[rng.gen_range(0..units.len())];
        let r = inverse_mod(n, order).unwrap();
        for m in 1..=9 {
            assert_eq!(
                brute_count(&all, &u, &x.pow_u64(n), m),
                brute_count(&all, &u.pow_u64(r), &x, m)
            );
        }
    }
}

#[test]
fn naive_counter_matches_definition() {
    let g = group("quaternion:24");
    let all = elements(&g);
    for x in all.iter().filter(|x| x.order() >= 3) {
        let c = centralizer(&g, x).unwrap();
        for u in c.elements() {
            for m in [1, 2, 3, 6] {
                let n = if x.order() == 3 { 2 } else { x.order() - 1 };
                let (a, b) = count_gm_naive(all.iter().cloned(), &u, x, m, n).unwrap();
                assert_eq!(a, brute_count(&all, &u, x, m));
                assert_eq!(b, brute_count(&all, &u, &x.pow_u64(n), m));
            }
        }
    }
}

#[test]
fn degenerate_queries_are_rejected() {
    let g = group("cyclic:25");
    let x = g.generators()[0].pow_u64(5);
    let e = g.identity();
    let q = |n| GmQuery {
        u: e.clone(),
        g: x.clone(),
        m: 5,
        n,
    };
    assert!(matches!(
        counts_for_query(&g, &q(5)),
        Err(FszError::NotCoprime { .. })
    ));
    assert!(matches!(
        counts_for_query(&g, &q(6)),
        Err(FszError::DegenerateQuery { .. })
    ));
    assert_eq!(counts_for_query(&g, &q(2)).unwrap(), (5, 5));
    assert_eq!(
        counts_for_query(&g, &GmQuery { m: 1, ..q(2) }).unwrap(),
        (1, 1)
    );
}

#[test]
fn divisor_candidates_skip_small_orders() {
    assert_eq!(divisor_candidates(25, 5).unwrap(), vec![5]);
    assert_eq!(divisor_candidates(9, 3).unwrap(), Vec::<u64>::new());
    assert_eq!(divisor_candidates(100, 10).unwrap(), vec![5, 10]);
    assert!(divisor_candidates(10, 4).is_err());
}

#[test]
fn catalog_controls_are_fsz() {
    for spec in [
        "symmetric:6",
        "wreath:3",
        "quaternion:64",
        "semidihedral:128",
        "dihedral:200",
    ] {
        let g = group(spec);
        let v = test_fsz(&g).unwrap();
        assert!(v.is_fsz(), "{spec}");
        let forced = test_fsz_with(
            &g,
            &TestOptions {
                screen: false,
                ..TestOptions::default()
            },
        )
        .unwrap();
        assert!(forced.is_fsz(), "{spec}");
    }
}

#[test]
fn verdicts_do_not_depend_on_worker_count() {
    let g = group("quaternion:400");
    let base = TestOptions {
        screen: false,
        ..TestOptions::default()
    };
    let one = test_fsz_with(&g, &base).unwrap();
    let four = test_fsz_with(&g, &TestOptions { workers: 4, ..base }).unwrap();
    assert_eq!(one, four);
}

#[test]
fn unipotent_g2_subgroup_is_not_fsz() {
    let p = g2_unipotent();
    assert_eq!(p.order_u64(), Some(15625));
    let opts = TestOptions {
        screen: false,
        ..TestOptions::default()
    };
    let v = test_fsz_with(&p, &opts).unwrap();
    let w = v.witness().expect("a witness").clone();
    assert_eq!((w.m, w.n), (5, 2));
    let pair: BTreeSet<u64> = [w.count_g, w.count_gn].into();
    assert_eq!(pair, BTreeSet::from([0, 625]));
    assert_eq!(v.tested_m, BTreeSet::from([5]));
    verify_witness(&p, &w).unwrap();

    let (u, n) = find_witness(&p, 5, &w.g).unwrap().expect("a witness");
    assert_eq!(n, 2);
    let counts = counts_for_query(
        &p,
        &GmQuery {
            u,
            g: w.g.clone(),
            m: 5,
            n,
        },
    )
    .unwrap();
    assert_ne!(counts.0, counts.1);

    let threaded = find_witness_with(&p, 5, &w.g, &TestOptions { workers: 3, ..opts }).unwrap();
    assert_eq!(threaded.as_ref().map(|t| (&t.u, t.n)), Some((&w.u, w.n)));

    let centre = test_fsz_center(&p).unwrap();
    assert!(matches!(centre.status, FszStatus::NotFsz(_)));
    assert_eq!(centre.witness(), Some(&w));

    // the witness lifts through a normal subgroup of index 7, coprime to m
    let big = direct_product(&p, &group("cyclic:7"));
    let lifted = FszWitness {
        g: common::embed(&w.g, 0, big.degree()),
        u: common::embed(&w.u, 0, big.degree()),
        ..w.clone()
    };
    let h = big
        .subgroup(
            p.generators()
                .iter()
                .map(|x| common::embed(x, 0, big.degree()))
                .collect(),
        )
        .unwrap();
    assert!(check_coprime_normal_reduction(&big, &h, &lifted).unwrap());
    verify_witness(&big, &lifted).unwrap();
    // the trivial case H = G
    assert!(check_coprime_normal_reduction(&p, &p, &w).unwrap());
}

#[test]
fn gm_sets_agree_for_coprime_index() {
    let g = group("product:alternating:4,cyclic:5");
    let h = group("alternating:4");
    let h = g
        .subgroup(
            h.generators()
                .iter()
                .map(|x| common::embed(x, 0, g.degree()))
                .collect(),
        )
        .unwrap();
    for x in h.elements() {
        for u in h.elements().filter(|u| u.commutes_with(&x)) {
            for m in [1, 2, 3, 4, 6, 12] {
                assert!(gm_sets_agree(&g, &h, &u, &x, m).unwrap());
            }
        }
    }
}

#[test]
fn budget_aborts_long_counts() {
    let g = group("quaternion:400");
    let opts = TestOptions {
        screen: false,
        budget: Some(50),
        ..TestOptions::default()
    };
    assert!(matches!(
        test_fsz_with(&g, &opts),
        Err(FszError::BudgetExceeded { budget: 50 })
    ));
}

#[test]
fn g2_five_root_centralizer() {
    let g2 = g2_five();
    assert_eq!(g2.degree(), 3906);
    assert_eq!(g2.order_u64(), Some(5_859_000_000));
    let (c, p) = g2_root_centralizer();
    assert_eq!(c.order_u64(), Some(375_000));
    assert!(c.is_subgroup_of(&g2) && p.is_subgroup_of(&c));
    // the long root elements are the centre of the unipotent subgroup
    let z = fsz_core::structure::center(&p);
    assert_eq!(z.order_u64(), Some(5));
    let g = z.generators().iter().find(|x| !x.is_identity()).unwrap();
    let full = centralizer(&g2, g).unwrap();
    assert_eq!(full.order(), c.order());
    assert!(c.is_subgroup_of(&full));
}
