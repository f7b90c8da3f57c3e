//! Closed-form values computed independently of the library and frozen here.

use holant_core::eval::{binomial, holant_brute_all, holant_bruteforce};
use holant_core::fingerprint::{bell_number, fingerprint, fingerprint_fast};
use holant_core::hombasis::{count_aut, count_hom, enumerate_uniform_hypergraphs, CatalogueCaps};
use holant_core::hypergraph::named;
use holant_core::reductions::count_perfect_matchings;
use holant_core::{ExactScalar, Signature, SignatureGrid};
use num_bigint::BigUint;

fn int(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

#[test]
fn matchings_in_complete_graphs() {
    // #k-matchings of K_n = n! / (k! 2^k (n-2k)!).
    for n in 2..=7u64 {
        let grid =
            SignatureGrid::uniform(named::complete_graph(n as usize), Signature::hw_le1()).unwrap();
        let all = holant_brute_all(&grid, u64::MAX).unwrap();
        for k in 0..=n / 2 {
            let want = factorial(n) / (factorial(k) * (1 << k) * factorial(n - 2 * k));
            assert_eq!(all[k as usize], int(want as i64), "K_{n}, k = {k}");
        }
        for k in n / 2 + 1..all.len() as u64 {
            assert!(all[k as usize].is_zero());
        }
    }
}

#[test]
fn geometric_signature_counts_subsets() {
    // With s(n) = 2^n every k-subset of a graph contributes 4^k.
    let g = named::petersen();
    let grid = SignatureGrid::uniform(g, Signature::geometric(int(2))).unwrap();
    for k in 0..=4u64 {
        let want =
            ExactScalar::from_bigint((binomial(15, k) * BigUint::from(4u32).pow(k as u32)).into());
        assert_eq!(holant_bruteforce(&grid, k as usize).unwrap().value, want);
    }
}

#[test]
fn even_subgraphs_of_a_cycle() {
    for n in 3..=7 {
        let grid = SignatureGrid::uniform(named::cycle(n), Signature::mod_p(2)).unwrap();
        let all = holant_brute_all(&grid, u64::MAX).unwrap();
        for (k, v) in all.iter().enumerate() {
            assert_eq!(*v, int((k == 0 || k == n) as i64), "C_{n}, k = {k}");
        }
    }
}

#[test]
fn matching_fingerprint_is_signed_factorial() {
    // Only the finest partition survives, so χ(a) = (-1)^{a-1} (a-1)!.
    let s = Signature::hw_le1();
    for a in 1..=7u64 {
        let sign = if a % 2 == 1 { 1 } else { -1 };
        let want = int(sign * factorial(a - 1) as i64);
        assert_eq!(
            fingerprint_fast(a as usize, &s).value().unwrap(),
            &want,
            "a = {a}"
        );
        assert_eq!(
            fingerprint(a as usize, &s).unwrap().value().unwrap(),
            &want,
            "a = {a}"
        );
    }
}

#[test]
fn bell_numbers() {
    let want = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (n, &b) in want.iter().enumerate() {
        assert_eq!(bell_number(n), BigUint::from(b));
    }
}

#[test]
fn homomorphism_counts() {
    let pet = named::petersen();
    // Edge: 2|E|; two-edge path: Σ deg²; triangle into K4: 4·3·2.
    assert_eq!(count_hom(&named::single_edge(2), &pet), 30);
    assert_eq!(count_hom(&named::path(3), &pet), 90);
    assert_eq!(
        count_hom(&named::complete_graph(3), &named::complete_graph(4)),
        24
    );
    assert_eq!(count_hom(&named::complete_graph(3), &pet), 0);
}

#[test]
fn automorphism_counts() {
    for n in 3..=7 {
        assert_eq!(count_aut(&named::cycle(n)), 2 * n as u128);
        assert_eq!(count_aut(&named::complete_graph(n)), factorial(n as u64));
    }
    assert_eq!(count_aut(&named::petersen()), 120);
}

#[test]
fn three_uniform_catalogue() {
    let caps = CatalogueCaps::default();
    let sizes: Vec<usize> = (1..=2)
        .map(|k| {
            enumerate_uniform_hypergraphs(k, 3, None, &caps)
                .unwrap()
                .len()
        })
        .collect();
    // Two triples share 0, 1 or 2 vertices.
    assert_eq!(sizes, [1, 3]);
}

#[test]
fn petersen_perfect_matchings() {
    assert_eq!(
        count_perfect_matchings(&named::petersen(), u64::MAX).unwrap(),
        6
    );
    assert_eq!(
        count_perfect_matchings(&named::complete_graph(6), u64::MAX).unwrap(),
        15
    );
    assert_eq!(
        count_perfect_matchings(&named::cycle(6), u64::MAX).unwrap(),
        2
    );
}
