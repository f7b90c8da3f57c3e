//! Invariants checked on random instances.

mod common;

use holant_core::eval::{
    holant, holant_brute_all, holant_bruteforce, holant_bruteforce_with, uniformize, EvalOptions,
    MethodChoice,
};
use holant_core::fingerprint::{fingerprint, fingerprint_fast};
use holant_core::hombasis::{count_hom, tensor_product};
use holant_core::reductions::{holant_to_vcsp, vcsp_count, vcsp_to_holant};
use holant_core::{build_grid, canonical_form, ExactScalar, Execution, SignatureGrid};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const BUDGET: u64 = 10_000_000;

fn small_grid(rng: &mut ChaCha8Rng) -> SignatureGrid {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=7);
    let multi = rng.gen_bool(0.3);
    let graph = random_hypergraph(rng, n, m, 3, multi);
    let palette = (0..rng.gen_range(1..=3))
        .map(|_| {
            let zero = rng.gen_bool(0.2);
            random_signature(rng, zero)
        })
        .collect();
    random_grid(rng, graph, palette)
}

fn relabelled(grid: &SignatureGrid, rng: &mut ChaCha8Rng) -> SignatureGrid {
    let mut perm: Vec<usize> = (0..grid.n()).collect();
    perm.shuffle(rng);
    let mut assignment = vec![0; grid.n()];
    for v in 0..grid.n() {
        assignment[perm[v]] = grid.assignment()[v];
    }
    build_grid(
        grid.graph().relabel(&perm),
        grid.palette().to_vec(),
        assignment,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fingerprint_paths_agree(seed: u64, a in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let zero = rng.gen_bool(0.2);
        let s = random_signature(&mut rng, zero);
        prop_assert_eq!(fingerprint(a, &s).unwrap(), fingerprint_fast(a, &s));
    }

    #[test]
    fn holant_is_invariant_under_relabelling(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let other = relabelled(&grid, &mut rng);
        prop_assert_eq!(holant_brute_all(&grid, BUDGET).unwrap(), holant_brute_all(&other, BUDGET).unwrap());
        prop_assert_eq!(canonical_form(&grid.coloured_graph()).unwrap(), canonical_form(&other.coloured_graph()).unwrap());
    }

    #[test]
    fn all_k_sweep_matches_single_k(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let all = holant_brute_all(&grid, BUDGET).unwrap();
        prop_assert_eq!(all.len() as u64, grid.graph().num_edges() + 1);
        for (k, v) in all.iter().enumerate() {
            prop_assert_eq!(v, &holant_bruteforce(&grid, k).unwrap().value);
        }
        prop_assert_eq!(&all[0], &grid.empty_product());
    }

    #[test]
    fn parallel_and_sequential_agree(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let k = rng.gen_range(0..=grid.graph().num_edges() as usize);
        let par = holant_bruteforce_with(&grid, k, BUDGET, Execution::Parallel).unwrap();
        let seq = holant_bruteforce_with(&grid, k, BUDGET, Execution::Sequential).unwrap();
        prop_assert_eq!(par.value, seq.value);
    }

    #[test]
    fn normalisation_factors_out(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let (normal, scale) = grid.normalized().unwrap();
        let before = holant_brute_all(&grid, BUDGET).unwrap();
        let after = holant_brute_all(&normal, BUDGET).unwrap();
        for (b, a) in before.iter().zip(&after) {
            prop_assert_eq!(b, &(&scale * a));
        }
    }

    #[test]
    fn uniformisation_preserves_every_k(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let u = uniformize(&grid);
        prop_assert!(grid.graph().num_distinct_edges() == 0 || u.uniformity().is_some());
        prop_assert_eq!(holant_brute_all(&u, BUDGET).unwrap(), holant_brute_all(&grid, BUDGET).unwrap());
    }

    #[test]
    fn fpt_matches_brute_force(seed: u64, with_zero: bool, multi: bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = random_t1_grid(&mut rng, with_zero, multi);
        let opts = EvalOptions::default();
        for k in 0..=4 {
            let fpt = holant(&grid, k, MethodChoice::Fpt, &opts).unwrap();
            prop_assert_eq!(fpt.value, holant_bruteforce(&grid, k).unwrap().value);
        }
    }

    #[test]
    fn vcsp_round_trip(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let k = rng.gen_range(0..=grid.graph().num_edges() as usize);
        let want = holant_bruteforce(&grid, k).unwrap().value;
        let inst = holant_to_vcsp(&grid, k);
        prop_assert_eq!(vcsp_count(&inst, BUDGET).unwrap(), want.clone());
        if inst.validate().is_ok() {
            let (back, k2) = vcsp_to_holant(&inst).unwrap();
            prop_assert_eq!(holant_bruteforce(&back, k2).unwrap().value, want);
        }
    }

    #[test]
    fn tensor_product_multiplies_homs(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut graph = || {
            let n = rng.gen_range(2..=4);
            let m = rng.gen_range(1..=3);
            let g = random_hypergraph(&mut rng, n, m, 2, false);
            let edges: Vec<Vec<usize>> = g.edges().iter().filter(|e| e.len() == 2).cloned().collect();
            holant_core::Hypergraph::new(n, edges).unwrap()
        };
        let (f, g, h) = (graph(), graph(), graph());
        let gh = tensor_product(&g, &h).unwrap();
        prop_assert_eq!(count_hom(&f, &gh), count_hom(&f, &g) * count_hom(&f, &h));
    }

    #[test]
    fn scaling_a_signature_scales_by_its_vertex_count(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = small_grid(&mut rng);
        let c = ExactScalar::ratio(rng.gen_range(1..=3), rng.gen_range(1..=3));
        let palette: Vec<_> = grid.palette().iter().map(|s| s.scaled(&c)).collect();
        let scaled = build_grid(grid.graph().clone(), palette, grid.assignment().to_vec()).unwrap();
        let factor = c.pow_u(grid.n() as u64);
        let before = holant_brute_all(&grid, BUDGET).unwrap();
        let after = holant_brute_all(&scaled, BUDGET).unwrap();
        for (b, a) in before.iter().zip(&after) {
            prop_assert_eq!(a, &(&factor * b));
        }
    }
}
