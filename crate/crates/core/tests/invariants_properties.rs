mod common;

use std::sync::Arc;

use common::{coords, oracle_kernel, random_monomial_derivation, random_nonzero_poly, random_poly, random_triangular, rank, rat};
use lnd_core::derivation::{Algebra, Derivation, DEFAULT_ITER_BOUND};
use lnd_core::invariants::{
    chain_certificate, kernel_basis_bounded, kernel_intersection_bounded, ml_certificate, subalgebra_window, ChainLevel,
    TruncationSpec,
};
use lnd_core::poly::{poly_divides, poly_gcd, Poly, RatFunc, VarTable};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn vars(n: usize) -> Arc<VarTable> {
    VarTable::main_only(&["x", "y", "z"][..n]).unwrap()
}

fn kernel_combination(rng: &mut ChaCha8Rng, basis: &[Poly], v: &Arc<VarTable>) -> Poly {
    basis.iter().fold(Poly::zero(v), |acc, b| &acc + &b.scale(&rat(rng.random_range(-2..=2))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_matches_brute_force(seed in any::<u64>(), n in 1usize..=3, d in 0u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(n);
        let der = random_monomial_derivation(&mut rng, &v, 2);
        let k = kernel_basis_bounded(&der, TruncationSpec::degree(d)).unwrap();
        let (cols, oracle) = oracle_kernel(&der, d);
        prop_assert_eq!(k.dim(), oracle.len());
        let ours: Vec<_> = k.basis.iter().map(|p| coords(p, &cols)).collect();
        let mut both = ours.clone();
        both.extend(oracle.iter().cloned());
        prop_assert_eq!(rank(both), oracle.len());
    }

    #[test]
    fn windows_grow_monotonically(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(3);
        let der = random_monomial_derivation(&mut rng, &v, 2);
        let dims: Vec<usize> = (0..4).map(|d| kernel_basis_bounded(&der, TruncationSpec::degree(d)).unwrap().dim()).collect();
        prop_assert!(dims.windows(2).all(|w| w[0] <= w[1]), "{:?}", dims);
        let gens: Vec<Poly> = (0..3).map(|_| random_nonzero_poly(&mut rng, &v, &[0, 1, 2], 2, 2)).collect();
        let b = Algebra::new(&v, gens).unwrap();
        let wdims: Vec<usize> = (0..4).map(|l| subalgebra_window(&b, l).basis.len()).collect();
        prop_assert!(wdims.windows(2).all(|w| w[0] <= w[1]), "{:?}", wdims);
    }

    #[test]
    fn larger_derivation_sets_keep_constants_only(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(3);
        let b = Algebra::ambient(&v);
        let ds: Vec<Derivation> = (0..3).map(|_| random_triangular(&mut rng, &v, 1)).collect();
        let k = rng.random_range(1..=2);
        let spec = TruncationSpec::words(2);
        let small = ml_certificate(&b, &ds[..k], spec, DEFAULT_ITER_BOUND).unwrap();
        let large = ml_certificate(&b, &ds, spec, DEFAULT_ITER_BOUND).unwrap();
        prop_assert!(large.kernel_basis.len() <= small.kernel_basis.len());
        if small.is_constants_only() {
            prop_assert!(large.is_constants_only());
        }
    }

    #[test]
    fn kernel_quotients_in_the_ring_are_kernel_elements(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(3);
        let ds: Vec<Derivation> = (0..2).map(|_| random_triangular(&mut rng, &v, 1)).collect();
        let spec = TruncationSpec::degree(2);
        let kernel = kernel_intersection_bounded(&v, &ds, spec).unwrap().basis;
        let k1 = kernel_combination(&mut rng, &kernel, &v);
        let k2 = kernel_combination(&mut rng, &kernel, &v);
        let (u, w) = (&k1 * &k2, k1.clone());
        prop_assume!(!w.is_zero());
        // u/w ∈ K_Δ, and it lies in B = ambient ring exactly when w | u
        if let Some(q) = poly_divides(&w, &u).unwrap() {
            for d in &ds {
                prop_assert!(d.apply(&q).unwrap().is_zero());
            }
            let window = kernel_intersection_bounded(&v, &ds, TruncationSpec::degree(4)).unwrap().basis;
            let mut rows: Vec<_> = window.iter().map(|p| common::coords(p, &common::exponents(3, 4))).collect();
            let before = rank(rows.clone());
            rows.push(common::coords(&q, &common::exponents(3, 4)));
            prop_assert_eq!(rank(rows), before);
        }
    }

    #[test]
    fn coprime_kernel_fractions_have_kernel_parts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(3);
        let ds: Vec<Derivation> = (0..2).map(|_| random_triangular(&mut rng, &v, 1)).collect();
        let kernel = kernel_intersection_bounded(&v, &ds, TruncationSpec::degree(2)).unwrap().basis;
        let k1 = kernel_combination(&mut rng, &kernel, &v);
        let k2 = kernel_combination(&mut rng, &kernel, &v);
        let h = random_nonzero_poly(&mut rng, &v, &[0, 1, 2], 2, 2);
        prop_assume!(!k1.is_zero() && !k2.is_zero());
        let (u, w) = (&k1 * &h, &k2 * &h);
        let g = poly_gcd(&u, &w).unwrap();
        let u = poly_divides(&g, &u).unwrap().unwrap();
        let w = poly_divides(&g, &w).unwrap().unwrap();
        let f = RatFunc::new(u.clone(), w.clone()).unwrap();
        for d in &ds {
            if d.apply_ratfunc(&f).unwrap().is_zero() {
                prop_assert!(d.apply(&u).unwrap().is_zero());
                prop_assert!(d.apply(&w).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn verified_chains_never_exceed_dimension(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = vars(3);
        let partial = |i: usize| Derivation::partial(&v, i, Poly::one(&v));
        let mut levels = Vec::new();
        let mut gens: Vec<Poly> = Vec::new();
        for _ in 0..rng.random_range(1..=5) {
            let w = if rng.random_bool(0.6) {
                Poly::var(&v, rng.random_range(0..3))
            } else {
                random_nonzero_poly(&mut rng, &v, &[0, 1, 2], 2, 2)
            };
            let support: Vec<usize> = gens.iter().chain([&w]).flat_map(|g| g.support_vars()).collect();
            let derivations = (0..3).filter(|i| !support.contains(i)).map(partial).collect();
            levels.push(ChainLevel { generators: gens.clone(), derivations: Vec::new(), witness: None });
            gens.push(w.clone());
            levels.push(ChainLevel { generators: gens.clone(), derivations, witness: Some(w) });
            levels.remove(levels.len() - 2);
        }
        levels.insert(0, ChainLevel { generators: Vec::new(), derivations: (0..3).map(partial).collect(), witness: None });
        if let Ok(cert) = chain_certificate(&levels) {
            prop_assert!(cert.length <= v.len(), "{:?}", cert.levels);
        }
    }
}

#[test]
fn random_polys_stay_in_window() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let v = vars(2);
    let p = random_poly(&mut rng, &v, &[0, 1], 5, 3);
    assert!(p.total_degree().unwrap_or(0) <= 3);
}
