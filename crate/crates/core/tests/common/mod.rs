#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use lnd_core::derivation::Derivation;
use lnd_core::poly::{Monomial, Poly, Rat, VarTable};
use num_traits::{One, Zero};
use rand::Rng;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Random polynomial with up to `terms` terms of total degree `≤ max_deg`
/// in the variables `allowed`, coefficients in `[-5, 5]`.
pub fn random_poly<R: Rng>(rng: &mut R, vars: &Arc<VarTable>, allowed: &[usize], terms: usize, max_deg: u32) -> Poly {
    let mut p = Poly::zero(vars);
    for _ in 0..terms {
        let mut e = vec![0u32; vars.len()];
        let deg = rng.random_range(0..=max_deg);
        for _ in 0..deg {
            if allowed.is_empty() {
                break;
            }
            e[allowed[rng.random_range(0..allowed.len())]] += 1;
        }
        let c = rng.random_range(-5i64..=5);
        p = &p + &Poly::term(vars, Monomial(e), rat(c));
    }
    p
}

pub fn random_nonzero_poly<R: Rng>(rng: &mut R, vars: &Arc<VarTable>, allowed: &[usize], terms: usize, max_deg: u32) -> Poly {
    loop {
        let p = random_poly(rng, vars, allowed, terms, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Triangular derivation `D(x_i) ∈ ℚ[x_0, …, x_{i-1}]`, hence locally
/// nilpotent.
pub fn random_triangular<R: Rng>(rng: &mut R, vars: &Arc<VarTable>, max_deg: u32) -> Derivation {
    let images = (0..vars.len())
        .map(|i| {
            let earlier: Vec<usize> = (0..i).collect();
            if rng.random_bool(0.25) {
                Poly::zero(vars)
            } else {
                random_poly(rng, vars, &earlier, 2, max_deg)
            }
        })
        .collect();
    Derivation::new(vars, images).unwrap()
}

/// Derivation whose images are single monomials (with coefficients ±1, ±2
/// or zero) of degree `≤ max_deg`.
pub fn random_monomial_derivation<R: Rng>(rng: &mut R, vars: &Arc<VarTable>, max_deg: u32) -> Derivation {
    let all: Vec<usize> = (0..vars.len()).collect();
    let images = (0..vars.len())
        .map(|_| {
            if rng.random_bool(0.2) {
                return Poly::zero(vars);
            }
            let mut e = vec![0u32; vars.len()];
            for _ in 0..rng.random_range(0..=max_deg) {
                e[all[rng.random_range(0..all.len())]] += 1;
            }
            let c = [1i64, -1, 2, -2][rng.random_range(0..4)];
            Poly::term(vars, Monomial(e), rat(c))
        })
        .collect();
    Derivation::new(vars, images).unwrap()
}

/// Exponent vectors of total degree `≤ d` in `n` variables, any order.
pub fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponents(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

type Dense = BTreeMap<Vec<u32>, Rat>;

fn dense(p: &Poly) -> Dense {
    p.terms().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
}

/// `D(x^a)` by the product rule, computed on plain maps.
fn apply_to_monomial(images: &[Dense], a: &[u32]) -> Dense {
    let mut out: Dense = BTreeMap::new();
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let mut rest = a.to_vec();
        rest[i] -= 1;
        for (m, c) in &images[i] {
            let e: Vec<u32> = rest.iter().zip(m).map(|(x, y)| x + y).collect();
            let v = out.entry(e).or_insert_with(Rat::zero);
            *v += c * rat(ai as i64);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Reduced row echelon form of dense rows, returning the nonzero rows.
pub fn rref(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rat::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Brute-force kernel of `D` on polynomials of degree `≤ d`: every window
/// coefficient is an unknown and `D(f) = 0` is solved as a dense linear
/// system. Returns coefficient vectors over `exponents(n, d)`.
pub fn oracle_kernel(d: &Derivation, deg: u32) -> (Vec<Vec<u32>>, Vec<Vec<Rat>>) {
    let n = d.vars().len();
    let images: Vec<Dense> = d.images().iter().map(dense).collect();
    let cols = exponents(n, deg);
    let columns: Vec<Dense> = cols.iter().map(|a| apply_to_monomial(&images, a)).collect();
    let mut out_monos: Vec<Vec<u32>> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
    out_monos.sort();
    out_monos.dedup();
    // system rows: one per output monomial
    let system: Vec<Vec<Rat>> = out_monos
        .iter()
        .map(|m| columns.iter().map(|c| c.get(m).cloned().unwrap_or_else(Rat::zero)).collect())
        .collect();
    let reduced = rref(system);
    let ncols = cols.len();
    let mut pivots = Vec::new();
    for row in &reduced {
        pivots.push(row.iter().position(|v| !v.is_zero()).unwrap());
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    (cols, basis)
}

/// Coefficient vector of `p` over the given exponent list.
pub fn coords(p: &Poly, cols: &[Vec<u32>]) -> Vec<Rat> {
    let m = dense(p);
    assert!(m.keys().all(|k| cols.contains(k)), "polynomial outside the window");
    cols.iter().map(|c| m.get(c).cloned().unwrap_or_else(Rat::zero)).collect()
}

pub fn rank(rows: Vec<Vec<Rat>>) -> usize {
    rref(rows).len()
}

/// Proptest strategy for polynomials over `vars` with exponents `< max_exp`
/// per variable.
pub fn poly_strategy(vars: Arc<VarTable>, max_exp: u32, max_terms: usize) -> impl proptest::strategy::Strategy<Value = Poly> {
    use proptest::prelude::*;
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0..max_exp, n), -6i64..=6), 0..=max_terms).prop_map(move |terms| {
        terms.into_iter().fold(Poly::zero(&vars), |acc, (e, c)| &acc + &Poly::term(&vars, Monomial(e), rat(c)))
    })
}

pub fn nonzero_poly_strategy(vars: Arc<VarTable>, max_exp: u32, max_terms: usize) -> impl proptest::strategy::Strategy<Value = Poly> {
    use proptest::prelude::*;
    poly_strategy(vars, max_exp, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}
