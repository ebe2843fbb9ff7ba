//! Multivariate gcd by recursive content/primitive-part splitting and
//! univariate subresultant remainder sequences.

use super::{Poly, Rat};
use crate::error::PolyError;

/// Gcd normalized to coprime integer coefficients with positive leading
/// coefficient.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly, PolyError> {
    if a.vars() != b.vars() {
        return Err(PolyError::VarTableMismatch);
    }
    if a.is_zero() && b.is_zero() {
        return Err(PolyError::GcdOfZeros);
    }
    Ok(gcd_rec(a, b).integer_primitive())
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.vars());
    }
    // Monomial fast path.
    if a.num_terms() == 1 && b.num_terms() == 1 {
        let (ma, _) = a.leading().unwrap();
        let (mb, _) = b.leading().unwrap();
        return Poly::term(a.vars(), ma.gcd(mb), Rat::from_integer(1.into()));
    }
    let var = (0..a.vars().len())
        .find(|&i| a.involves(i) || b.involves(i))
        .expect("nonconstant polynomial involves a variable");
    if !a.involves(var) {
        return gcd_rec(a, &content(b, var));
    }
    if !b.involves(var) {
        return gcd_rec(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd_rec(&ca, &cb);
    let pa = exact(a, &ca);
    let pb = exact(b, &cb);
    let g = subresultant_gcd(pa.to_univariate(var), pb.to_univariate(var));
    let g = Poly::from_univariate(a.vars(), var, &g);
    &c * &g
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content(p: &Poly, var: usize) -> Poly {
    let coeffs = p.to_univariate(var);
    let mut g = Poly::zero(p.vars());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        g = gcd_rec(&g, c);
        if g.is_constant() {
            return Poly::one(p.vars());
        }
    }
    g.integer_primitive()
}

fn exact(p: &Poly, d: &Poly) -> Poly {
    p.div_exact(d).expect("same table").expect("exact division")
}

type UPoly = Vec<Poly>;

fn udeg(p: &UPoly) -> usize {
    p.len() - 1
}

fn trim(p: &mut UPoly) {
    while p.len() > 1 && p.last().map_or(false, Poly::is_zero) {
        p.pop();
    }
}

fn uis_zero(p: &UPoly) -> bool {
    p.iter().all(Poly::is_zero)
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = udeg(b);
    let lb = b[db].clone();
    let mut steps = udeg(a) + 1 - db;
    while !uis_zero(&r) && udeg(&r) >= db {
        let dr = udeg(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let k = i + dr - db;
            r[k] = &r[k] - &(&lr * bc);
        }
        r.pop();
        trim(&mut r);
        steps -= 1;
        if r.is_empty() {
            r.push(Poly::zero(&lb.vars().clone()));
        }
    }
    let f = lb.pow(steps as u32);
    for c in r.iter_mut() {
        *c = &*c * &f;
    }
    r
}

fn subresultant_gcd(mut a: UPoly, mut b: UPoly) -> UPoly {
    trim(&mut a);
    trim(&mut b);
    if udeg(&a) < udeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let vars = a[0].vars().clone();
    let one = || vec![Poly::one(&vars)];
    if udeg(&b) == 0 {
        return one();
    }
    let mut g = Poly::one(&vars);
    let mut h = Poly::one(&vars);
    loop {
        let delta = udeg(&a) - udeg(&b);
        let r = prem(&a, &b);
        if uis_zero(&r) {
            break;
        }
        if udeg(&r) == 0 {
            return one();
        }
        let divisor = &g * &h.pow(delta as u32);
        a = b;
        b = r.iter().map(|c| exact(c, &divisor)).collect();
        g = a[udeg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => exact(&g.pow(d as u32), &h.pow(d as u32 - 1)),
        };
    }
    // primitive part of b
    let mut c = Poly::zero(&vars);
    for x in b.iter().filter(|x| !x.is_zero()) {
        c = gcd_rec(&c, x);
    }
    b.iter().map(|x| if x.is_zero() { x.clone() } else { exact(x, &c) }).collect()
}
