use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vars::same_table;
use super::{Monomial, Rat, VarTable};
use crate::error::PolyError;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in a map ordered by the canonical (graded reverse
/// lexicographic) monomial order; zero coefficients are never stored.
#[derive(Clone)]
pub struct Poly {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn from_int(vars: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(vars, Rat::from_integer(c.into()))
    }

    pub fn var(vars: &Arc<VarTable>, i: usize) -> Self {
        Self::term(vars, Monomial::var(vars.len(), i), Rat::one())
    }

    pub fn var_named(vars: &Arc<VarTable>, name: &str) -> Result<Self, PolyError> {
        let i = vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, i))
    }

    pub fn term(vars: &Arc<VarTable>, m: Monomial, c: Rat) -> Self {
        debug_assert_eq!(m.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &Arc<VarTable>, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.vars.len()))
    }

    /// Leading term in canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Indices of variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.involves(i)).collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Poly) -> Result<(), PolyError> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(PolyError::VarTableMismatch)
        }
    }

    /// Exact `a op b`; the two operands must share a variable table.
    pub fn arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly, PolyError> {
        a.check_table(b)?;
        Ok(match op {
            ArithOp::Add => a.add_impl(b, false),
            ArithOp::Sub => a.add_impl(b, true),
            ArithOp::Mul => a.mul_impl(b),
        })
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[var] -= 1;
                out.add_term(m2, c * Rat::from_integer(e.into()));
            }
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; every image must live over
    /// `target`, which becomes the table of the result.
    pub fn compose(&self, target: &Arc<VarTable>, images: &[Poly]) -> Result<Poly, PolyError> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        if images.iter().any(|p| !same_table(&p.vars, target)) {
            return Err(PolyError::VarTableMismatch);
        }
        let target = target.clone();
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over `target`, sending variable `i` to
    /// variable `map[i]` of `target`.
    pub fn embed(&self, target: &Arc<VarTable>, map: &[usize]) -> Poly {
        let n = target.len();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitutes a rational value for one variable.
    pub fn eval_var(&self, var: usize, value: &Rat) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out.add_term(m2, c * num_traits::pow(value.clone(), e as usize));
        }
        out
    }

    /// Coefficients with respect to `var`: entry `k` is the coefficient of
    /// `var^k` (a polynomial not involving `var`).
    pub fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Poly::zero(&self.vars); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            coeffs[k].add_term(m2, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(vars: &Arc<VarTable>, var: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += k as u32;
                out.add_term(m2, a.clone());
            }
        }
        out
    }

    /// Multivariate division by a single polynomial. Returns `(q, r)` with
    /// `self = q * d + r` and no term of `r` divisible by the leading
    /// monomial of `d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), PolyError> {
        self.check_table(d)?;
        let (lm, lc) = match d.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut q = Poly::zero(&self.vars);
        let mut r = Poly::zero(&self.vars);
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            match lm.quotient_of(&m) {
                Some(t) => {
                    let f = &c / &lc;
                    p = &p - &d.mul_term(&t, &f);
                    q.add_term(t, f);
                }
                None => {
                    p.terms.remove(&m);
                    r.add_term(m, c);
                }
            }
        }
        Ok((q, r))
    }

    /// `Some(q)` with `self = q * d` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>, PolyError> {
        let (q, r) = self.div_rem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators once denominators are cleared.
    pub fn integer_content(&self) -> BigInt {
        let l = self.denominator_lcm();
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&l / c.denom()))))
    }

    /// Scalar multiple with coprime integer coefficients and positive leading
    /// coefficient. Zero stays zero.
    pub fn integer_primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.denominator_lcm();
        let g = self.integer_content();
        let mut s = Rat::new(l, g);
        if self.leading_coeff().is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn canonical_string(&self) -> String {
        super::text::format_poly(self)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator impls panic on table mismatch; use `Poly::arith` for a fallible form.
macro_rules! binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl<'a, 'b> $tr<&'b Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: &'b Poly) -> Poly {
                Poly::arith(self, rhs, $op).expect("polynomials over different variable tables")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Returns `Some(q)` with `g = f * q` when `f` divides `g`, `None` otherwise.
pub fn poly_divides(f: &Poly, g: &Poly) -> Result<Option<Poly>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::DivisionByZero);
    }
    g.div_exact(f)
}
