//! Derivations of polynomial rings, their restrictions to subalgebras, and
//! the constructions built on local nilpotency.

mod algebra;
pub(crate) mod lnd;
mod slice;

pub use algebra::Algebra;
pub use lnd::{check_lnd, check_stability, LndStatus, Nilpotency, Stability, DEFAULT_ITER_BOUND};
pub use slice::{dixmier_decompose, dixmier_reconstruct, find_local_slice, LocalSlice};

use std::sync::Arc;

use serde::Serialize;

use crate::error::{DerivationError, PolyError};
use crate::poly::{same_table, Poly, Rat, RatFunc, VarTable};

/// ℚ-derivation of the ambient polynomial ring, fixed by the images of the
/// variables and extended by the Leibniz rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    vars: Arc<VarTable>,
    images: Vec<Poly>,
}

impl Derivation {
    pub fn new(vars: &Arc<VarTable>, images: Vec<Poly>) -> Result<Self, PolyError> {
        if images.len() != vars.len() || images.iter().any(|p| !same_table(p.vars(), vars)) {
            return Err(PolyError::VarTableMismatch);
        }
        Ok(Derivation { vars: vars.clone(), images })
    }

    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Derivation { vars: vars.clone(), images: vec![Poly::zero(vars); vars.len()] }
    }

    /// `coeff * ∂/∂var`.
    pub fn partial(vars: &Arc<VarTable>, var: usize, coeff: Poly) -> Self {
        let mut d = Self::zero(vars);
        d.images[var] = coeff;
        d
    }

    /// Builds a derivation from `(variable name, image)` pairs; unnamed
    /// variables map to zero.
    pub fn from_named(vars: &Arc<VarTable>, images: &[(&str, Poly)]) -> Result<Self, PolyError> {
        let mut d = Self::zero(vars);
        for (name, img) in images {
            let i = vars.index_of(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            if !same_table(img.vars(), vars) {
                return Err(PolyError::VarTableMismatch);
            }
            d.images[i] = img.clone();
        }
        Ok(d)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn image(&self, var: usize) -> &Poly {
        &self.images[var]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Poly::is_zero)
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly, PolyError> {
        if !same_table(f.vars(), &self.vars) {
            return Err(PolyError::VarTableMismatch);
        }
        let mut out = Poly::zero(&self.vars);
        for (i, img) in self.images.iter().enumerate() {
            if !img.is_zero() && f.involves(i) {
                out = &out + &(img * &f.partial(i));
            }
        }
        Ok(out)
    }

    /// Quotient rule: `D(u/v) = (D(u) v - u D(v)) / v²`.
    pub fn apply_ratfunc(&self, f: &RatFunc) -> Result<RatFunc, PolyError> {
        let (u, v) = (f.num(), f.den());
        let num = &(&self.apply(u)? * v) - &(u * &self.apply(v)?);
        RatFunc::new(num, v * v)
    }

    /// `Dⁿ(f)`.
    pub fn iterate(&self, f: &Poly, n: usize) -> Result<Poly, PolyError> {
        let mut g = f.clone();
        for _ in 0..n {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g)?;
        }
        Ok(g)
    }

    /// Smallest `n` with `Dⁿ(f) = 0`, searching up to `bound`.
    pub fn nilpotency_index(&self, f: &Poly, bound: usize) -> Result<Option<usize>, PolyError> {
        let mut g = f.clone();
        for n in 0..=bound {
            if g.is_zero() {
                return Ok(Some(n));
            }
            if n < bound {
                g = self.apply(&g)?;
            }
        }
        Ok(None)
    }

    /// Nilpotency indices of the variables; their existence makes the
    /// derivation locally nilpotent on the whole ambient ring.
    pub fn ambient_nilpotency(&self, bound: usize) -> Result<Vec<usize>, DerivationError> {
        (0..self.vars.len())
            .map(|i| {
                self.nilpotency_index(&Poly::var(&self.vars, i), bound)?.ok_or_else(|| {
                    DerivationError::BoundExceeded { element: self.vars.name(i).to_string(), bound }
                })
            })
            .collect()
    }

    pub fn neg(&self) -> Derivation {
        Derivation { vars: self.vars.clone(), images: self.images.iter().map(|p| -p).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Derivation {
        Derivation { vars: self.vars.clone(), images: self.images.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation, PolyError> {
        if !same_table(&self.vars, &other.vars) {
            return Err(PolyError::VarTableMismatch);
        }
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect();
        Ok(Derivation { vars: self.vars.clone(), images })
    }

    /// `exp(D)(f) = Σ Dⁿ(f)/n!` for `D` locally nilpotent on the ambient ring
    /// (verified on the variables within `bound` iterations).
    pub fn exp_map_with_bound(&self, f: &Poly, bound: usize) -> Result<Poly, DerivationError> {
        self.ambient_nilpotency(bound)?;
        Ok(self.exp_unchecked(f)?)
    }

    pub fn exp_map(&self, f: &Poly) -> Result<Poly, DerivationError> {
        self.exp_map_with_bound(f, DEFAULT_ITER_BOUND)
    }

    fn exp_unchecked(&self, f: &Poly) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(&self.vars);
        let mut term = f.clone();
        let mut n: u64 = 0;
        let mut fact = Rat::from_integer(1.into());
        // terminates because D is locally nilpotent on the ambient ring
        while !term.is_zero() {
            out = &out + &term.scale(&(Rat::from_integer(1.into()) / &fact));
            term = self.apply(&term)?;
            n += 1;
            fact *= Rat::from_integer(n.into());
        }
        Ok(out)
    }

    /// `exp(E) ∘ D ∘ exp(-E)`, computed on the variables.
    pub fn conjugate(&self, e: &Derivation) -> Result<Derivation, DerivationError> {
        if !same_table(&self.vars, &e.vars) {
            return Err(PolyError::VarTableMismatch.into());
        }
        e.ambient_nilpotency(DEFAULT_ITER_BOUND)?;
        let minus = e.neg();
        let images = (0..self.vars.len())
            .map(|i| {
                let inner = minus.exp_unchecked(&Poly::var(&self.vars, i))?;
                e.exp_unchecked(&self.apply(&inner)?)
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Derivation { vars: self.vars.clone(), images })
    }

    /// DSL form, e.g. `x -> y; y -> 0;`.
    pub fn describe(&self) -> String {
        (0..self.vars.len())
            .map(|i| format!("{} -> {};", self.vars.name(i), self.images[i]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Serialize for Derivation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.images.len()))?;
        for (i, img) in self.images.iter().enumerate() {
            m.serialize_entry(self.vars.name(i), &img.to_string())?;
        }
        m.end()
    }
}

/// `D(f)`; see [`Derivation::apply`].
pub fn apply(d: &Derivation, f: &Poly) -> Result<Poly, PolyError> {
    d.apply(f)
}
