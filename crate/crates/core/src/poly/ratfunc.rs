use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{poly_gcd, Poly, Rat, VarTable};
use crate::error::PolyError;

/// Reduced quotient of two polynomials.
///
/// Numerator and denominator are coprime, both have integer coefficients
/// whose joint content is 1, and the denominator has a positive leading
/// coefficient. Two equal fractions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, PolyError> {
        if num.vars() != den.vars() {
            return Err(PolyError::VarTableMismatch);
        }
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { den: Poly::one(num.vars()), num });
        }
        let g = poly_gcd(&num, &den)?;
        let num = num.div_exact(&g)?.expect("gcd divides numerator");
        let den = den.div_exact(&g)?.expect("gcd divides denominator");
        // clear denominators jointly, then divide by the joint integer content
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let mut s = joint_scale(&num, &den, &l);
        if den.leading_coeff().is_negative() {
            s = -s;
        }
        Ok(RatFunc { num: num.scale(&s), den: den.scale(&s) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { den: Poly::one(p.vars()), num: p }
    }

    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Self::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::from_poly(Poly::one(vars))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this fraction equals, if its denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        if self.den.is_constant() {
            Some(self.num.scale(&(Rat::from_integer(1.into()) / self.den.constant_term())))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<RatFunc, PolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        // powers of coprime polynomials stay coprime
        RatFunc::new(self.num.pow(e), self.den.pow(e)).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }
}

/// Positive scalar turning `num` and `den` into integer polynomials with
/// joint content 1.
fn joint_scale(num: &Poly, den: &Poly, l: &BigInt) -> Rat {
    let lr = Rat::from_integer(l.clone());
    let ni = num.scale(&lr);
    let di = den.scale(&lr);
    let mut g = BigInt::zero();
    for (_, c) in ni.terms().chain(di.terms()) {
        g = g.gcd(c.numer());
    }
    Rat::new(l.clone(), g)
}

/// Checked constructor matching the `ratfunc_normalize` contract.
pub fn ratfunc_normalize(num: Poly, den: Poly) -> Result<RatFunc, PolyError> {
    RatFunc::new(num, den)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a, 'b> Add<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'b RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        RatFunc::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl<'a, 'b> Sub<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'b RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'b RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

/// Panics on division by zero.
impl<'a, 'b> Div<&'b RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &'b RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}
