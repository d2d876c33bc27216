//! Minimal coefficient-ring interface used by [`crate::LatticePoly`].

use std::fmt;

use num_bigint::BigInt;

use crate::{AlgebraError, Poly, RatFunc};

/// A commutative ring with exact, canonical elements.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(c: i64) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn div_ref(&self, other: &Self) -> Result<Self, AlgebraError>;
    fn from_ratio(a: i64, b: i64) -> Self;
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn from_i64(c: i64) -> Self {
        Poly::constant(c)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn from_i64(c: i64) -> Self {
        RatFunc::from_integer(c)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl Field for RatFunc {
    fn div_ref(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.div(other)
    }
    fn from_ratio(a: i64, b: i64) -> Self {
        RatFunc::from_ratio(BigInt::from(a), BigInt::from(b)).expect("nonzero denominator")
    }
}
