//! Exact scalar rings used as multivector coefficients.

mod gcd;
mod polynomial;
mod ratfunc;
mod rational;

use std::fmt::{Debug, Display};

pub use gcd::gcd;
pub use polynomial::{Monomial, Polynomial, DEFAULT_VARS, MAX_VARS};
pub use ratfunc::RationalFunction;
pub use rational::Rational;

use crate::error::Result;

/// Coefficient ring of a multivector. Implementations are exact fields (or
/// behave as such where `checked_div` succeeds).
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn checked_div(&self, other: &Self) -> Result<Self>;
    fn from_rational(r: Rational) -> Self;
    /// The value as a rational when it is constant.
    fn as_rational(&self) -> Option<Rational>;
    fn exact_sqrt(&self) -> Option<Self>;
    /// Coordinate `x_i`, for rings that have coordinates.
    fn variable(index: usize) -> Option<Self>;
    /// Whether the printed form needs parentheses when used as a factor.
    fn is_compound(&self) -> bool;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    fn scale_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r.clone()))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn checked_div(&self, other: &Self) -> Result<Self> {
        Rational::checked_div(self, other)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn exact_sqrt(&self) -> Option<Self> {
        Rational::exact_sqrt(self)
    }
    fn variable(_index: usize) -> Option<Self> {
        None
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::constant(Rational::zero())
    }
    fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn checked_div(&self, other: &Self) -> Result<Self> {
        RationalFunction::checked_div(self, other)
    }
    fn from_rational(r: Rational) -> Self {
        RationalFunction::constant(r)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.constant_value()
    }
    fn exact_sqrt(&self) -> Option<Self> {
        RationalFunction::exact_sqrt(self)
    }
    fn variable(index: usize) -> Option<Self> {
        RationalFunction::var(DEFAULT_VARS.max(index + 1), index).ok()
    }
    fn is_compound(&self) -> bool {
        !self.is_polynomial() || self.numerator().len() > 1
    }
    fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}
