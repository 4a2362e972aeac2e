use std::fmt;

use super::gcd::gcd;
use super::polynomial::{Polynomial, DEFAULT_VARS};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Quotient of polynomials in canonical form: the denominator is monic
/// under graded lex order and shares no non-constant factor with the
/// numerator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let vars = p.vars();
        RationalFunction {
            num: p,
            den: Polynomial::one(vars),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(DEFAULT_VARS, c))
    }

    pub fn var(vars: usize, i: usize) -> Result<Self> {
        Ok(Self::from_polynomial(Polynomial::var(vars, i)?))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> usize {
        self.num.vars().max(self.den.vars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        let vars = num.vars().max(den.vars());
        if num.is_zero() {
            return Self::from_polynomial(Polynomial::zero(vars));
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coefficient().expect("nonzero denominator").clone();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip().expect("nonzero leading coefficient");
            (num.scale(&inv), den.scale(&inv))
        };
        RationalFunction {
            num: num.with_vars(vars),
            den: den.with_vars(vars),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_polynomial(self.num.add(&other.num));
        }
        // p + a/d = (pd + a)/d is already reduced when a/d is.
        if self.den.is_one() || other.den.is_one() {
            let (poly, frac) = if self.den.is_one() {
                (self, other)
            } else {
                (other, self)
            };
            let vars = self.vars().max(other.vars());
            let num = poly.num.mul(&frac.den).add(&frac.num);
            if num.is_zero() {
                return Self::from_polynomial(Polynomial::zero(vars));
            }
            return RationalFunction {
                num: num.with_vars(vars),
                den: frac.den.clone().with_vars(vars),
            };
        }
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        Self::normalized(num, a.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let vars = self.vars().max(other.vars());
        if self.is_zero() || other.is_zero() {
            return Self::from_polynomial(Polynomial::zero(vars));
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_polynomial(self.num.mul(&other.num));
        }
        // Cross-cancel so the product is already in lowest terms.
        if self.den.is_one() || other.den.is_one() {
            let (poly, frac) = if self.den.is_one() {
                (self, other)
            } else {
                (other, self)
            };
            let g = gcd(&poly.num, &frac.den);
            let p = poly.num.div_exact(&g).expect("gcd divides");
            let d = frac.den.div_exact(&g).expect("gcd divides");
            let lc = d.leading_coefficient().expect("nonzero").clone();
            let inv = lc.recip().expect("nonzero");
            return RationalFunction {
                num: p.mul(&frac.num).scale(&inv).with_vars(vars),
                den: d.scale(&inv).with_vars(vars),
            };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.leading_coefficient().expect("nonzero").clone();
        let inv = lc.recip().expect("nonzero");
        RationalFunction {
            num: num.scale(&inv).with_vars(vars),
            den: den.scale(&inv).with_vars(vars),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::from_polynomial(Polynomial::zero(self.vars()));
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Exact partial derivative by the quotient rule.
    pub fn partial_derivative(&self, index: usize) -> Result<Self> {
        let vars = self.vars();
        if index >= vars {
            return Err(Error::BadIndex { index, vars });
        }
        let dn = self.num.derivative_unchecked(index);
        if self.den.is_one() {
            return Ok(Self::from_polynomial(dn.with_vars(vars)));
        }
        let dd = self.den.derivative_unchecked(index);
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        Ok(Self::normalized(num, self.den.mul(&self.den)))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        self.num.evaluate(point)?.checked_div(&d)
    }

    /// Square root when both parts are perfect squares of constants.
    pub fn exact_sqrt(&self) -> Option<Self> {
        self.constant_value().and_then(|c| c.exact_sqrt()).map(Self::constant)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            if p.len() > 1 || p.leading_coefficient().is_some_and(|c| !c.is_integer()) {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        match self.den.constant_value() {
            Some(c) => write!(f, "{}/{}", wrap(&self.num), c),
            None => write!(f, "{}/{}", wrap(&self.num), wrap(&self.den)),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, i).unwrap()
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::constant(4, Rational::from_int(n))
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        let f = RationalFunction::new(x(1).pow(2).sub(&c(1)), x(1).sub(&c(1))).unwrap();
        assert_eq!(f, RationalFunction::from_polynomial(x(1).add(&c(1))));
    }

    #[test]
    fn denominator_made_monic() {
        let f = RationalFunction::new(x(0), c(1).sub(&x(1)).scale(&q(2, 1))).unwrap();
        assert!(f.denominator().leading_coefficient().unwrap().is_one());
        assert_eq!(f.numerator(), &x(0).scale(&q(-1, 2)));
    }

    #[test]
    fn quotient_rule() {
        let f = RationalFunction::new(x(1).scale(&q(2, 1)), c(1).sub(&x(1).pow(2))).unwrap();
        let expected =
            RationalFunction::new(c(2).add(&x(1).pow(2).scale(&q(2, 1))), c(1).sub(&x(1).pow(2)).pow(2)).unwrap();
        assert_eq!(f.partial_derivative(1).unwrap(), expected);
    }

    #[test]
    fn evaluation_and_pole() {
        let f = RationalFunction::new(x(1).scale(&q(2, 1)), c(1).sub(&x(1).pow(2))).unwrap();
        let at = |t: Rational| vec![q(0, 1), t, q(0, 1), q(0, 1)];
        assert_eq!(f.evaluate(&at(q(1, 2))).unwrap(), q(4, 3));
        let g = RationalFunction::new(c(1), x(1).sub(&c(1))).unwrap();
        assert_eq!(g.evaluate(&at(q(1, 1))), Err(Error::EvaluationPole));
    }

    #[test]
    fn division_by_zero() {
        let zero = RationalFunction::from_polynomial(Polynomial::zero(4));
        assert_eq!(
            RationalFunction::constant(q(1, 1)).checked_div(&zero),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display() {
        let f = RationalFunction::new(x(1).scale(&q(2, 1)), c(1).sub(&x(1).pow(2))).unwrap();
        assert_eq!(f.to_string(), "-2*x1/(x1^2 + -1)");
    }
}
