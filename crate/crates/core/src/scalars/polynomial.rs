use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use crate::error::{Error, Result};

/// Largest number of coordinates a polynomial may use (matches the
/// dimension cap of the algebra).
pub const MAX_VARS: usize = 8;

/// Default coordinate count: spacetime x0..x3.
pub const DEFAULT_VARS: usize = 4;

/// Exponent vector ordered by graded lexicographic order: total degree
/// first, ties broken lexicographically with x0 > x1 > ...
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0.iter()) {
            *a -= *b;
        }
        Monomial(e)
    }

    fn with_exponent(&self, i: usize, value: u16) -> Monomial {
        let mut e = self.0;
        e[i] = value;
        Monomial(e)
    }

    pub(crate) fn common(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(e)
    }

    fn var_mask(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MonomialText(self))
    }
}

struct MonomialText<'a>(&'a Monomial);

impl fmt::Display for MonomialText<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0 .0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// `vars` is the ambient coordinate count; it bounds derivative indices and
/// evaluation points but does not take part in equality.
#[derive(Clone)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial {
            vars: vars.min(MAX_VARS),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// The coordinate polynomial `x_i`.
    pub fn var(vars: usize, i: usize) -> Result<Self> {
        if i >= vars || i >= MAX_VARS {
            return Err(Error::BadIndex { index: i, vars });
        }
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::var(i), Rational::one());
        Ok(p)
    }

    pub fn from_terms<I>(vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn with_vars(mut self, vars: usize) -> Self {
        self.vars = vars.min(MAX_VARS);
        self
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Bitmask of the variables that actually occur.
    pub fn var_mask(&self) -> u32 {
        self.terms.keys().fold(0, |m, t| m | t.var_mask())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        out.vars = self.vars.max(other.vars);
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.vars = self.vars.max(other.vars);
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let vars = self.vars.max(other.vars);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(vars);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c).with_vars(vars);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c).with_vars(vars);
        }
        let mut out = Polynomial::zero(vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::one(self.vars);
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let vars = self.vars.max(divisor.vars);
        let (lm, lc) = divisor.leading_term()?;
        if let Some(c) = divisor.constant_value() {
            let inv = c.recip().ok()?;
            return Some(self.scale(&inv).with_vars(vars));
        }
        let (lm, lc_inv) = (*lm, lc.recip().ok()?);
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero(vars);
        while let Some((rm, rc)) = remainder.leading_term() {
            if !lm.divides(rm) {
                return None;
            }
            let qm = lm.quotient_of(rm);
            let qc = rc * &lc_inv;
            remainder = remainder.sub(&divisor.mul_term(&qm, &qc));
            quotient.add_term(qm, qc);
        }
        Some(quotient)
    }

    /// Scale so the leading coefficient (graded lex) is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Exact partial derivative with respect to `x_index`.
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.vars {
            return Err(Error::BadIndex { index, vars: self.vars });
        }
        Ok(self.derivative_unchecked(index))
    }

    pub(crate) fn derivative_unchecked(&self, index: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        if index >= MAX_VARS {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e == 0 {
                continue;
            }
            out.add_term(m.with_exponent(index, e - 1), c * &Rational::from_int(e as i64));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point.get(i).ok_or(Error::BadIndex {
                    index: i,
                    vars: point.len(),
                })?;
                v = &v * &x.pow(e as u32);
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    // Views as a univariate polynomial in `x_var` with coefficients free of it.

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    pub fn coefficient_in(&self, var: usize, power: u16) -> Polynomial {
        Polynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == power)
                .map(|(m, c)| (m.with_exponent(var, 0), c.clone()))
                .collect(),
        }
    }

    pub fn coefficients_in(&self, var: usize) -> BTreeMap<u16, Polynomial> {
        let mut out: BTreeMap<u16, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exponent(var))
                .or_insert_with(|| Polynomial::zero(self.vars))
                .terms
                .insert(m.with_exponent(var, 0), c.clone());
        }
        out
    }

    pub(crate) fn shift_var(&self, var: usize, power: u16) -> Polynomial {
        let m = Monomial::one().with_exponent(var, power);
        self.mul_term(&m, &Rational::one())
    }

    /// Largest monomial dividing every term.
    pub(crate) fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            Some(first) => it.fold(*first, |acc, m| acc.common(m)),
            None => Monomial::one(),
        }
    }

    pub(crate) fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in decreasing graded-lex order joined by
    /// ` + `, e.g. `2*x1*x2 + -1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", MonomialText(m))?;
            } else if (-c).is_one() {
                write!(f, "-{}", MonomialText(m))?;
            } else {
                write!(f, "{c}*{}", MonomialText(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
