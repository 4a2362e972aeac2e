use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::blade::{blade_norm, blade_product, Blade};
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};

/// Element of Cl(p,q): a sparse map from basis blades to nonzero
/// coefficients.
#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    sig: Signature,
    terms: BTreeMap<Blade, S>,
}

/// Multivector with rational coefficients.
pub type Mv = Multivector<Rational>;

impl<S: Scalar> Multivector<S> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, s: S) -> Self {
        Self::from_blade(sig, Blade::SCALAR, s)
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, S::one())
    }

    /// `s * blade`. Panics if the blade uses an index outside the signature.
    pub fn from_blade(sig: Signature, blade: Blade, s: S) -> Self {
        assert!(blade.mask() & !sig.full_mask() == 0, "blade {blade} outside {sig:?}");
        let mut m = Self::zero(sig);
        if !s.is_zero() {
            m.terms.insert(blade, s);
        }
        m
    }

    /// Unit blade e^{indices} with ascending indices.
    pub fn blade(sig: Signature, indices: &[usize]) -> Self {
        Self::from_blade(sig, Blade::from_indices(indices), S::one())
    }

    /// Basis 1-form e^i.
    pub fn basis(sig: Signature, i: usize) -> Self {
        Self::from_blade(sig, Blade::basis(i), S::one())
    }

    /// Grade-1 element with the given components on e^0, e^1, ...
    pub fn vector(sig: Signature, components: &[S]) -> Self {
        let mut m = Self::zero(sig);
        for (i, c) in components.iter().enumerate() {
            m.add_term(Blade::basis(i), c.clone());
        }
        m
    }

    /// Unit pseudoscalar with coefficient +1 on e^{01...}.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::from_blade(sig, Blade::from_mask(sig.full_mask()), S::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, S)>>(sig: Signature, terms: I) -> Self {
        let mut m = Self::zero(sig);
        for (b, c) in terms {
            assert!(b.mask() & !sig.full_mask() == 0, "blade {b} outside {sig:?}");
            m.add_term(b, c);
        }
        m
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
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

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::SCALAR)
    }

    /// The scalar value when the element has no non-scalar terms.
    pub fn as_scalar(&self) -> Option<S> {
        if self.terms.keys().all(|b| *b == Blade::SCALAR) {
            Some(self.scalar_part())
        } else {
            None
        }
    }

    fn add_term(&mut self, blade: Blade, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&blade);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    /// Apply `f` to every coefficient, dropping zeros.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(*b, v);
            }
        }
        out
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Multivector<T>> {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                out.terms.insert(*b, v);
            }
        }
        Ok(out)
    }

    fn map_signs(&self, sign: impl Fn(usize) -> bool) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if sign(b.grade()) { c.neg() } else { c.clone() }))
                .collect(),
        }
    }

    // Linear structure

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.sig.check_same(&other.sig)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.sig.check_same(&other.sig)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.neg());
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        self.map_signs(|_| true)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|c| c.mul(s))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|c| c.scale_rational(r))
    }

    pub fn div_scalar(&self, s: &S) -> Result<Self> {
        self.try_map(|c| c.checked_div(s))
    }

    // Products

    fn product_with(&self, other: &Self, keep: impl Fn(Blade, Blade) -> bool) -> Result<Self> {
        self.sig.check_same(&other.sig)?;
        let mut out = Self::zero(self.sig);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                if !keep(*ba, *bb) {
                    continue;
                }
                let (sign, blade) = blade_product(self.sig, *ba, *bb);
                let c = ca.mul(cb);
                out.add_term(blade, if sign < 0 { c.neg() } else { c });
            }
        }
        Ok(out)
    }

    pub fn try_gp(&self, other: &Self) -> Result<Self> {
        self.product_with(other, |_, _| true)
    }

    /// Geometric product. Panics on signature mismatch.
    pub fn gp(&self, other: &Self) -> Self {
        self.try_gp(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Outer product: grade r + s part of each pair of homogeneous terms.
    pub fn try_wedge(&self, other: &Self) -> Result<Self> {
        self.product_with(other, |a, b| a.mask() & b.mask() == 0)
    }

    pub fn wedge(&self, other: &Self) -> Self {
        self.try_wedge(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Left contraction: grade s - r part, zero when r > s.
    pub fn try_lc(&self, other: &Self) -> Result<Self> {
        self.product_with(other, |a, b| a.is_subset_of(b))
    }

    pub fn lc(&self, other: &Self) -> Self {
        self.try_lc(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Right contraction: grade r - s part, zero when s > r.
    pub fn rc(&self, other: &Self) -> Self {
        self.product_with(other, |a, b| b.is_subset_of(a))
            .unwrap_or_else(|e| panic!("{e}"))
    }

    /// Commutator ab - ba.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.gp(other) - &other.gp(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one(self.sig);
        for _ in 0..exp {
            out = out.gp(self);
        }
        out
    }

    // Grades

    pub fn try_grade(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::BadGrade {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.grade(k))
    }

    /// ⟨self⟩_k; empty when k exceeds the dimension.
    pub fn grade(&self, k: usize) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() % 2 == 0)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Grades with a nonzero component, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(Blade::grade).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// The grade when the element is homogeneous (zero counts as grade 0).
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [] => Some(0),
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.grade() % 2 == 0)
    }

    // Involutions

    /// ψ~: sign (-1)^[k/2] on grade k.
    pub fn reverse(&self) -> Self {
        self.map_signs(|k| (k / 2) % 2 == 1)
    }

    /// ψ^: sign (-1)^k on grade k.
    pub fn grade_involution(&self) -> Self {
        self.map_signs(|k| k % 2 == 1)
    }

    /// ψ‾ = (ψ^)~.
    pub fn conjugate(&self) -> Self {
        self.map_signs(|k| ((k / 2) + k) % 2 == 1)
    }

    /// Extended metric g(ψ, φ): the determinant form on simple k-vectors,
    /// zero across different grades. On basis blades it reduces to the
    /// product of the metric diagonal over the shared index set.
    pub fn try_metric(&self, other: &Self) -> Result<S> {
        self.sig.check_same(&other.sig)?;
        let mut acc = S::zero();
        for (b, c) in &self.terms {
            if let Some(d) = other.terms.get(b) {
                let t = c.mul(d);
                acc = if blade_norm(self.sig, *b) < 0 {
                    acc.sub(&t)
                } else {
                    acc.add(&t)
                };
            }
        }
        Ok(acc)
    }

    pub fn metric(&self, other: &Self) -> S {
        self.try_metric(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Components as a dense vector indexed by blade mask.
    pub fn to_dense(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.sig.blade_count()];
        for (b, c) in &self.terms {
            v[b.mask() as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(sig: Signature, v: &[S]) -> Self {
        Self::from_terms(
            sig,
            v.iter()
                .enumerate()
                .map(|(m, c)| (Blade::from_mask(m as u32), c.clone())),
        )
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.gp(rhs)
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        self.negate()
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    /// Canonical text: terms by ascending grade joined with ` + `, e.g.
    /// `1 + -e0 + 3/2 * e01`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *b == Blade::SCALAR {
                if c.is_compound() && self.terms.len() > 1 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            } else if c.is_one() {
                write!(f, "{b}")?;
            } else if c.neg().is_one() {
                write!(f, "-{b}")?;
            } else if c.is_compound() {
                write!(f, "({c}) * {b}")?;
            } else {
                write!(f, "{c} * {b}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
