//! Z2-gradings of Cl(p,q) by inner automorphisms ψ ↦ φ ψ φ⁻¹ (optionally
//! with the grade involution inside), the induced parallel / orthogonal
//! projectors, the split product laws, the metric split and adapted frames.

mod fixtures;
mod tables;

pub use fixtures::{FixtureRow, TableKind};
pub use tables::{generate_tables, Table, TableRow};

use crate::algebra::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// What kind of element generates the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradingKind {
    /// A non-null 1-form n.
    VectorN,
    /// A homogeneous k-form.
    KForm(usize),
    /// Any invertible multivector.
    General,
    /// The grade involution itself (splitter 1).
    GradedInvolution,
}

/// Whether the grade involution is applied before conjugating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMode {
    /// α(ψ) = φ ψ̂ φ⁻¹
    HatSandwich,
    /// α(ψ) = φ ψ φ⁻¹
    PlainSandwich,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Grading<S: Scalar> {
    splitter: Multivector<S>,
    inverse: Multivector<S>,
    kind: GradingKind,
    mode: SignMode,
    involutive: bool,
}

/// ψ = parallel + orthogonal with α(parallel) = parallel and
/// α(orthogonal) = -orthogonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitMultivector<S: Scalar> {
    pub parallel: Multivector<S>,
    pub orthogonal: Multivector<S>,
}

impl<S: Scalar> Grading<S> {
    /// Grading by a non-null 1-form, α(ψ) = n ψ̂ n⁻¹. The splitter is
    /// rescaled to n² = ±1 when |n²| has an exact square root; otherwise it
    /// is kept as given, which leaves α unchanged.
    pub fn vector(n: &Multivector<S>) -> Result<Self> {
        if n.homogeneous_grade() != Some(1) || n.is_zero() {
            return Err(Error::NotUnitNorm(format!("splitter {n} is not a 1-form")));
        }
        let sq = n.gp(n).as_scalar().ok_or(Error::NotInvertible)?;
        if sq.is_zero() {
            return Err(Error::NotInvertible);
        }
        let root = sq.exact_sqrt().or_else(|| sq.neg().exact_sqrt());
        let n = match root {
            Some(r) if !r.is_one() => n.div_scalar(&r)?,
            _ => n.clone(),
        };
        Self::build(n, GradingKind::VectorN, SignMode::HatSandwich)
    }

    /// Grading by a homogeneous k-form, α(ψ) = φ ψ φ⁻¹.
    pub fn k_form(phi: &Multivector<S>) -> Result<Self> {
        let k = phi.homogeneous_grade().ok_or(Error::NotHomogeneous)?;
        Self::build(phi.clone(), GradingKind::KForm(k), SignMode::PlainSandwich)
    }

    pub fn general(phi: &Multivector<S>, mode: SignMode) -> Result<Self> {
        Self::build(phi.clone(), GradingKind::General, mode)
    }

    pub fn graded_involution(sig: crate::algebra::Signature) -> Self {
        Self::build(
            Multivector::one(sig),
            GradingKind::GradedInvolution,
            SignMode::HatSandwich,
        )
        .expect("1 is invertible")
    }

    fn build(splitter: Multivector<S>, kind: GradingKind, mode: SignMode) -> Result<Self> {
        let inverse = splitter.inverse()?;
        let mut g = Grading {
            splitter,
            inverse,
            kind,
            mode,
            involutive: true,
        };
        g.involutive = g.check_involutive();
        Ok(g)
    }

    /// α∘α = id on every basis blade.
    fn check_involutive(&self) -> bool {
        let sig = self.splitter.signature();
        Blade::all(sig).into_iter().all(|b| {
            let e = Multivector::from_blade(sig, b, S::one());
            self.alpha(&self.alpha(&e)) == e
        })
    }

    pub fn splitter(&self) -> &Multivector<S> {
        &self.splitter
    }

    pub fn splitter_inverse(&self) -> &Multivector<S> {
        &self.inverse
    }

    pub fn kind(&self) -> GradingKind {
        self.kind
    }

    pub fn mode(&self) -> SignMode {
        self.mode
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    pub fn alpha(&self, psi: &Multivector<S>) -> Multivector<S> {
        let inner = match self.mode {
            SignMode::HatSandwich => psi.grade_involution(),
            SignMode::PlainSandwich => psi.clone(),
        };
        self.splitter.sandwich(&inner, &self.inverse)
    }

    pub fn project(&self, psi: &Multivector<S>) -> Result<SplitMultivector<S>> {
        if !self.involutive {
            return Err(Error::NotInvolutive);
        }
        let a = self.alpha(psi);
        let half = S::from_rational(crate::scalars::Rational::new(1, 2)?);
        Ok(SplitMultivector {
            parallel: (psi + &a).scale(&half),
            orthogonal: (psi - &a).scale(&half),
        })
    }

    pub fn parallel(&self, psi: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.project(psi)?.parallel)
    }

    pub fn orthogonal(&self, psi: &Multivector<S>) -> Result<Multivector<S>> {
        Ok(self.project(psi)?.orthogonal)
    }
}

fn unit_vector_inverse<S: Scalar>(n: &Multivector<S>) -> Result<Multivector<S>> {
    if n.homogeneous_grade() != Some(1) || n.is_zero() {
        return Err(Error::NotUnitNorm(format!("{n} is not a 1-form")));
    }
    let sq = n.gp(n).scalar_part();
    if sq.is_one() {
        Ok(n.clone())
    } else if sq.neg().is_one() {
        Ok(n.negate())
    } else {
        Err(Error::NotUnitNorm(sq.to_string()))
    }
}

/// Projectors written with contractions, π∥(ψ) = n⁻¹⌋(n∧ψ) and
/// π⊥(ψ) = n⁻¹∧(n⌋ψ). For n² = 1 this is n⌋(n∧ψ) and n∧(n⌋ψ).
pub fn project_contraction_form<S: Scalar>(n: &Multivector<S>, psi: &Multivector<S>) -> Result<SplitMultivector<S>> {
    let n_inv = unit_vector_inverse(n)?;
    Ok(SplitMultivector {
        parallel: n_inv.try_lc(&n.try_wedge(psi)?)?,
        orthogonal: n_inv.try_wedge(&n.try_lc(psi)?)?,
    })
}

/// Residuals of the splitting laws for products; every entry is zero when
/// the laws hold.
#[derive(Clone, Debug)]
pub struct ProductLawReport<S: Scalar> {
    pub residuals: Vec<(&'static str, Multivector<S>)>,
}

impl<S: Scalar> ProductLawReport<S> {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }
}

/// Checks (φψ)∥ = φ∥ψ∥ + φ⊥ψ⊥, (φψ)⊥ = φ∥ψ⊥ + φ⊥ψ∥ and, for the 1-form
/// part v of φ, (v∧ψ)∥ = v∥∧ψ∥ and (v∧ψ)⊥ = v⊥∧ψ∥ + v∥∧ψ⊥.
pub fn split_product_laws<S: Scalar>(
    g: &Grading<S>,
    phi: &Multivector<S>,
    psi: &Multivector<S>,
) -> Result<ProductLawReport<S>> {
    let p = g.project(phi)?;
    let s = g.project(psi)?;
    let prod = g.project(&phi.try_gp(psi)?)?;
    let v = phi.grade(1);
    let vs = g.project(&v)?;
    let wedge = g.project(&v.wedge(psi))?;

    let par = &(&p.parallel * &s.parallel) + &(&p.orthogonal * &s.orthogonal);
    let perp = &(&p.parallel * &s.orthogonal) + &(&p.orthogonal * &s.parallel);
    let w_par = vs.parallel.wedge(&s.parallel);
    let w_perp = &vs.orthogonal.wedge(&s.parallel) + &vs.parallel.wedge(&s.orthogonal);
    Ok(ProductLawReport {
        residuals: vec![
            ("product_parallel", &prod.parallel - &par),
            ("product_orthogonal", &prod.orthogonal - &perp),
            ("wedge_parallel", &wedge.parallel - &w_par),
            ("wedge_orthogonal", &wedge.orthogonal - &w_perp),
        ],
    })
}

/// Split of the metric by a unit 1-form: h = g - n⊗n and g⊥ = n⊗n with
/// lowered components n_μ = g_μμ n^μ, where n^μ is the coefficient of e^μ.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricSplit<S> {
    pub h: Vec<Vec<S>>,
    pub g_perp: Vec<Vec<S>>,
    pub n_upper: Vec<S>,
    pub n_lower: Vec<S>,
}

pub fn metric_split<S: Scalar>(n: &Multivector<S>) -> Result<MetricSplit<S>> {
    let sig = n.signature();
    unit_vector_inverse(n)?;
    // n² = ±1; the projector onto n is n⊗n / n².
    let norm = S::one().checked_div(&n.gp(n).scalar_part())?;
    let d = sig.dim();
    let n_upper: Vec<S> = (0..d).map(|i| n.coefficient(Blade::basis(i))).collect();
    let n_lower: Vec<S> = (0..d)
        .map(|i| n_upper[i].scale_rational(&crate::scalars::Rational::from_int(sig.square(i) as i64)))
        .collect();
    let mut h = vec![vec![S::zero(); d]; d];
    let mut g_perp = vec![vec![S::zero(); d]; d];
    for mu in 0..d {
        for nu in 0..d {
            let nn = n_lower[mu].mul(&n_lower[nu]).mul(&norm);
            let g = if mu == nu {
                S::from_int(sig.square(mu) as i64)
            } else {
                S::zero()
            };
            h[mu][nu] = g.sub(&nn);
            g_perp[mu][nu] = nn;
        }
    }
    Ok(MetricSplit {
        h,
        g_perp,
        n_upper,
        n_lower,
    })
}

impl<S: Scalar> MetricSplit<S> {
    /// h·n♯, which must vanish.
    pub fn h_on_n(&self) -> Vec<S> {
        self.h
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.n_upper)
                    .fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Whether h + g⊥ reproduces the diagonal metric of `sig`.
    pub fn reconstructs(&self, sig: crate::algebra::Signature) -> bool {
        (0..sig.dim()).all(|mu| {
            (0..sig.dim()).all(|nu| {
                let g = if mu == nu {
                    S::from_int(sig.square(mu) as i64)
                } else {
                    S::zero()
                };
                self.h[mu][nu].add(&self.g_perp[mu][nu]) == g
            })
        })
    }
}

/// Even versor L with L L̃ = 1 whose sandwich maps 1-forms to 1-forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Versor<S: Scalar> {
    element: Multivector<S>,
}

impl<S: Scalar> Versor<S> {
    pub fn new(l: Multivector<S>) -> Result<Self> {
        let sig = l.signature();
        let norm = l.gp(&l.reverse());
        if norm != Multivector::one(sig) {
            return Err(Error::NotVersor(format!("L L~ = {norm}")));
        }
        let rev = l.reverse();
        for i in 0..sig.dim() {
            let image = l.sandwich(&Multivector::basis(sig, i), &rev);
            if image.homogeneous_grade() != Some(1) {
                return Err(Error::NotVersor(format!("L e{i} L~ = {image} is not a 1-form")));
            }
        }
        Ok(Versor { element: l })
    }

    pub fn identity(sig: crate::algebra::Signature) -> Self {
        Versor {
            element: Multivector::one(sig),
        }
    }

    pub fn element(&self) -> &Multivector<S> {
        &self.element
    }

    pub fn apply(&self, x: &Multivector<S>) -> Multivector<S> {
        self.element.sandwich(x, &self.element.reverse())
    }

    /// Frame {L e^μ L̃}; checks that n = L e^0 L̃ is a unit 1-form orthogonal
    /// to the remaining frame vectors.
    pub fn adapted_frame(&self) -> Result<Vec<Multivector<S>>> {
        let sig = self.element.signature();
        let frame: Vec<Multivector<S>> = (0..sig.dim())
            .map(|i| self.apply(&Multivector::basis(sig, i)))
            .collect();
        let n = &frame[0];
        let sq = n.gp(n).as_scalar();
        if sq != Some(S::from_int(sig.square(0) as i64)) {
            return Err(Error::NotAdapted(format!("n^2 = {}", n.gp(n))));
        }
        for (i, f) in frame.iter().enumerate().skip(1) {
            if !n.metric(f).is_zero() {
                return Err(Error::NotAdapted(format!("g(n, f{i}) != 0")));
            }
        }
        Ok(frame)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Mv, Signature};
    use crate::scalars::Rational;

    fn sta() -> Signature {
        Signature::new(1, 3).unwrap()
    }

    fn e(ix: &[usize]) -> Mv {
        Mv::blade(sta(), ix)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn e0_grading() -> Grading<Rational> {
        Grading::vector(&e(&[0])).unwrap()
    }

    #[test]
    fn alpha_on_basis_vectors() {
        let g = e0_grading();
        assert_eq!(g.alpha(&e(&[1])), e(&[1]));
        assert_eq!(g.alpha(&e(&[0])), -&e(&[0]));
        let g2 = Grading::k_form(&e(&[0, 2])).unwrap();
        assert_eq!(g2.alpha(&e(&[0])), -&e(&[0]));
    }

    #[test]
    fn project_examples() {
        let g = e0_grading();
        let s = g.project(&(&e(&[0]) + &e(&[1]))).unwrap();
        assert_eq!(s.parallel, e(&[1]));
        assert_eq!(s.orthogonal, e(&[0]));
        let g3 = Grading::k_form(&e(&[1, 2, 3])).unwrap();
        let s = g3.project(&e(&[0, 1])).unwrap();
        assert!(s.parallel.is_zero());
        assert_eq!(s.orthogonal, e(&[0, 1]));
    }

    #[test]
    fn contraction_form_examples() {
        let s = project_contraction_form(&e(&[0]), &e(&[0, 1])).unwrap();
        assert_eq!(s.orthogonal, e(&[0, 1]));
        assert!(s.parallel.is_zero());
        let s = project_contraction_form(&e(&[0]), &Mv::one(sta())).unwrap();
        assert_eq!(s.parallel, Mv::one(sta()));
        let s = project_contraction_form(&e(&[0]), &e(&[1, 2, 3])).unwrap();
        assert_eq!(s.parallel, e(&[1, 2, 3]));
        let two_e0 = e(&[0]).scale(&q(2, 1));
        assert!(matches!(
            project_contraction_form(&two_e0, &e(&[1])),
            Err(Error::NotUnitNorm(_))
        ));
    }

    #[test]
    fn vector_splitter_is_normalized() {
        let g = Grading::vector(&e(&[0]).scale(&q(3, 1))).unwrap();
        assert_eq!(g.splitter(), &e(&[0]));
    }

    #[test]
    fn non_involutive_general_splitter() {
        // 1 + e12 turns the e1e2 plane by a quarter turn, so α² is a half turn.
        let phi = &Mv::one(sta()) + &e(&[1, 2]);
        let g = Grading::general(&phi, SignMode::PlainSandwich).unwrap();
        assert!(!g.is_involutive());
        assert_eq!(g.project(&e(&[1])), Err(Error::NotInvolutive));
    }

    #[test]
    fn product_law_examples() {
        let g = e0_grading();
        let prod = g.project(&(&e(&[1]) * &e(&[1]))).unwrap();
        assert_eq!(prod.parallel, Mv::scalar(sta(), q(-1, 1)));
        let prod = g.project(&(&e(&[0]) * &e(&[0]))).unwrap();
        assert_eq!(prod.parallel, Mv::one(sta()));
        assert!(split_product_laws(&g, &e(&[0, 1]), &e(&[2])).unwrap().holds());
    }

    #[test]
    fn metric_split_examples() {
        let m = metric_split(&e(&[0])).unwrap();
        assert_eq!(m.h[0][0], q(0, 1));
        assert_eq!(m.h[1][1], q(-1, 1));
        assert!(m.h_on_n().iter().all(|x| x.is_zero()));
        let n = Mv::vector(sta(), &[q(5, 4), q(3, 4)]);
        let m = metric_split(&n).unwrap();
        assert_eq!(m.h[0][0], q(-9, 16));
        assert!(m.h_on_n().iter().all(|x| x.is_zero()));
        assert!(m.reconstructs(sta()));
    }

    #[test]
    fn boost_frame() {
        let l = (&Mv::scalar(sta(), q(5, 1)) + &e(&[0, 1]).scale(&q(3, 1))).scale(&q(1, 4));
        let v = Versor::new(l).unwrap();
        let frame = v.adapted_frame().unwrap();
        assert_eq!(frame[0], Mv::vector(sta(), &[q(17, 8), q(-15, 8)]));
        assert!(frame[0].metric(&frame[2]).is_zero());
        assert!(Versor::new(e(&[0, 1]).scale(&q(2, 1))).is_err());
    }
}
