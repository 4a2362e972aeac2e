//! Multivector fields on flat R^{p,q} with rational-function coefficients in
//! the coordinates x0..x(d-1), and the operators d, δ, ∂ together with their
//! splittings along a unit 1-form field n.
//!
//! The coframe is γ^μ = g^{μμ} e^μ, so d = Σ γ^μ∧∂_μ, δ = -Σ γ^μ⌋∂_μ and
//! ∂ = Σ γ^μ ∂_μ = d - δ. Components of n are read as n^μ = n⌋γ^μ, which is
//! the coefficient of e^μ.

mod dual;

pub use dual::{dual_decomposition_operators, CompactFit, DualReport};

use crate::algebra::{Multivector, Mv, Signature};
use crate::error::{Error, Result};
use crate::grading::{Grading, SplitMultivector};
use crate::hodge::{hodge_inverse, hodge_star, parallel_hodge, parallel_hodge_inverse, Orientation};
use crate::identity::IdentityRecord;
use crate::scalars::{Polynomial, Rational, RationalFunction, Scalar, DEFAULT_VARS};

pub type Field = Multivector<RationalFunction>;

fn half() -> RationalFunction {
    RationalFunction::constant(Rational::new(1, 2).expect("nonzero denominator"))
}

/// Constant field with the given rational coefficients.
pub fn lift(m: &Mv) -> Field {
    m.map(|c| RationalFunction::constant(c.clone()))
}

/// ∂_μ applied coefficient-wise.
pub fn field_partial(psi: &Field, mu: usize) -> Result<Field> {
    let dim = psi.signature().dim();
    if mu >= dim {
        return Err(Error::BadIndex { index: mu, vars: dim });
    }
    psi.try_map(|c| {
        if mu >= c.vars() {
            Ok(RationalFunction::constant(Rational::zero()))
        } else {
            c.partial_derivative(mu)
        }
    })
}

fn partial(psi: &Field, mu: usize) -> Field {
    field_partial(psi, mu).expect("index below dimension")
}

/// γ^μ = g^{μμ} e^μ.
pub fn coframe(sig: Signature, mu: usize) -> Field {
    let e = Field::basis(sig, mu);
    if sig.square(mu) < 0 {
        e.negate()
    } else {
        e
    }
}

fn sum_over<F: Fn(usize) -> Field>(sig: Signature, f: F) -> Field {
    (0..sig.dim()).fold(Field::zero(sig), |acc, mu| &acc + &f(mu))
}

/// dψ = Σ γ^μ∧∂_μψ.
pub fn differential(psi: &Field) -> Field {
    let sig = psi.signature();
    sum_over(sig, |mu| coframe(sig, mu).wedge(&partial(psi, mu)))
}

/// δψ = -Σ γ^μ⌋∂_μψ.
pub fn codifferential(psi: &Field) -> Field {
    let sig = psi.signature();
    sum_over(sig, |mu| coframe(sig, mu).lc(&partial(psi, mu))).negate()
}

/// ∂ψ = Σ γ^μ ∂_μψ.
pub fn dirac(psi: &Field) -> Field {
    let sig = psi.signature();
    sum_over(sig, |mu| coframe(sig, mu).gp(&partial(psi, mu)))
}

/// n∧dn = 0, the condition for n to be hypersurface orthogonal.
pub fn frobenius_check(n: &Field) -> bool {
    n.wedge(&differential(n)).is_zero()
}

fn per_grade(psi: &Field, mut f: impl FnMut(usize, &Field)) {
    for k in psi.grades() {
        f(k, &psi.grade(k));
    }
}

/// Relations among d, δ and ∂ evaluated on each grade of ψ: d² = 0, δ² = 0,
/// ∂ = d - δ, ∂² = -(dδ + δd) and δψ = ⋆⁻¹d⋆ψ̂.
pub fn operator_identities(psi: &Field) -> Vec<IdentityRecord> {
    let sig = psi.signature();
    let zero = Field::zero(sig);
    let o = Orientation::new(&Field::basis(sig, 0)).expect("basis vectors are unit");
    let mut out = Vec::new();
    per_grade(psi, |k, p| {
        let d = differential(p);
        let delta = codifferential(p);
        out.push(IdentityRecord::new("d_squared", "ddψ = 0", k, &differential(&d), &zero));
        out.push(IdentityRecord::new(
            "delta_squared",
            "δδψ = 0",
            k,
            &codifferential(&delta),
            &zero,
        ));
        out.push(IdentityRecord::new(
            "dirac_routes",
            "∂ψ = dψ - δψ",
            k,
            &dirac(p),
            &(&d - &delta),
        ));
        let lap = &codifferential(&d) + &differential(&delta);
        out.push(IdentityRecord::new(
            "dirac_squared",
            "∂∂ψ = -(dδ + δd)ψ",
            k,
            &dirac(&dirac(p)),
            &lap.negate(),
        ));
        let star = hodge_inverse(&differential(&hodge_star(&p.grade_involution(), &o)), &o);
        out.push(IdentityRecord::new(
            "codifferential_hodge",
            "δψ = ⋆⁻¹d⋆ψ̂",
            k,
            &delta,
            &star,
        ));
    });
    out
}

/// A grade-1 field n with n² = 1 as an identity of rational functions.
#[derive(Clone, Debug)]
pub struct SplittingField {
    n: Field,
    components: Vec<RationalFunction>,
    grading: Grading<RationalFunction>,
    orientation: Orientation<RationalFunction>,
    omega: Vec<Field>,
}

impl SplittingField {
    pub fn new(n: Field) -> Result<Self> {
        if n.homogeneous_grade() != Some(1) || !n.gp(&n).as_scalar().is_some_and(|s| s.is_one()) {
            return Err(Error::NotUnit);
        }
        let sig = n.signature();
        let components = (0..sig.dim())
            .map(|mu| n.coefficient(crate::algebra::Blade::basis(mu)))
            .collect();
        let omega = (0..sig.dim()).map(|mu| n.gp(&partial(&n, mu))).collect();
        Ok(SplittingField {
            grading: Grading::vector(&n)?,
            orientation: Orientation::new(&n)?,
            components,
            omega,
            n,
        })
    }

    pub fn constant(n: &Mv) -> Result<Self> {
        Self::new(lift(n))
    }

    /// n = ((1 + t²)e0 + 2t e_a)/(1 - t²) with t = x_a. Needs e0² = 1 and
    /// e_a² = -1.
    pub fn boost(sig: Signature, axis: usize) -> Result<Self> {
        if axis == 0 || axis >= sig.dim() || sig.square(0) != 1 || sig.square(axis) != -1 {
            return Err(Error::NotUnit);
        }
        let vars = DEFAULT_VARS.max(sig.dim());
        let t = Polynomial::var(vars, axis)?;
        let one = Polynomial::one(vars);
        let t2 = t.mul(&t);
        let den = one.sub(&t2);
        let c0 = RationalFunction::new(one.add(&t2), den.clone())?;
        let ca = RationalFunction::new(t.scale(&Rational::from_int(2)), den)?;
        let mut comps = vec![RationalFunction::constant(Rational::zero()); sig.dim()];
        comps[0] = c0;
        comps[axis] = ca;
        Self::new(Field::vector(sig, &comps))
    }

    pub fn n(&self) -> &Field {
        &self.n
    }

    pub fn signature(&self) -> Signature {
        self.n.signature()
    }

    /// n^μ.
    pub fn component(&self, mu: usize) -> &RationalFunction {
        &self.components[mu]
    }

    pub fn grading(&self) -> &Grading<RationalFunction> {
        &self.grading
    }

    pub fn orientation(&self) -> &Orientation<RationalFunction> {
        &self.orientation
    }

    pub fn is_constant(&self) -> bool {
        self.omega.iter().all(|w| w.is_zero())
    }

    /// Contraction form π∥ψ = n⌋(n∧ψ), π⊥ψ = n∧(n⌋ψ); equal to the
    /// sandwich form for n² = 1 and much cheaper on rational functions.
    pub fn project(&self, psi: &Field) -> SplitMultivector<RationalFunction> {
        let parallel = self.n.lc(&self.n.wedge(psi));
        SplitMultivector {
            orthogonal: psi - &parallel,
            parallel,
        }
    }

    pub fn parallel(&self, psi: &Field) -> Field {
        self.project(psi).parallel
    }

    pub fn orthogonal(&self, psi: &Field) -> Field {
        self.project(psi).orthogonal
    }

    /// γ∥^μ = γ^μ - n n^μ.
    pub fn parallel_coframe(&self, mu: usize) -> Field {
        &coframe(self.signature(), mu) - &self.n.scale(&self.components[mu])
    }

    /// Ω_μ = n ∂_μn.
    pub fn omega(&self, mu: usize) -> &Field {
        &self.omega[mu]
    }

    /// Ω(n) = n^μ Ω_μ.
    pub fn omega_along(&self) -> Field {
        sum_over(self.signature(), |mu| self.omega[mu].scale(&self.components[mu]))
    }

    /// D_μψ = ∂_μψ + ½[Ω_μ, ψ].
    pub fn covariant(&self, mu: usize, psi: &Field) -> Field {
        &partial(psi, mu) + &self.omega[mu].commutator(psi).scale(&half())
    }

    /// D∥_μψ∥ for a parallel field.
    pub fn covariant_parallel(&self, mu: usize, psi: &Field) -> Result<Field> {
        if mu >= self.signature().dim() {
            return Err(Error::BadIndex {
                index: mu,
                vars: self.signature().dim(),
            });
        }
        if !self.orthogonal(psi).is_zero() {
            return Err(Error::NotParallel);
        }
        Ok(self.covariant(mu, psi))
    }

    /// £ₙψ = n⌋dψ + d(n⌋ψ).
    pub fn lie_derivative(&self, psi: &Field) -> Field {
        &self.n.lc(&differential(psi)) + &differential(&self.n.lc(psi))
    }

    /// £ₙn, the acceleration of n.
    pub fn acceleration(&self) -> Field {
        self.lie_derivative(&self.n)
    }

    /// d∥ψ = π∥(dψ).
    pub fn d_parallel(&self, psi: &Field) -> Field {
        self.parallel(&differential(psi))
    }
}

/// Ω_μ for every direction.
#[derive(Clone, Debug)]
pub struct ConnectionBivector {
    pub components: Vec<Field>,
}

pub fn omega(n: &SplittingField) -> ConnectionBivector {
    ConnectionBivector {
        components: n.omega.clone(),
    }
}

impl ConnectionBivector {
    pub fn is_bivector(&self) -> bool {
        self.components.iter().all(|w| w.grades().iter().all(|&k| k == 2))
    }

    /// n⌋∂_μn = 0, Ω_μ grade 2, and ∂_μn = -½[Ω_μ, n], per μ.
    pub fn check(&self, n: &SplittingField) -> Vec<IdentityRecord> {
        let sig = n.signature();
        let zero = Field::zero(sig);
        let mut out = Vec::new();
        for (mu, w) in self.components.iter().enumerate() {
            let dn = partial(n.n(), mu);
            out.push(IdentityRecord::new("n_dot_dn", "n⌋∂_μn = 0", 0, &n.n().lc(&dn), &zero).at(mu));
            out.push(IdentityRecord::new("omega_grade", "Ω_μ = ⟨Ω_μ⟩₂", 2, w, &w.grade(2)).at(mu));
            let rhs = w.commutator(n.n()).scale(&half()).negate();
            out.push(IdentityRecord::new("dn_commutator", "∂_μn = -½[Ω_μ, n]", 1, &dn, &rhs).at(mu));
        }
        out
    }
}

/// ½[Ω_μ,ψ∥] = -(∂_μψ∥)⊥, ½[Ω_μ,ψ⊥] = -(∂_μψ⊥)∥ and
/// (∂_μψ∥)∥ = ∂_μψ∥ + ½[Ω_μ,ψ∥], per μ and grade.
pub fn commutator_projection_identities(n: &SplittingField, psi: &Field) -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    per_grade(psi, |k, p| {
        let s = n.project(p);
        for mu in 0..n.signature().dim() {
            let w = n.omega(mu);
            let dpar = partial(&s.parallel, mu);
            let dperp = partial(&s.orthogonal, mu);
            let c_par = w.commutator(&s.parallel).scale(&half());
            let c_perp = w.commutator(&s.orthogonal).scale(&half());
            out.push(
                IdentityRecord::new(
                    "omega_parallel",
                    "½[Ω_μ,ψ∥] = -(∂_μψ∥)⊥",
                    k,
                    &c_par,
                    &n.orthogonal(&dpar).negate(),
                )
                .at(mu),
            );
            out.push(
                IdentityRecord::new(
                    "omega_orthogonal",
                    "½[Ω_μ,ψ⊥] = -(∂_μψ⊥)∥",
                    k,
                    &c_perp,
                    &n.parallel(&dperp).negate(),
                )
                .at(mu),
            );
            out.push(
                IdentityRecord::new(
                    "parallel_derivative",
                    "(∂_μψ∥)∥ = ∂_μψ∥ + ½[Ω_μ,ψ∥]",
                    k,
                    &n.parallel(&dpar),
                    &(&dpar + &c_par),
                )
                .at(mu),
            );
        }
    });
    out
}

/// The four components d∥ψ∥ = (dψ∥)∥, d⊥ψ∥ = (dψ∥)⊥, d∥ψ⊥ = (dψ⊥)⊥ and
/// (dψ⊥)∥, the last of which vanishes for hypersurface-orthogonal n.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitDifferential {
    pub par_par: Field,
    pub perp_par: Field,
    pub par_perp: Field,
    pub perp_perp: Field,
}

pub fn split_differential(n: &SplittingField, psi: &Field) -> SplitDifferential {
    let s = n.project(psi);
    let a = n.project(&differential(&s.parallel));
    let b = n.project(&differential(&s.orthogonal));
    SplitDifferential {
        par_par: a.parallel,
        perp_par: a.orthogonal,
        par_perp: b.orthogonal,
        perp_perp: b.parallel,
    }
}

/// Identities for the components of the split differential, per grade.
pub fn split_differential_identities(n: &SplittingField, psi: &Field) -> Vec<IdentityRecord> {
    let sig = n.signature();
    let nn = n.n();
    let accel = n.acceleration();
    let mut out = Vec::new();
    per_grade(psi, |k, p| {
        let s = n.project(p);
        let sd = split_differential(n, p);
        let n_psi = nn.lc(p);
        out.push(IdentityRecord::new(
            "d_perp_perp",
            "(dψ⊥)∥ = 0",
            k,
            &sd.perp_perp,
            &Field::zero(sig),
        ));
        out.push(IdentityRecord::new(
            "d_perp_par",
            "(dψ∥)⊥ = n∧£ₙψ∥",
            k,
            &sd.perp_par,
            &nn.wedge(&n.lie_derivative(&s.parallel)),
        ));
        let cov = sum_over(sig, |mu| n.parallel_coframe(mu).wedge(&n.covariant(mu, &s.parallel)));
        out.push(IdentityRecord::new(
            "d_par_par",
            "(dψ∥)∥ = γ∥^μ∧D∥_μψ∥",
            k,
            &sd.par_par,
            &cov,
        ));
        let rhs = &nn.wedge(&accel).wedge(&n_psi) - &nn.wedge(&n.d_parallel(&n_psi));
        out.push(IdentityRecord::new(
            "d_par_perp",
            "(dψ⊥)⊥ = n∧£ₙn∧(n⌋ψ) - n∧d∥(n⌋ψ)",
            k,
            &sd.par_perp,
            &rhs,
        ));
        let cov = sum_over(sig, |mu| n.parallel_coframe(mu).wedge(&n.covariant(mu, &n_psi)));
        let rhs = &nn.wedge(&accel).wedge(&nn.lc(&s.orthogonal)) - &nn.wedge(&cov);
        out.push(IdentityRecord::new(
            "d_par_perp_covariant",
            "(dψ⊥)⊥ = -n∧γ∥^μ∧D_μ(n⌋ψ) + n∧£ₙn∧(n⌋ψ⊥)",
            k,
            &sd.par_perp,
            &rhs,
        ));
    });
    out
}

/// £ₙ against d and d∥.
#[derive(Clone, Debug)]
pub struct LieCommutatorReport {
    pub records: Vec<IdentityRecord>,
    /// £ₙn = 0.
    pub geodesic: bool,
    /// [£ₙ, d∥]ψ = 0 for this ψ.
    pub commutes: bool,
}

/// £ₙd = d£ₙ and £ₙ(d∥ψ) = d∥(£ₙψ) - £ₙn∧(n⌋dψ).
pub fn lie_d_parallel_commutator(n: &SplittingField, psi: &Field) -> LieCommutatorReport {
    let accel = n.acceleration();
    let mut records = Vec::new();
    let mut commutes = true;
    per_grade(psi, |k, p| {
        let dp = differential(p);
        let lie = n.lie_derivative(p);
        records.push(IdentityRecord::new(
            "lie_d",
            "£ₙdψ = d£ₙψ",
            k,
            &n.lie_derivative(&dp),
            &differential(&lie),
        ));
        let lhs = n.lie_derivative(&n.d_parallel(p));
        let d_lie = n.d_parallel(&lie);
        commutes &= lhs == d_lie;
        let rhs = &d_lie - &accel.wedge(&n.n().lc(&dp));
        records.push(IdentityRecord::new(
            "lie_d_parallel",
            "£ₙ(d∥ψ) = d∥(£ₙψ) - £ₙn∧(n⌋dψ)",
            k,
            &lhs,
            &rhs,
        ));
    });
    LieCommutatorReport {
        records,
        geodesic: accel.is_zero(),
        commutes,
    }
}

/// (∂⌋ψ∥)∥ = -⋆∥⁻¹d∥⋆∥ψ̂∥ - (£ₙn)⌋ψ∥, with the intermediate form
/// (∂⌋ψ∥)∥ = γ∥^μ⌋(D∥_μψ∥) - n⌋(½[Ω(n),ψ∥]).
pub fn codifferential_parallel_identity(n: &SplittingField, psi: &Field) -> Result<Vec<IdentityRecord>> {
    if !n.orthogonal(psi).is_zero() {
        return Err(Error::NotParallel);
    }
    let sig = n.signature();
    let o = n.orientation();
    let accel = n.acceleration();
    let omega_n = n.omega_along();
    let mut out = Vec::new();
    for k in psi.grades() {
        let p = psi.grade(k);
        let lhs = n.parallel(&codifferential(&p).negate());
        let star = parallel_hodge(&p.grade_involution(), o)?;
        let back = parallel_hodge_inverse(&n.d_parallel(&star), o)?;
        let rhs = (&back + &accel.lc(&p)).negate();
        out.push(IdentityRecord::new(
            "codifferential_parallel",
            "(∂⌋ψ∥)∥ = -⋆∥⁻¹d∥⋆∥ψ̂∥ - (£ₙn)⌋ψ∥",
            k,
            &lhs,
            &rhs,
        ));
        let cov = sum_over(sig, |mu| n.parallel_coframe(mu).lc(&n.covariant(mu, &p)));
        let corr = n.n().lc(&omega_n.commutator(&p).scale(&half()));
        out.push(IdentityRecord::new(
            "codifferential_parallel_comp",
            "(∂⌋ψ∥)∥ = γ∥^μ⌋(D∥_μψ∥) - n⌋(½[Ω(n),ψ∥])",
            k,
            &lhs,
            &(&cov - &corr),
        ));
        out.push(IdentityRecord::new(
            "omega_along_lie",
            "n⌋(½[Ω(n),ψ∥]) = (£ₙn)⌋ψ∥",
            k,
            &corr,
            &accel.lc(&p),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::failures;

    fn sta() -> Signature {
        Signature::spacetime()
    }

    fn f(text: &str) -> Field {
        Field::parse(sta(), text).unwrap()
    }

    #[test]
    fn partials() {
        assert_eq!(field_partial(&f("x1*e0"), 1).unwrap(), f("e0"));
        assert!(field_partial(&f("x1^2*e23"), 0).unwrap().is_zero());
        assert!(matches!(field_partial(&f("x1"), 4), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(differential(&f("x1*e0")), f("e01"));
        assert_eq!(differential(&f("x0")), f("e0"));
        assert_eq!(codifferential(&f("x0*e0")), f("-1"));
        assert!(codifferential(&f("x0*x1 + x2")).is_zero());
        assert_eq!(dirac(&f("x0*e0")), f("1"));
        assert_eq!(dirac(&f("x1")), f("-e1"));
    }

    #[test]
    fn operator_identity_sweep() {
        let recs = operator_identities(&f("x0*x1*e2 + x3^2*e013 + x1*x2 + x0^3*e12"));
        for id in ["d_squared", "delta_squared", "dirac_routes", "dirac_squared"] {
            assert!(failures(&recs, id).is_empty(), "{id}");
        }
    }

    #[test]
    fn boost_field() {
        let n = SplittingField::boost(sta(), 1).unwrap();
        assert!(!n.is_constant());
        let w = omega(&n);
        assert!(w.is_bivector());
        assert!(w.check(&n).iter().all(|r| r.matches));
        assert!(w.components[0].is_zero());
        assert_eq!(w.components[1].grades(), [2]);
        assert_eq!(w.components[1].len(), 1);
        assert!(frobenius_check(n.n()));
        assert!(!frobenius_check(&f("e1 + x0*e2 + x2*e0")));
    }

    #[test]
    fn constant_splitter() {
        let n = SplittingField::constant(&Mv::basis(sta(), 0)).unwrap();
        assert!(n.is_constant());
        assert!(SplittingField::constant(&Mv::basis(sta(), 1)).is_err());
        assert_eq!(n.lie_derivative(&f("x0")), f("1"));
        assert!(n.lie_derivative(&f("3")).is_zero());
        let sd = split_differential(&n, &f("x1*e1"));
        assert!(sd.perp_par.is_zero());
    }

    #[test]
    fn boost_identities() {
        let n = SplittingField::boost(sta(), 1).unwrap();
        let psi = f("x1*e0 + x2*x1*e12 + x0*e3");
        assert!(commutator_projection_identities(&n, &psi).iter().all(|r| r.matches));
        let recs = split_differential_identities(&n, &psi);
        for id in ["d_perp_perp", "d_perp_par", "d_par_par", "d_par_perp"] {
            assert!(failures(&recs, id).is_empty(), "{id}");
        }
        let rep = lie_d_parallel_commutator(&n, &psi);
        assert!(rep.records.iter().all(|r| r.matches));
        assert!(!rep.geodesic);
        let par = n.parallel(&psi);
        let d = n.covariant_parallel(1, &par).unwrap();
        assert!(n.orthogonal(&d).is_zero());
        assert_eq!(n.covariant_parallel(1, &f("e0")), Err(Error::NotParallel));
    }
}
