//! Hodge duality on Cl(p,q) and on the parallel subalgebra selected by a
//! unit 1-form n, together with the dual τ-grading.
//!
//! Conventions: η has coefficient +1 on e0…(d-1), ⋆ψ = ψ̃η, τ = nη and
//! ⋆∥ψ∥ = n⌋(ψ̄∥⌋η), which coincides with ψ̃∥τ.

use serde::Serialize;

use crate::algebra::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::grading::Grading;
use crate::identity::IdentityRecord;
use crate::scalars::Scalar;

/// Volume elements attached to a unit 1-form n.
#[derive(Clone, Debug, PartialEq)]
pub struct Orientation<S: Scalar> {
    n: Multivector<S>,
    n_inv: Multivector<S>,
    eta: Multivector<S>,
    tau: Multivector<S>,
    grading: Grading<S>,
}

fn sign<S: Scalar>(odd: bool) -> S {
    if odd {
        S::one().neg()
    } else {
        S::one()
    }
}

impl<S: Scalar> Orientation<S> {
    /// Requires n² = ±1.
    pub fn new(n: &Multivector<S>) -> Result<Self> {
        if n.homogeneous_grade() != Some(1) {
            return Err(Error::NotUnitNorm(format!("{n} is not a 1-form")));
        }
        let sq = n.gp(n).scalar_part();
        let n_inv = if sq.is_one() {
            n.clone()
        } else if sq.neg().is_one() {
            n.negate()
        } else {
            return Err(Error::NotUnitNorm(format!("n² = {sq}")));
        };
        let sig = n.signature();
        let eta = Multivector::pseudoscalar(sig);
        let tau = n.gp(&eta);
        Ok(Orientation {
            n: n.clone(),
            n_inv,
            eta,
            tau,
            grading: Grading::vector(n)?,
        })
    }

    pub fn n(&self) -> &Multivector<S> {
        &self.n
    }

    pub fn n_inverse(&self) -> &Multivector<S> {
        &self.n_inv
    }

    pub fn eta(&self) -> &Multivector<S> {
        &self.eta
    }

    pub fn tau(&self) -> &Multivector<S> {
        &self.tau
    }

    pub fn grading(&self) -> &Grading<S> {
        &self.grading
    }

    fn dim(&self) -> usize {
        self.n.signature().dim()
    }

    fn split(&self, psi: &Multivector<S>) -> (Multivector<S>, Multivector<S>) {
        let s = self.grading.project(psi).expect("vector gradings are involutive");
        (s.parallel, s.orthogonal)
    }
}

/// ⋆ψ = ψ̃η.
pub fn hodge_star<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Multivector<S> {
    psi.reverse().gp(&o.eta)
}

/// ⋆⁻¹ = β⋆ grade by grade, β = (-1)^(q + k(d-k)).
pub fn hodge_inverse<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Multivector<S> {
    let sig = psi.signature();
    let d = sig.dim();
    let mut out = Multivector::zero(sig);
    for k in psi.grades() {
        let beta = sign::<S>((sig.q() + k * (d - k)) % 2 == 1);
        out = &out + &hodge_star(&psi.grade(k), o).scale(&beta);
    }
    out
}

/// ⋆∥ψ∥ = n⌋(ψ̄∥⌋η). Fails with NotParallel when ψ has an orthogonal part.
pub fn parallel_hodge<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Result<Multivector<S>> {
    let (_, perp) = o.split(psi);
    if !perp.is_zero() {
        return Err(Error::NotParallel);
    }
    Ok(o.n.lc(&psi.conjugate().lc(&o.eta)))
}

/// Inverse of ⋆∥ on the parallel subalgebra. On grade k,
/// ⋆∥⋆∥ψ = (-1)^(k(d-2)) τ̃τ ψ.
pub fn parallel_hodge_inverse<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Result<Multivector<S>> {
    let sig = psi.signature();
    let d = sig.dim();
    let tt = o.tau.reverse().gp(&o.tau).scalar_part();
    let mut out = Multivector::zero(sig);
    for k in psi.grades() {
        let star = parallel_hodge(&psi.grade(k), o)?;
        let c = sign::<S>(k * d % 2 == 1).mul(&tt);
        out = &out + &star.div_scalar(&c)?;
    }
    Ok(out)
}

/// τ-conjugation Σ_k (-1)^(k d) τ ψ_k τ⁻¹, which equals α(ψ) = nψ̂n⁻¹.
pub fn dual_alpha<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Multivector<S> {
    dual_alpha_with(psi, o, o.dim())
}

/// The same conjugation with the exponent k(d-1), as it is usually printed.
/// It disagrees with α on odd grades.
pub fn dual_alpha_printed<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Multivector<S> {
    dual_alpha_with(psi, o, o.dim() - 1)
}

fn dual_alpha_with<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>, m: usize) -> Multivector<S> {
    let sig = psi.signature();
    // τ⁻¹ = τ̃ / (ττ̃), and ττ̃ is a nonzero scalar for a blade.
    let tt = o.tau.gp(&o.tau.reverse()).scalar_part();
    let tau_inv = o.tau.reverse().div_scalar(&tt).expect("τ is invertible");
    let mut out = Multivector::zero(sig);
    for k in psi.grades() {
        let s = sign::<S>(k * m % 2 == 1);
        out = &out + &o.tau.sandwich(&psi.grade(k), &tau_inv).scale(&s);
    }
    out
}

/// One blade of the dual-grading comparison.
#[derive(Clone, Debug, Serialize)]
pub struct DualGradingRow {
    pub blade: String,
    pub alpha_n: String,
    pub alpha_tau: String,
    pub printed: String,
    pub matches: bool,
    pub printed_matches: bool,
}

/// Compare α_n with both τ-forms on every basis blade.
pub fn dual_grading_rows<S: Scalar>(o: &Orientation<S>) -> Vec<DualGradingRow> {
    let sig = o.n.signature();
    Blade::all(sig)
        .into_iter()
        .map(|b| {
            let psi = Multivector::from_blade(sig, b, S::one());
            let a_n = o.grading.alpha(&psi);
            let a_tau = dual_alpha(&psi, o);
            let printed = dual_alpha_printed(&psi, o);
            DualGradingRow {
                blade: b.to_string(),
                matches: a_n == a_tau,
                printed_matches: a_n == printed,
                alpha_n: a_n.to_string(),
                alpha_tau: a_tau.to_string(),
                printed: printed.to_string(),
            }
        })
        .collect()
}

type Side<S> = fn(&Multivector<S>, &Orientation<S>) -> Multivector<S>;

struct Identity<S: Scalar> {
    id: &'static str,
    formula: &'static str,
    vectors_only: bool,
    lhs: Side<S>,
    rhs: Side<S>,
}

fn par_star<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Multivector<S> {
    parallel_hodge(psi, o).expect("argument is parallel")
}

fn identities<S: Scalar>() -> Vec<Identity<S>> {
    vec![
        Identity {
            id: "dhso_forms_agree",
            formula: "v∥⌋τ = n⌋(v̄∥⌋η)",
            vectors_only: false,
            lhs: |p, o| o.split(p).0.reverse().lc(&o.tau),
            rhs: |p, o| par_star(&o.split(p).0, o),
        },
        Identity {
            id: "dhso_vector_contraction",
            formula: "⋆∥v∥ = -n⌋(⋆v)",
            vectors_only: true,
            lhs: |p, o| par_star(&o.split(p).0, o),
            rhs: |p, o| o.n.lc(&hodge_star(p, o)).negate(),
        },
        Identity {
            id: "star_vector_orthogonal",
            formula: "(⋆v)⊥ = -n(⋆∥v∥)",
            vectors_only: true,
            lhs: |p, o| o.split(&hodge_star(p, o)).1,
            rhs: |p, o| o.n.gp(&par_star(&o.split(p).0, o)).negate(),
        },
        Identity {
            id: "dhso_contraction",
            formula: "⋆∥ψ∥ = n⌋(⋆ψ̂)",
            vectors_only: false,
            lhs: |p, o| par_star(&o.split(p).0, o),
            rhs: |p, o| o.n.lc(&hodge_star(&p.grade_involution(), o)),
        },
        Identity {
            id: "dhso_orthogonal",
            formula: "⋆∥ψ∥ = n(⋆ψ̂)⊥",
            vectors_only: false,
            lhs: |p, o| par_star(&o.split(p).0, o),
            rhs: |p, o| o.n.gp(&o.split(&hodge_star(&p.grade_involution(), o)).1),
        },
        Identity {
            id: "star_orthogonal",
            formula: "(⋆ψ)⊥ = n(⋆∥ψ̂∥)",
            vectors_only: false,
            lhs: |p, o| o.split(&hodge_star(p, o)).1,
            rhs: |p, o| o.n.gp(&par_star(&o.split(&p.grade_involution()).0, o)),
        },
        Identity {
            id: "dhso_of_contraction",
            formula: "⋆∥(n⌋ψ) = ⋆(ψ⊥)",
            vectors_only: false,
            lhs: |p, o| par_star(&o.n.lc(p), o),
            rhs: |p, o| hodge_star(&o.split(p).1, o),
        },
        Identity {
            id: "star_parallel",
            formula: "(⋆ψ)∥ = ⋆(ψ⊥)",
            vectors_only: false,
            lhs: |p, o| o.split(&hodge_star(p, o)).0,
            rhs: |p, o| hodge_star(&o.split(p).1, o),
        },
    ]
}

/// Evaluate each splitting identity of the Hodge star on every grade of ψ.
/// Nothing is asserted; every record carries both sides and the residual.
pub fn hodge_split_identities<S: Scalar>(psi: &Multivector<S>, o: &Orientation<S>) -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    for id in identities::<S>() {
        for k in psi.grades() {
            if id.vectors_only && k != 1 {
                continue;
            }
            let part = psi.grade(k);
            out.push(IdentityRecord::new(
                id.id,
                id.formula,
                k,
                &(id.lhs)(&part, o),
                &(id.rhs)(&part, o),
            ));
        }
    }
    out
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

    fn o0() -> Orientation<Rational> {
        Orientation::new(&e(&[0])).unwrap()
    }

    #[test]
    fn orientation_basics() {
        let o = o0();
        assert_eq!(o.tau(), &e(&[1, 2, 3]));
        assert_eq!(o.n().wedge(o.tau()), *o.eta());
        assert!(Orientation::new(&e(&[0]).scale(&Rational::from_int(2))).is_err());
    }

    #[test]
    fn star_examples() {
        let o = o0();
        let one = Mv::one(sta());
        assert_eq!(hodge_star(&one, &o), e(&[0, 1, 2, 3]));
        assert_eq!(hodge_star(&e(&[0]), &o), e(&[1, 2, 3]));
        assert_eq!(hodge_star(o.eta(), &o), -&one);
        assert_eq!(hodge_inverse(&e(&[0]), &o), e(&[1, 2, 3]));
        assert_eq!(hodge_star(&e(&[1, 2, 3]), &o), e(&[0]));
    }

    #[test]
    fn inverse_sweep() {
        for (p, q) in [(1, 3), (2, 2), (3, 0), (0, 3)] {
            let sig = Signature::new(p, q).unwrap();
            let n = Mv::basis(sig, 0);
            let o = Orientation::new(&n).unwrap();
            for b in Blade::all(sig) {
                let psi = Mv::from_blade(sig, b, Rational::one());
                let star = hodge_star(&psi, &o);
                assert_eq!(hodge_inverse(&star, &o), psi);
                assert_eq!(hodge_star(&hodge_inverse(&psi, &o), &o), psi);
                assert_eq!(star.homogeneous_grade(), Some(sig.dim() - b.grade()));
            }
        }
    }

    #[test]
    fn parallel_star_examples() {
        let o = o0();
        assert_eq!(parallel_hodge(&e(&[1]), &o).unwrap(), -&e(&[2, 3]));
        assert_eq!(parallel_hodge(&Mv::one(sta()), &o).unwrap(), e(&[1, 2, 3]));
        let twice = parallel_hodge(&parallel_hodge(&e(&[1]), &o).unwrap(), &o).unwrap();
        assert_eq!(twice, -&e(&[1]));
        assert_eq!(parallel_hodge(&e(&[0]), &o), Err(Error::NotParallel));
        for b in Blade::all(sta()).into_iter().filter(|b| !b.contains(0)) {
            let psi = Mv::from_blade(sta(), b, Rational::one());
            let star = parallel_hodge(&psi, &o).unwrap();
            assert_eq!(parallel_hodge_inverse(&star, &o).unwrap(), psi);
        }
    }

    #[test]
    fn dual_grading_on_blades() {
        let o = o0();
        let rows = dual_grading_rows(&o);
        assert_eq!(rows.len(), 16);
        assert!(rows.iter().all(|r| r.matches));
        // The printed exponent disagrees exactly on the odd grades.
        let bad: Vec<&str> = rows
            .iter()
            .filter(|r| !r.printed_matches)
            .map(|r| r.blade.as_str())
            .collect();
        assert_eq!(bad, ["e0", "e1", "e2", "e3", "e012", "e013", "e023", "e123"]);
    }

    #[test]
    fn vector_identity_example() {
        let o = o0();
        let recs = hodge_split_identities(&e(&[1]), &o);
        let r = recs.iter().find(|r| r.identity_id == "star_vector_orthogonal").unwrap();
        assert!(r.matches);
        let recs = hodge_split_identities(&Mv::one(sta()), &o);
        let r = recs.iter().find(|r| r.identity_id == "star_parallel").unwrap();
        assert!(r.matches);
        assert_eq!(r.lhs, "0");
    }
}
