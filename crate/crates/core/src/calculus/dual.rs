//! d, δ and ∂ applied to α(ψ)_n = nψ̂n⁻¹ and to the τ-form of the same
//! grading, compared with the closed formulas usually quoted for them.
//!
//! In the formulas dn, dψ and dn⁻¹ are exterior differentials multiplied in
//! by the geometric product, and with k = |ψ|, d = p + q:
//! Δ = (-1)^(k(d-1)), β = (-1)^(q + k(d-k)).

use serde::Serialize;

use super::{codifferential, differential, dirac, Field, SplittingField};
use crate::error::{Error, Result};
use crate::hodge::dual_alpha;
use crate::identity::IdentityRecord;
use crate::scalars::{Rational, RationalFunction};

/// Constant c with ∂(α(ψ)_n) = c((-1)^k n dψ n⁻¹ + nψ dn⁻¹), when one
/// exists for this ψ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompactFit {
    pub grade: usize,
    /// `None` when no constant works.
    pub constant: Option<String>,
    /// Bracket and ∂α both vanish, so every constant works.
    pub degenerate: bool,
    pub published_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualReport {
    /// Operator-route equalities, asserted by the verifier.
    pub operator: Vec<IdentityRecord>,
    /// Formula routes, reported only.
    pub formulas: Vec<IdentityRecord>,
    pub compact: CompactFit,
}

fn pm(odd: bool) -> RationalFunction {
    RationalFunction::constant(if odd { Rational::from_int(-1) } else { Rational::one() })
}

/// Both routes for a homogeneous field ψ.
pub fn dual_decomposition_operators(n: &SplittingField, psi: &Field) -> Result<DualReport> {
    let sig = n.signature();
    let k = match psi.homogeneous_grade() {
        Some(k) => k,
        None if psi.is_zero() => 0,
        None => return Err(Error::NotHomogeneous),
    };
    let d = sig.dim();
    let nv = n.n();
    let n_inv = n.orientation().n_inverse();
    let o = n.orientation();

    let a_n = n.grading().alpha(psi);
    let a_tau = dual_alpha(psi, o);

    let operator = vec![
        IdentityRecord::new("alpha_routes", "α(ψ)_n = α(ψ)_τ", k, &a_n, &a_tau),
        IdentityRecord::new(
            "d_alpha_routes",
            "d(α(ψ)_n) = d(α(ψ)_τ)",
            k,
            &differential(&a_n),
            &differential(&a_tau),
        ),
        IdentityRecord::new(
            "delta_alpha_routes",
            "δ(α(ψ)_n) = δ(α(ψ)_τ)",
            k,
            &codifferential(&a_n),
            &codifferential(&a_tau),
        ),
        IdentityRecord::new(
            "dirac_alpha_routes",
            "∂(α(ψ)_n) = ∂(α(ψ)_τ)",
            k,
            &dirac(&a_n),
            &dirac(&a_tau),
        ),
    ];

    let sk = pm(k % 2 == 1);
    let delta = pm(k * (d - 1) % 2 == 1);
    let beta = pm((sig.q() + k * (d - k)) % 2 == 1);
    let bd = beta.mul(&delta);

    let hat = psi.grade_involution();
    let dn = differential(nv);
    let dn_inv = differential(n_inv);
    let d_hat = differential(&hat);
    let d_psi = differential(psi);
    // The three building blocks dn ψ̂ n⁻¹, n dψ̂ n⁻¹, n ψ̂ dn⁻¹ and n dψ n⁻¹.
    let t_dn = dn.gp(&hat).gp(n_inv);
    let t_dhat = nv.gp(&d_hat).gp(n_inv);
    let t_dninv = nv.gp(&hat).gp(&dn_inv);
    let t_dpsi = nv.gp(&d_psi).gp(n_inv);

    let f111 = &(&t_dn - &t_dhat) + &t_dninv.scale(&sk);
    let f112 = (&(&t_dn - &t_dhat) - &t_dninv.scale(&sk)).scale(&delta);
    let f113 = (&(&t_dninv + &t_dpsi) + &t_dn.scale(&sk))
        .scale(&beta)
        .scale(&pm((d - 1) % 2 == 1))
        .negate();
    let f114 = (&(&t_dpsi - &t_dninv) - &t_dn.scale(&sk)).scale(&bd);
    let one = RationalFunction::constant(Rational::one());
    let dirac_formula = &(&t_dn.scale(&one.add(&sk.mul(&bd))) - &nv.gp(&(&d_hat - &d_psi.scale(&bd))).gp(n_inv))
        + &t_dninv.scale(&bd.sub(&sk));
    let bracket = &t_dpsi.scale(&sk) + &nv.gp(psi).gp(&dn_inv);
    let compact = bracket.scale(&RationalFunction::constant(Rational::from_int(-2)));

    let da_n = differential(&a_n);
    let dlt_n = codifferential(&a_n);
    let dir_n = dirac(&a_n);
    let formulas = vec![
        IdentityRecord::new(
            "d_alpha_formula",
            "dα(ψ)_n = dn ψ̂ n⁻¹ - n dψ̂ n⁻¹ + (-1)^k n ψ̂ dn⁻¹",
            k,
            &da_n,
            &f111,
        ),
        IdentityRecord::new(
            "d_alpha_tau_formula",
            "dα(ψ)_τ = Δ(dn ψ̂ n⁻¹ - n dψ̂ n⁻¹ - (-1)^k n ψ̂ dn⁻¹)",
            k,
            &differential(&a_tau),
            &f112,
        ),
        IdentityRecord::new(
            "delta_alpha_formula",
            "δα(ψ)_n = -(-1)^(d-1) β(n ψ̂ dn⁻¹ + n dψ n⁻¹ + (-1)^k dn ψ̂ n⁻¹)",
            k,
            &dlt_n,
            &f113,
        ),
        IdentityRecord::new(
            "delta_alpha_tau_formula",
            "δα(ψ)_τ = Δβ(-n ψ̂ dn⁻¹ + n dψ n⁻¹ - (-1)^k dn ψ̂ n⁻¹)",
            k,
            &codifferential(&a_tau),
            &f114,
        ),
        IdentityRecord::new(
            "dirac_alpha_formula",
            "∂α(ψ)_n = (1 + (-1)^k βΔ) dn ψ̂ n⁻¹ - n(dψ̂ - βΔ dψ)n⁻¹ + (βΔ - (-1)^k) n ψ̂ dn⁻¹",
            k,
            &dir_n,
            &dirac_formula,
        ),
        IdentityRecord::new(
            "dirac_alpha_compact",
            "∂α(ψ)_n = -2((-1)^k n dψ n⁻¹ + n ψ dn⁻¹)",
            k,
            &dir_n,
            &compact,
        ),
    ];

    Ok(DualReport {
        operator,
        formulas,
        compact: fit_constant(k, &dir_n, &bracket),
    })
}

/// Find c with target = c · bracket.
fn fit_constant(grade: usize, target: &Field, bracket: &Field) -> CompactFit {
    let published = bracket.scale(&RationalFunction::constant(Rational::from_int(-2))) == *target;
    let Some((blade, b)) = bracket.terms().next() else {
        return CompactFit {
            grade,
            constant: None,
            degenerate: target.is_zero(),
            published_holds: published,
        };
    };
    let constant = target
        .coefficient(*blade)
        .checked_div(b)
        .ok()
        .and_then(|c| c.constant_value())
        .filter(|c| bracket.scale_rational(c) == *target);
    CompactFit {
        grade,
        constant: constant.map(|c| c.to_string()),
        degenerate: false,
        published_holds: published,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Mv, Signature};

    fn sta() -> Signature {
        Signature::spacetime()
    }

    fn f(text: &str) -> Field {
        Field::parse(sta(), text).unwrap()
    }

    #[test]
    fn operator_routes_agree() {
        let n = SplittingField::boost(sta(), 1).unwrap();
        for psi in ["x1*e01", "x0*x2*e2", "x3^2*e123 + x0*e012", "x1*x2"] {
            let r = dual_decomposition_operators(&n, &f(psi).grade(f(psi).grades()[0])).unwrap();
            assert!(r.operator.iter().all(|r| r.matches), "{psi}");
        }
        assert_eq!(
            dual_decomposition_operators(&n, &f("x1 + e0")).unwrap_err(),
            Error::NotHomogeneous
        );
    }

    #[test]
    fn constant_n_d_alpha_formula_sign() {
        let n = SplittingField::constant(&Mv::basis(sta(), 0)).unwrap();
        let r = dual_decomposition_operators(&n, &f("x0*e1")).unwrap();
        let rec = r.formulas.iter().find(|r| r.identity_id == "d_alpha_formula").unwrap();
        assert_eq!(rec.lhs, "e01");
        assert_eq!(rec.rhs, "-e01");
        assert!(!rec.matches);
    }

    #[test]
    fn compact_constant_for_scalar_field() {
        let n = SplittingField::constant(&Mv::basis(sta(), 0)).unwrap();
        let r = dual_decomposition_operators(&n, &f("x1")).unwrap();
        assert_eq!(r.compact.constant.as_deref(), Some("-1"));
        assert!(!r.compact.published_holds);
    }
}
