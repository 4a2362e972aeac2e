use rand::Rng;

use super::random::{self, Rng8};
use super::report::{Kind, Outcome, TrialResult};
use super::Suite;
use crate::algebra::{Blade, Mv, Signature};
use crate::calculus::{
    codifferential_parallel_identity, commutator_projection_identities, dual_decomposition_operators, frobenius_check,
    lie_d_parallel_commutator, omega, operator_identities, split_differential_identities, SplittingField,
};
use crate::dirac::{
    general_dirac_residual, hestenes_reduction, parallel_subalgebra_basis, projected_dirac_operator,
    quaternion_isomorphism_check, sigma_validate, spinor_field, AdaptedBasis, SigmaElement, Spinor,
};
use crate::error::Result;
use crate::grading::{metric_split, project_contraction_form, split_product_laws, Grading};
use crate::hodge::{
    dual_alpha, dual_grading_rows, hodge_inverse, hodge_split_identities, hodge_star, parallel_hodge,
    parallel_hodge_inverse, DualGradingRow, Orientation,
};
use crate::scalars::{Rational, Scalar};

use Kind::{Asserted, Reported};

/// Identity ids whose published form is reported rather than asserted.
const REPORTED: [&str; 5] = [
    "codifferential_hodge",
    "d_par_perp_covariant",
    "codifferential_parallel",
    "codifferential_parallel_comp",
    "omega_along_lie",
];

fn kind_of(id: &str) -> Kind {
    if REPORTED.contains(&id) {
        Reported
    } else {
        Asserted
    }
}

pub(super) struct Context {
    sig: Signature,
    degree: u32,
    boost: Option<SplittingField>,
}

impl Context {
    pub(super) fn new(sig: Signature, degree: u32) -> Self {
        let boost = (1..sig.dim()).find_map(|a| SplittingField::boost(sig, a).ok());
        Context { sig, degree, boost }
    }

    pub(super) fn run(&self, suite: Suite, trial: usize, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        match suite {
            Suite::Projectors => self.projectors(rng, out),
            Suite::Products => self.products(rng, out),
            Suite::Metric => self.metric(rng, out),
            Suite::Hodge => self.hodge(rng, out),
            Suite::Calculus => self.calculus(trial, rng, out),
            Suite::Dual => self.dual(trial, rng, out),
            Suite::Dirac => self.dirac(rng, out),
            Suite::All => unreachable!("expanded before dispatch"),
        }
    }

    /// Constant timelike n on even trials, the boost family on odd ones
    /// when the signature has one.
    fn splitting_field(&self, trial: usize, rng: &mut Rng8) -> Result<(SplittingField, &'static str)> {
        match &self.boost {
            Some(b) if trial % 2 == 1 => Ok((b.clone(), "boost")),
            _ => {
                let n = random::unit_vector(self.sig, 1, rng).expect("signature has a timelike axis");
                Ok((SplittingField::constant(&n)?, "constant"))
            }
        }
    }

    fn timelike_or_any(&self, rng: &mut Rng8) -> Mv {
        random::unit_vector(self.sig, 1, rng).unwrap_or_else(|| random::any_unit_vector(self.sig, rng))
    }

    fn projectors(&self, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let n = random::any_unit_vector(self.sig, rng);
        let psi = random::multivector(self.sig, rng);
        let phi = random::multivector(self.sig, rng);
        let g = Grading::vector(&n)?;
        let w = format!("n = {n}; psi = {psi}");
        let s = g.project(&psi)?;
        let zero = Mv::zero(self.sig);
        let checks = [
            (
                "parallel_idempotent",
                "π∥(π∥ψ) = π∥ψ",
                g.parallel(&s.parallel)?,
                s.parallel.clone(),
            ),
            (
                "orthogonal_idempotent",
                "π⊥(π⊥ψ) = π⊥ψ",
                g.orthogonal(&s.orthogonal)?,
                s.orthogonal.clone(),
            ),
            (
                "parallel_of_orthogonal",
                "π∥(π⊥ψ) = 0",
                g.parallel(&s.orthogonal)?,
                zero.clone(),
            ),
            (
                "orthogonal_of_parallel",
                "π⊥(π∥ψ) = 0",
                g.orthogonal(&s.parallel)?,
                zero,
            ),
            ("partition", "π∥ψ + π⊥ψ = ψ", &s.parallel + &s.orthogonal, psi.clone()),
            (
                "parallel_even",
                "α(π∥ψ) = π∥ψ",
                g.alpha(&s.parallel),
                s.parallel.clone(),
            ),
            (
                "orthogonal_odd",
                "α(π⊥ψ) = -π⊥ψ",
                g.alpha(&s.orthogonal),
                s.orthogonal.negate(),
            ),
            ("alpha_involutive", "α(α(ψ)) = ψ", g.alpha(&g.alpha(&psi)), psi.clone()),
        ];
        for (id, formula, lhs, rhs) in checks {
            out.push(Outcome::compare(
                format!("projectors.{id}"),
                formula,
                Asserted,
                &lhs,
                &rhs,
                &w,
            ));
        }
        let c = project_contraction_form(&n, &psi)?;
        out.push(Outcome::compare(
            "projectors.contraction_parallel",
            "π∥ψ = n⁻¹⌋(n∧ψ)",
            Asserted,
            &s.parallel,
            &c.parallel,
            &w,
        ));
        out.push(Outcome::compare(
            "projectors.contraction_orthogonal",
            "π⊥ψ = n⁻¹∧(n⌋ψ)",
            Asserted,
            &s.orthogonal,
            &c.orthogonal,
            &w,
        ));
        let wp = format!("{w}; phi = {phi}");
        out.push(Outcome::compare(
            "projectors.alpha_automorphism",
            "α(φψ) = α(φ)α(ψ)",
            Asserted,
            &g.alpha(&phi.gp(&psi)),
            &g.alpha(&phi).gp(&g.alpha(&psi)),
            &wp,
        ));
        let scale = random::nonzero_rational(rng);
        let dilated = Grading::vector(&n.scale_rational(&scale))?;
        out.push(Outcome::compare(
            "projectors.dilation_invariant",
            "α_(cn) = α_n",
            Asserted,
            &dilated.alpha(&psi),
            &g.alpha(&psi),
            &format!("{w}; c = {scale}"),
        ));
        Ok(())
    }

    fn products(&self, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let n = random::any_unit_vector(self.sig, rng);
        let phi = random::multivector(self.sig, rng);
        let psi = random::multivector(self.sig, rng);
        let g = Grading::vector(&n)?;
        let w = format!("n = {n}; phi = {phi}; psi = {psi}");
        for (id, residual) in split_product_laws(&g, &phi, &psi)?.residuals {
            let formula = match id {
                "product_parallel" => "(φψ)∥ = φ∥ψ∥ + φ⊥ψ⊥",
                "product_orthogonal" => "(φψ)⊥ = φ∥ψ⊥ + φ⊥ψ∥",
                "wedge_parallel" => "(v∧ψ)∥ = v∥∧ψ∥",
                _ => "(v∧ψ)⊥ = v⊥∧ψ∥ + v∥∧ψ⊥",
            };
            out.push(Outcome::flag(
                format!("products.{id}"),
                formula,
                Asserted,
                residual.is_zero(),
                residual.to_string(),
                &w,
            ));
        }
        Ok(())
    }

    fn metric(&self, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let sig = self.sig;
        let n = self.timelike_or_any(rng);
        let split = metric_split(&n)?;
        let w = format!("n = {n}");
        let nn = n.gp(&n).scalar_part();
        let h_on_n = split.h_on_n();
        out.push(Outcome::flag(
            "metric.h_annihilates_n",
            "h(n♯, ·) = 0",
            Asserted,
            h_on_n.iter().all(|x| x.is_zero()),
            format!("{h_on_n:?}"),
            &w,
        ));
        out.push(Outcome::flag(
            "metric.reconstructs",
            "h + n⊗n = g",
            Asserted,
            split.reconstructs(sig),
            format!("{:?}", split.h),
            &w,
        ));
        // Independent route through the multivector metric g(u, v).
        let e: Vec<Mv> = (0..sig.dim()).map(|i| Mv::basis(sig, i)).collect();
        let mut bad = Vec::new();
        for mu in 0..sig.dim() {
            for nu in 0..sig.dim() {
                let expected = e[mu]
                    .metric(&e[nu])
                    .sub(&e[mu].metric(&n).mul(&e[nu].metric(&n)).checked_div(&nn)?);
                if split.h[mu][nu] != expected {
                    bad.push(format!("h[{mu}][{nu}] = {} vs {expected}", split.h[mu][nu]));
                }
            }
        }
        out.push(Outcome::flag(
            "metric.h_definition",
            "h_μν = g_μν - n_μn_ν",
            Asserted,
            bad.is_empty(),
            bad.join("; "),
            &w,
        ));
        let u = random::vector(sig, rng);
        let v = random::vector(sig, rng);
        let g = Grading::vector(&n)?;
        let mut h_uv = Rational::zero();
        for mu in 0..sig.dim() {
            for nu in 0..sig.dim() {
                let term = split.h[mu][nu].mul(&u.coefficient(Blade::basis(mu)));
                h_uv = h_uv.add(&term.mul(&v.coefficient(Blade::basis(nu))));
            }
        }
        let g_par = g.parallel(&u)?.metric(&g.parallel(&v)?);
        out.push(Outcome::flag(
            "metric.parallel_metric",
            "h(u, v) = g(u∥, v∥)",
            Asserted,
            h_uv == g_par,
            format!("{h_uv} vs {g_par}"),
            &format!("{w}; u = {u}; v = {v}"),
        ));
        Ok(())
    }

    fn hodge(&self, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let n = self.timelike_or_any(rng);
        let psi = random::multivector(self.sig, rng);
        let o = Orientation::new(&n)?;
        let w = format!("n = {n}; psi = {psi}");
        let star = hodge_star(&psi, &o);
        out.push(Outcome::compare(
            "hodge.inverse_left",
            "⋆⁻¹⋆ψ = ψ",
            Asserted,
            &hodge_inverse(&star, &o),
            &psi,
            &w,
        ));
        out.push(Outcome::compare(
            "hodge.inverse_right",
            "⋆⋆⁻¹ψ = ψ",
            Asserted,
            &hodge_star(&hodge_inverse(&psi, &o), &o),
            &psi,
            &w,
        ));
        let d = self.sig.dim();
        let complement = psi
            .grades()
            .into_iter()
            .all(|k| hodge_star(&psi.grade(k), &o).homogeneous_grade() == Some(d - k));
        out.push(Outcome::flag(
            "hodge.grade_complement",
            "⋆ maps grade k to grade d - k",
            Asserted,
            complement,
            format!("⋆ψ = {star}"),
            &w,
        ));
        let tau = o.tau();
        out.push(Outcome::compare(
            "hodge.tau_parallel",
            "π⊥τ = 0",
            Asserted,
            &o.grading().orthogonal(tau)?,
            &Mv::zero(self.sig),
            &w,
        ));
        out.push(Outcome::compare(
            "hodge.n_wedge_tau",
            "n∧τ = n²η",
            Asserted,
            &n.wedge(tau),
            &n.gp(&n).gp(o.eta()),
            &w,
        ));
        let par = o.grading().parallel(&psi)?;
        out.push(Outcome::compare(
            "hodge.parallel_inverse",
            "⋆∥⁻¹⋆∥ψ∥ = ψ∥",
            Asserted,
            &parallel_hodge_inverse(&parallel_hodge(&par, &o)?, &o)?,
            &par,
            &w,
        ));
        out.push(Outcome::compare(
            "hodge.dual_alpha_routes",
            "nψ̂n⁻¹ = α(ψ)_τ",
            Asserted,
            &o.grading().alpha(&psi),
            &dual_alpha(&psi, &o),
            &w,
        ));
        blade_rows(&dual_grading_rows(&o), "hodge", &w, out);
        for rec in hodge_split_identities(&psi, &o) {
            out.push(Outcome::identity(
                format!("hodge.{}", rec.identity_id),
                &rec,
                Reported,
                &w,
            ));
        }
        Ok(())
    }

    fn calculus(&self, trial: usize, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let (n, label) = self.splitting_field(trial, rng)?;
        let psi = random::field(self.sig, self.degree, rng);
        let w = format!("n = {}; psi = {psi}", n.n());
        let fast = n.project(&psi);
        let sandwich = n.grading().project(&psi)?;
        out.push(Outcome::compare(
            "calculus.projector_forms",
            "n⌋(n∧ψ) = ½(ψ + nψ̂n⁻¹)",
            Asserted,
            &fast.parallel,
            &sandwich.parallel,
            &w,
        ));
        for rec in operator_identities(&psi) {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                &rec,
                kind_of(rec.identity_id),
                &w,
            ));
        }
        let wn = format!("n = {}", n.n());
        out.push(Outcome::flag(
            "calculus.frobenius",
            "n∧dn = 0",
            Asserted,
            frobenius_check(n.n()),
            "n∧dn ≠ 0".into(),
            &wn,
        ));
        for rec in omega(&n).check(&n) {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                &rec,
                Asserted,
                &wn,
            ));
        }
        let lie = lie_d_parallel_commutator(&n, &psi);
        for rec in &lie.records {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                rec,
                Asserted,
                &w,
            ));
        }
        out.push(Outcome::flag(
            "calculus.lie_d_parallel_commute_geodesic",
            "£ₙn = 0 ⇒ [£ₙ, d∥] = 0",
            Asserted,
            !lie.geodesic || lie.commutes,
            "£ₙn = 0 but [£ₙ, d∥]ψ ≠ 0".into(),
            &w,
        ));
        out.tally(
            format!("calculus.lie_d_parallel_commutes.{label}_n"),
            if lie.commutes { "commutes" } else { "defect" },
        );
        for rec in split_differential_identities(&n, &psi) {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                &rec,
                kind_of(rec.identity_id),
                &w,
            ));
        }
        for rec in commutator_projection_identities(&n, &psi) {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                &rec,
                Asserted,
                &w,
            ));
        }
        let par = n.parallel(&psi);
        let mut leak = None;
        for mu in 0..self.sig.dim() {
            let orth = n.orthogonal(&n.covariant_parallel(mu, &par)?);
            if !orth.is_zero() {
                leak = Some(format!("mu = {mu}: π⊥(D∥_μψ∥) = {orth}"));
                break;
            }
        }
        out.push(Outcome::flag(
            "calculus.covariant_preserves_parallel",
            "π⊥(D∥_μψ∥) = 0",
            Asserted,
            leak.is_none(),
            leak.unwrap_or_default(),
            &w,
        ));
        for rec in codifferential_parallel_identity(&n, &par)? {
            out.push(Outcome::identity(
                format!("calculus.{}", rec.identity_id),
                &rec,
                kind_of(rec.identity_id),
                &w,
            ));
        }
        Ok(())
    }

    fn dual(&self, trial: usize, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let (n, label) = self.splitting_field(trial, rng)?;
        let k = rng.gen_range(0..=self.sig.dim());
        let psi = random::homogeneous_field(self.sig, k, self.degree, rng);
        let w = format!("n = {}; psi = {psi}", n.n());
        let r = dual_decomposition_operators(&n, &psi)?;
        for rec in &r.operator {
            out.push(Outcome::identity(
                format!("dual.{}", rec.identity_id),
                rec,
                Asserted,
                &w,
            ));
        }
        for rec in &r.formulas {
            out.push(Outcome::identity(
                format!("dual.{}.grade{k}", rec.identity_id),
                rec,
                Reported,
                &w,
            ));
        }
        let fitted = match (&r.compact.constant, r.compact.degenerate) {
            (Some(c), _) => c.clone(),
            (None, true) => "any (both sides vanish)".into(),
            (None, false) => "none".into(),
        };
        out.tally(format!("dual.dirac_alpha_compact.constant.{label}_n.grade{k}"), fitted);
        blade_rows(
            &dual_grading_rows(n.orientation()),
            "dual",
            &format!("n = {}", n.n()),
            out,
        );
        Ok(())
    }

    fn dirac(&self, rng: &mut Rng8, out: &mut TrialResult) -> Result<()> {
        let sig = self.sig;
        let l = random::lorentz_versor(rng);
        let basis = AdaptedBasis::from_versor(&l)?;
        let w = format!("L = {}", l.element());
        out.push(Outcome::flag(
            "dirac.parallel_subalgebra",
            "span{1, nⁱ, nⁱʲ, n¹²³} is α-even and closed; n⁰-multiples are α-odd",
            Asserted,
            parallel_subalgebra_basis(&basis).holds(),
            "subalgebra check failed".into(),
            &w,
        ));
        let q = quaternion_isomorphism_check(&basis);
        let bad: Vec<String> = q
            .checks
            .iter()
            .filter(|c| !c.1)
            .map(|c| c.0.clone())
            .chain(
                q.table
                    .iter()
                    .filter(|e| !e.matches)
                    .map(|e| format!("{}·{} = {} (table {})", e.left, e.right, e.product, e.expected)),
            )
            .collect();
        out.push(Outcome::flag(
            "dirac.quaternion_table",
            "{P±, nⁱʲP±} multiply as H⊕H",
            Asserted,
            bad.is_empty(),
            bad.join("; "),
            &w,
        ));

        let sigma = random::unit_sigma(rng);
        let sm = sigma.to_multivector(&basis);
        let ws = format!("{w}; sigma = {sm}");
        out.push(Outcome::flag(
            "dirac.sigma_unit_accepted",
            "a₁² + a₂² + a₃² = 1 ⇒ σ² = -1, [n, σ] = 0",
            Asserted,
            sigma_validate(&sigma, &basis),
            "rejected".into(),
            &ws,
        ));
        for plus in [true, false] {
            let p = basis.idempotent(plus);
            out.push(Outcome::compare(
                "dirac.sigma_commutes_idempotents",
                "σP± = P±σ",
                Asserted,
                &sm.gp(&p),
                &p.gp(&sm),
                &ws,
            ));
        }
        let any = random::any_sigma(rng);
        let norm = any.a1.mul(&any.a1).add(&any.a2.mul(&any.a2)).add(&any.a3.mul(&any.a3));
        out.push(Outcome::flag(
            "dirac.sigma_validate_oracle",
            "σ valid ⇔ a₁² + a₂² + a₃² = 1",
            Asserted,
            sigma_validate(&any, &basis) == norm.is_one(),
            format!("a = ({}, {}, {})", any.a1, any.a2, any.a3),
            &w,
        ));
        let q35 = |n: i64, d: i64| Rational::new(n, d).expect("nonzero denominator");
        let fixtures = sigma_validate(&SigmaElement::new(q35(3, 5), q35(4, 5), q35(0, 1)), &basis)
            && !sigma_validate(&SigmaElement::new(q35(1, 1), q35(1, 1), q35(0, 1)), &basis);
        out.push(Outcome::flag(
            "dirac.sigma_fixtures",
            "(3/5, 4/5, 0) accepted, (1, 1, 0) rejected",
            Asserted,
            fixtures,
            "fixture verdict wrong".into(),
            &w,
        ));

        let coeffs = random::rational_coefficients(rng);
        let spinor = Spinor::new(coeffs);
        let m = spinor.to_multivector(&basis);
        let wsp = format!("{w}; spinor = {m}");
        out.push(Outcome::compare(
            "dirac.spinor_alpha_even",
            "π⊥ψ = 0",
            Asserted,
            &basis.grading().orthogonal(&m)?,
            &Mv::zero(sig),
            &wsp,
        ));
        let back = Spinor::extract(&m, &basis)?;
        out.push(Outcome::flag(
            "dirac.spinor_round_trip",
            "coefficients(spinor(a, b, c, d)) = (a, b, c, d)",
            Asserted,
            back == spinor,
            format!("{:?}", back.coefficients()),
            &wsp,
        ));

        let psi = spinor_field(random::polynomial_coefficients(sig, self.degree, rng), &basis);
        let mass = random::coefficient(rng);
        let wd = format!("{ws}; m = {mass}; psi = {psi}");
        let res = general_dirac_residual(&psi, &sigma, &basis, &mass)?;
        out.push(Outcome::identity(
            "dirac.general_split_relation",
            &res.relation,
            Asserted,
            &wd,
        ));

        let even = random::even_field(sig, self.degree, false, rng);
        let rec = hestenes_reduction(&even, &mass)?;
        out.push(Outcome::identity(
            "dirac.hestenes_reduction",
            &rec,
            Reported,
            &format!("m = {mass}; psi = {even}"),
        ));
        let still = random::even_field(sig, self.degree, true, rng);
        let rec = hestenes_reduction(&still, &Rational::zero())?;
        out.push(Outcome::identity(
            "dirac.hestenes_reduction_static_massless",
            &rec,
            Asserted,
            &format!("m = 0; psi = {still}"),
        ));

        let field = random::field(sig, self.degree, rng);
        let proj = projected_dirac_operator(&basis.splitting_field(), &field);
        out.push(Outcome::flag(
            "dirac.projected_reconstructs",
            "π∥(∂)ψ + π⊥(∂)ψ = ∂ψ",
            Asserted,
            proj.reconstructs(&field),
            format!("π∥(∂)ψ = {}, π⊥(∂)ψ = {}", proj.parallel, proj.orthogonal),
            &format!("{w}; psi = {field}"),
        ));
        Ok(())
    }
}

/// α_n = α_τ on every basis blade is asserted; the printed sign exponent
/// is reported per grade.
fn blade_rows(rows: &[DualGradingRow], prefix: &str, witness: &str, out: &mut TrialResult) {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches)
        .map(|r| format!("{}: {} vs {}", r.blade, r.alpha_n, r.alpha_tau))
        .collect();
    out.push(Outcome::flag(
        format!("{prefix}.blade_alpha_routes"),
        "nψ̂n⁻¹ = α(ψ)_τ on every basis blade",
        Asserted,
        bad.is_empty(),
        bad.join("; "),
        witness,
    ));
    let top = rows.iter().map(|r| grade_of(&r.blade)).max().unwrap_or(0);
    for k in 0..=top {
        let wrong: Vec<String> = rows
            .iter()
            .filter(|r| grade_of(&r.blade) == k && !r.printed_matches)
            .map(|r| format!("{}: {} vs {}", r.blade, r.printed, r.alpha_n))
            .collect();
        out.push(Outcome::flag(
            format!("{prefix}.blade_alpha_printed.grade{k}"),
            "α(ψ)_τ with sign (-1)^(k(d-1)) equals nψ̂n⁻¹",
            Reported,
            wrong.is_empty(),
            wrong.join("; "),
            witness,
        ));
    }
}

fn grade_of(label: &str) -> usize {
    if label == "1" {
        0
    } else {
        label.trim_start_matches('e').len()
    }
}
