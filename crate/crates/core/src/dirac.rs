//! The real Dirac-Hestenes sector of Cl(1,3) relative to an adapted frame:
//! the parallel subalgebra Cl∥ ≅ Cl(0,3) ≅ H⊕H with central idempotents
//! P± = ½(1 ± n¹²³), spinors in that subalgebra, admissible σ, and residual
//! checkers for the Dirac equation in its Hestenes form and in the split
//! form relative to n.
//!
//! Quaternion units are labelled i = n²³, j = n³¹, k = n¹², which gives
//! ij = k in Cl(1,3).

use serde::Serialize;

use crate::algebra::{Multivector, Mv, Signature};
use crate::calculus::{coframe, field_partial, lift, Field, SplittingField};
use crate::error::{Error, Result};
use crate::grading::{Grading, Versor};
use crate::identity::IdentityRecord;
use crate::scalars::{Rational, RationalFunction, Scalar};

/// Orthonormal frame {n⁰ = n, n¹, n², n³} of Cl(1,3), n^μ = L e^μ L̃.
#[derive(Clone, Debug, PartialEq)]
pub struct AdaptedBasis {
    frame: [Mv; 4],
    grading: Grading<Rational>,
}

/// Labels of the parallel basis, in order.
pub const PARALLEL_LABELS: [&str; 8] = ["1", "n1", "n2", "n3", "n12", "n23", "n31", "n123"];
/// Labels of the orthogonal basis, in order.
pub const ORTHOGONAL_LABELS: [&str; 8] = ["n0", "n01", "n02", "n03", "n012", "n023", "n031", "n0123"];

impl AdaptedBasis {
    pub fn from_versor(l: &Versor<Rational>) -> Result<Self> {
        if l.element().signature() != Signature::spacetime() {
            return Err(Error::NotAdapted("frame must live in Cl(1,3)".into()));
        }
        let f = l.adapted_frame()?;
        Self::from_frame([f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone()])
    }

    pub fn standard() -> Self {
        Self::from_versor(&Versor::identity(Signature::spacetime())).expect("identity frame")
    }

    /// Checks (n⁰)² = 1, (nⁱ)² = -1 and pairwise anticommutation.
    pub fn from_frame(frame: [Mv; 4]) -> Result<Self> {
        let sig = Signature::spacetime();
        for (mu, f) in frame.iter().enumerate() {
            if f.signature() != sig || f.homogeneous_grade() != Some(1) {
                return Err(Error::NotAdapted(format!("n{mu} = {f} is not a 1-form of Cl(1,3)")));
            }
            let want = if mu == 0 { 1 } else { -1 };
            if f.gp(f) != Mv::scalar(sig, Rational::from_int(want)) {
                return Err(Error::NotAdapted(format!("(n{mu})^2 = {}", f.gp(f))));
            }
            for (nu, g) in frame.iter().enumerate().take(mu) {
                if !(&f.gp(g) + &g.gp(f)).is_zero() {
                    return Err(Error::NotAdapted(format!("n{nu} and n{mu} do not anticommute")));
                }
            }
        }
        Ok(AdaptedBasis {
            grading: Grading::vector(&frame[0])?,
            frame,
        })
    }

    pub fn n(&self) -> &Mv {
        &self.frame[0]
    }

    pub fn frame(&self) -> &[Mv; 4] {
        &self.frame
    }

    pub fn grading(&self) -> &Grading<Rational> {
        &self.grading
    }

    /// Product of frame vectors in the given order, e.g. [3, 1] for n³¹.
    pub fn element(&self, indices: &[usize]) -> Mv {
        indices
            .iter()
            .fold(Mv::one(Signature::spacetime()), |acc, &i| acc.gp(&self.frame[i]))
    }

    /// P± = ½(1 ± n¹²³).
    pub fn idempotent(&self, plus: bool) -> Mv {
        let half = Rational::new(1, 2).expect("nonzero denominator");
        let p = self.element(&[1, 2, 3]);
        let one = Mv::one(Signature::spacetime());
        if plus { &one + &p } else { &one - &p }.scale(&half)
    }

    /// (i, j, k) = (n²³, n³¹, n¹²).
    pub fn quaternion_units(&self) -> [Mv; 3] {
        [self.element(&[2, 3]), self.element(&[3, 1]), self.element(&[1, 2])]
    }

    pub fn splitting_field(&self) -> SplittingField {
        SplittingField::constant(self.n()).expect("n is a unit 1-form")
    }
}

/// The parallel and orthogonal bases with their checks.
#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraReport {
    pub parallel: Vec<(String, String)>,
    pub orthogonal: Vec<(String, String)>,
    /// α fixes each parallel element.
    pub parallel_fixed: bool,
    /// α negates each orthogonal element.
    pub orthogonal_negated: bool,
    /// Products of parallel elements stay parallel.
    pub closed: bool,
}

impl SubalgebraReport {
    pub fn holds(&self) -> bool {
        self.parallel_fixed && self.orthogonal_negated && self.closed
    }
}

fn parallel_elements(b: &AdaptedBasis) -> [Mv; 8] {
    [
        b.element(&[]),
        b.element(&[1]),
        b.element(&[2]),
        b.element(&[3]),
        b.element(&[1, 2]),
        b.element(&[2, 3]),
        b.element(&[3, 1]),
        b.element(&[1, 2, 3]),
    ]
}

fn orthogonal_elements(b: &AdaptedBasis) -> [Mv; 8] {
    [
        b.element(&[0]),
        b.element(&[0, 1]),
        b.element(&[0, 2]),
        b.element(&[0, 3]),
        b.element(&[0, 1, 2]),
        b.element(&[0, 2, 3]),
        b.element(&[0, 3, 1]),
        b.element(&[0, 1, 2, 3]),
    ]
}

/// span{1, n¹, n², n³, n¹², n²³, n³¹, n¹²³} and its complement.
pub fn parallel_subalgebra_basis(b: &AdaptedBasis) -> SubalgebraReport {
    let g = b.grading();
    let par = parallel_elements(b);
    let perp = orthogonal_elements(b);
    let closed = par.iter().all(|x| {
        par.iter()
            .all(|y| g.orthogonal(&x.gp(y)).expect("involutive").is_zero())
    });
    SubalgebraReport {
        parallel: PARALLEL_LABELS
            .iter()
            .zip(&par)
            .map(|(l, e)| (l.to_string(), e.to_string()))
            .collect(),
        orthogonal: ORTHOGONAL_LABELS
            .iter()
            .zip(&perp)
            .map(|(l, e)| (l.to_string(), e.to_string()))
            .collect(),
        parallel_fixed: par.iter().all(|e| g.alpha(e) == *e),
        orthogonal_negated: perp.iter().all(|e| g.alpha(e) == -e),
        closed,
    }
}

/// One entry of the 8×8 table of {P±, iP±, jP±, kP±}.
#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub left: &'static str,
    pub right: &'static str,
    pub expected: String,
    pub product: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuaternionReport {
    pub checks: Vec<(String, bool)>,
    pub table: Vec<TableEntry>,
}

impl QuaternionReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.1) && self.table.iter().all(|e| e.matches)
    }
}

const PAIR_LABELS: [&str; 8] = ["P+", "iP+", "jP+", "kP+", "P-", "iP-", "jP-", "kP-"];

/// Quaternion multiplication on (1, i, j, k): sign and index of the product.
const QUATERNION: [[(i8, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
];

/// The H⊕H product of basis elements a and b (index 4s + q), as sign and
/// index, or None when the copies annihilate each other.
pub fn h_plus_h_product(a: usize, b: usize) -> Option<(i8, usize)> {
    if a / 4 != b / 4 {
        return None;
    }
    let (s, q) = QUATERNION[a % 4][b % 4];
    Some((s, 4 * (a / 4) + q))
}

/// Cl(0,3) relations of the frame, centrality of n¹²³, the idempotent
/// relations, and the full product table of {P±, n^{ij}P±} against H⊕H.
pub fn quaternion_isomorphism_check(b: &AdaptedBasis) -> QuaternionReport {
    let sig = Signature::spacetime();
    let one = Mv::one(sig);
    let zero = Mv::zero(sig);
    let mut checks = Vec::new();
    for i in 1..4 {
        checks.push((format!("(n{i})^2 = -1"), b.frame[i].gp(&b.frame[i]) == -&one));
        for j in (i + 1)..4 {
            let anti = &b.frame[i].gp(&b.frame[j]) + &b.frame[j].gp(&b.frame[i]);
            checks.push((format!("n{i} n{j} = -n{j} n{i}"), anti.is_zero()));
        }
    }
    let vol = b.element(&[1, 2, 3]);
    checks.push(("(n123)^2 = 1".into(), vol.gp(&vol) == one));
    let par = parallel_elements(b);
    checks.push((
        "n123 is central in the parallel subalgebra".into(),
        par.iter().all(|x| vol.commutator(x).is_zero()),
    ));
    let (pp, pm) = (b.idempotent(true), b.idempotent(false));
    checks.push(("P+^2 = P+".into(), pp.gp(&pp) == pp));
    checks.push(("P-^2 = P-".into(), pm.gp(&pm) == pm));
    checks.push(("P+ P- = 0".into(), pp.gp(&pm) == zero && pm.gp(&pp) == zero));
    checks.push(("P+ + P- = 1".into(), &pp + &pm == one));
    checks.push((
        "P+ and P- commute with the parallel subalgebra".into(),
        par.iter()
            .all(|x| pp.commutator(x).is_zero() && pm.commutator(x).is_zero()),
    ));

    let [i, j, k] = b.quaternion_units();
    let elems: Vec<Mv> = [&pp, &pm]
        .iter()
        .flat_map(|p| [(*p).clone(), i.gp(p), j.gp(p), k.gp(p)])
        .collect();
    let mut table = Vec::with_capacity(64);
    for (a, x) in elems.iter().enumerate() {
        for (c, y) in elems.iter().enumerate() {
            let product = x.gp(y);
            let (expected, label) = match h_plus_h_product(a, c) {
                None => (zero.clone(), "0".to_string()),
                Some((s, idx)) => {
                    let e = if s < 0 { -&elems[idx] } else { elems[idx].clone() };
                    let label = if s < 0 {
                        format!("-{}", PAIR_LABELS[idx])
                    } else {
                        PAIR_LABELS[idx].into()
                    };
                    (e, label)
                }
            };
            table.push(TableEntry {
                left: PAIR_LABELS[a],
                right: PAIR_LABELS[c],
                expected: label,
                matches: product == expected,
                product: product.to_string(),
            });
        }
    }
    QuaternionReport { checks, table }
}

/// ψ = aP₊ + b_{ij}n^{ij}P₊ + cP₋ + d_{ij}n^{ij}P₋ with ij over 12, 23, 31.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor<S: Scalar> {
    pub a: S,
    pub b: [S; 3],
    pub c: S,
    pub d: [S; 3],
}

fn lift_to<S: Scalar>(m: &Mv) -> Multivector<S> {
    m.map(|c| S::from_rational(c.clone()))
}

impl<S: Scalar> Spinor<S> {
    /// Coefficients in the order a, b12, b23, b31, c, d12, d23, d31.
    pub fn new(coefficients: [S; 8]) -> Self {
        let [a, b12, b23, b31, c, d12, d23, d31] = coefficients;
        Spinor {
            a,
            b: [b12, b23, b31],
            c,
            d: [d12, d23, d31],
        }
    }

    pub fn coefficients(&self) -> [S; 8] {
        [
            self.a.clone(),
            self.b[0].clone(),
            self.b[1].clone(),
            self.b[2].clone(),
            self.c.clone(),
            self.d[0].clone(),
            self.d[1].clone(),
            self.d[2].clone(),
        ]
    }

    fn generators(basis: &AdaptedBasis) -> [Mv; 8] {
        let (pp, pm) = (basis.idempotent(true), basis.idempotent(false));
        let bivectors = [basis.element(&[1, 2]), basis.element(&[2, 3]), basis.element(&[3, 1])];
        [
            pp.clone(),
            bivectors[0].gp(&pp),
            bivectors[1].gp(&pp),
            bivectors[2].gp(&pp),
            pm.clone(),
            bivectors[0].gp(&pm),
            bivectors[1].gp(&pm),
            bivectors[2].gp(&pm),
        ]
    }

    pub fn to_multivector(&self, basis: &AdaptedBasis) -> Multivector<S> {
        let sig = Signature::spacetime();
        Self::generators(basis)
            .iter()
            .zip(self.coefficients())
            .fold(Multivector::zero(sig), |acc, (g, c)| &acc + &lift_to::<S>(g).scale(&c))
    }

    /// Inverse of `to_multivector`; fails with NotParallel outside Cl∥.
    /// Each coefficient is 2⟨ψ X⁻¹ P±⟩ with X ∈ {1, n¹², n²³, n³¹}.
    pub fn extract(psi: &Multivector<S>, basis: &AdaptedBasis) -> Result<Self> {
        let two = S::from_int(2);
        let units = [
            Mv::one(Signature::spacetime()),
            basis.element(&[1, 2]).negate(),
            basis.element(&[2, 3]).negate(),
            basis.element(&[3, 1]).negate(),
        ];
        let mut coeffs = Vec::with_capacity(8);
        for plus in [true, false] {
            let p = basis.idempotent(plus);
            for x in &units {
                let probe = lift_to::<S>(&x.gp(&p));
                coeffs.push(psi.gp(&probe).scalar_part().mul(&two));
            }
        }
        let s = Spinor::new(coeffs.try_into().unwrap_or_else(|_| unreachable!()));
        if s.to_multivector(basis) != *psi {
            return Err(Error::NotParallel);
        }
        Ok(s)
    }
}

/// σ = a₃n¹² + a₁n²³ + a₂n³¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaElement {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
}

impl SigmaElement {
    pub fn new(a1: Rational, a2: Rational, a3: Rational) -> Self {
        SigmaElement { a1, a2, a3 }
    }

    pub fn to_multivector(&self, basis: &AdaptedBasis) -> Mv {
        let t = basis.element(&[1, 2]).scale(&self.a3);
        let u = basis.element(&[2, 3]).scale(&self.a1);
        let v = basis.element(&[3, 1]).scale(&self.a2);
        &(&t + &u) + &v
    }
}

/// σ² = -1 and [n, σ] = 0.
pub fn sigma_validate(sigma: &SigmaElement, basis: &AdaptedBasis) -> bool {
    let s = sigma.to_multivector(basis);
    s.gp(&s) == -&Mv::one(Signature::spacetime()) && basis.n().commutator(&s).is_zero()
}

fn frame_derivative(psi: &Field, f: &Mv) -> Field {
    let sig = psi.signature();
    (0..sig.dim()).fold(Field::zero(sig), |acc, mu| {
        let c = f.coefficient(crate::algebra::Blade::basis(mu));
        if c.is_zero() {
            acc
        } else {
            let d = field_partial(psi, mu).expect("index below dimension");
            &acc + &d.scale_rational(&c)
        }
    })
}

fn dirac_field(psi: &Field) -> Field {
    let sig = psi.signature();
    (0..sig.dim()).fold(Field::zero(sig), |acc, mu| {
        &acc + &coframe(sig, mu).gp(&field_partial(psi, mu).expect("index below dimension"))
    })
}

/// ∂ψe₁e₂ - mψe₀ for ψ in the even subalgebra.
pub fn dirac_hestenes_residual(psi: &Field, m: &Rational) -> Result<Field> {
    if !psi.is_even() {
        return Err(Error::NotEven);
    }
    let sig = psi.signature();
    let e12 = lift(&Mv::blade(sig, &[1, 2]));
    let e0 = lift(&Mv::basis(sig, 0));
    Ok(&dirac_field(psi).gp(&e12) - &psi.gp(&e0).scale_rational(m))
}

/// Residuals of the general form ∂̆ψσ + mψn and of the split form
/// n^k∂_kψ + ∂_nψ̂ - mψσ, and the relation between them.
#[derive(Clone, Debug)]
pub struct DiracResiduals {
    pub general: Field,
    pub split: Field,
    /// split = -general · n · σ.
    pub relation: IdentityRecord,
}

/// π∥(∂)ψ + π⊥(∂)ψ with n^k∂_k = Σ_k (n^k)⁻¹ ∂_{n^k}.
fn split_dirac_parts(basis: &AdaptedBasis, psi: &Field) -> (Field, Field) {
    let sig = psi.signature();
    let spatial = (1..4).fold(Field::zero(sig), |acc, k| {
        let f = &basis.frame[k];
        &acc + &lift(&f.negate()).gp(&frame_derivative(psi, f))
    });
    let temporal = lift(basis.n()).gp(&frame_derivative(psi, basis.n()));
    (spatial, temporal)
}

pub fn general_dirac_residual(
    psi: &Field,
    sigma: &SigmaElement,
    basis: &AdaptedBasis,
    m: &Rational,
) -> Result<DiracResiduals> {
    if !sigma_validate(sigma, basis) {
        return Err(Error::BadSigma);
    }
    let n = basis.splitting_field();
    if !n.orthogonal(psi).is_zero() {
        return Err(Error::NotEven);
    }
    let nf = lift(basis.n());
    let sf = lift(&sigma.to_multivector(basis));
    let dpsi = dirac_field(psi);
    let s = n.project(&dpsi);
    let breve = &s.parallel.gp(&nf) + &s.orthogonal;
    let general = &breve.gp(&sf) + &psi.gp(&nf).scale_rational(m);
    let (spatial, _) = split_dirac_parts(basis, psi);
    let d_n = frame_derivative(&psi.grade_involution(), basis.n());
    let split = &(&spatial + &d_n) - &psi.gp(&sf).scale_rational(m);
    let relation = IdentityRecord::new(
        "general_split_relation",
        "n^k∂_kψ + ∂_nψ̂ - mψσ = -(∂̆ψσ + mψn)nσ",
        psi.homogeneous_grade().unwrap_or(0),
        &split,
        &general.gp(&nf).gp(&sf).negate(),
    );
    Ok(DiracResiduals {
        general,
        split,
        relation,
    })
}

/// Compares the Hestenes residual with the split residual for n = e⁰ and
/// σ = e¹², through DH(ψ) = R(ψ)σ. The two agree only on static massless
/// fields; the record says which.
pub fn hestenes_reduction(psi: &Field, m: &Rational) -> Result<IdentityRecord> {
    let basis = AdaptedBasis::standard();
    let dh = dirac_hestenes_residual(psi, m)?;
    let sf = lift(&basis.element(&[1, 2]));
    let (spatial, _) = split_dirac_parts(&basis, psi);
    let d_n = frame_derivative(&psi.grade_involution(), basis.n());
    let split = &(&spatial + &d_n) - &psi.gp(&sf).scale_rational(m);
    Ok(IdentityRecord::new(
        "hestenes_reduction",
        "∂ψe₁e₂ - mψe₀ = (n^k∂_kψ + ∂_nψ̂ - mψσ)σ, n = e⁰, σ = e¹²",
        psi.homogeneous_grade().unwrap_or(0),
        &dh,
        &split.gp(&sf),
    ))
}

/// π∥(∂)ψ = Σ γ∥^μ∂_μψ and π⊥(∂)ψ = Σ n n^μ∂_μψ.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectedDirac {
    pub parallel: Field,
    pub orthogonal: Field,
}

pub fn projected_dirac_operator(n: &SplittingField, psi: &Field) -> ProjectedDirac {
    let sig = psi.signature();
    let mut parallel = Field::zero(sig);
    let mut orthogonal = Field::zero(sig);
    for mu in 0..sig.dim() {
        let d = field_partial(psi, mu).expect("index below dimension");
        if d.is_zero() {
            continue;
        }
        parallel = &parallel + &n.parallel_coframe(mu).gp(&d);
        orthogonal = &orthogonal + &n.n().scale(n.component(mu)).gp(&d);
    }
    ProjectedDirac { parallel, orthogonal }
}

impl ProjectedDirac {
    pub fn reconstructs(&self, psi: &Field) -> bool {
        &self.parallel + &self.orthogonal == dirac_field(psi)
    }
}

/// Spinor field with polynomial coefficients realized in the given frame.
pub fn spinor_field(coefficients: [RationalFunction; 8], basis: &AdaptedBasis) -> Field {
    Spinor::new(coefficients).to_multivector(basis)
}
