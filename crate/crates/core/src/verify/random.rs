//! Seeded generators for multivectors, unit splitters, polynomial fields,
//! versors and σ elements.
//!
//! Coefficients are nonzero with probability ½; a nonzero coefficient has
//! numerator uniform in [-9, 9] \ {0} and denominator uniform in [1, 9].

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Blade, Mv, Signature};
use crate::calculus::Field;
use crate::dirac::SigmaElement;
use crate::grading::Versor;
use crate::scalars::{Monomial, Polynomial, Rational, RationalFunction, Scalar, DEFAULT_VARS};

pub type Rng8 = ChaCha8Rng;

pub fn nonzero_rational(rng: &mut Rng8) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9..=9);
    }
    Rational::new(n, rng.gen_range(1..=9)).expect("denominator is positive")
}

pub fn coefficient(rng: &mut Rng8) -> Rational {
    if rng.gen_bool(0.5) {
        nonzero_rational(rng)
    } else {
        Rational::zero()
    }
}

pub fn multivector(sig: Signature, rng: &mut Rng8) -> Mv {
    Mv::from_terms(sig, Blade::all(sig).into_iter().map(|b| (b, coefficient(rng))))
}

/// A random multivector that is not zero.
pub fn nonzero_multivector(sig: Signature, rng: &mut Rng8) -> Mv {
    loop {
        let m = multivector(sig, rng);
        if !m.is_zero() {
            return m;
        }
    }
}

pub fn vector(sig: Signature, rng: &mut Rng8) -> Mv {
    let comps: Vec<Rational> = (0..sig.dim()).map(|_| coefficient(rng)).collect();
    Mv::vector(sig, &comps)
}

/// Unit 1-form with n² = `square`: a basis vector of that square reflected
/// through a random non-null u, n = -u e u / u².
pub fn unit_vector(sig: Signature, square: i32, rng: &mut Rng8) -> Option<Mv> {
    let axes: Vec<usize> = (0..sig.dim()).filter(|&i| sig.square(i) == square).collect();
    if axes.is_empty() {
        return None;
    }
    let e = Mv::basis(sig, axes[rng.gen_range(0..axes.len())]);
    loop {
        let u = vector(sig, rng);
        let uu = u.gp(&u).scalar_part();
        if uu.is_zero() {
            continue;
        }
        let n = u.gp(&e).gp(&u).negate();
        return Some(n.div_scalar(&uu).expect("u² is nonzero"));
    }
}

/// Unit 1-form of either square the signature allows.
pub fn any_unit_vector(sig: Signature, rng: &mut Rng8) -> Mv {
    let square = match (sig.p(), sig.q()) {
        (0, _) => -1,
        (_, 0) => 1,
        _ if rng.gen_bool(0.5) => 1,
        _ => -1,
    };
    unit_vector(sig, square, rng).expect("an axis of this square exists")
}

pub fn field_vars(sig: Signature) -> usize {
    DEFAULT_VARS.max(sig.dim())
}

/// One to three terms of total degree at most `degree` in the first `live`
/// coordinates.
pub fn polynomial(vars: usize, live: &[usize], degree: u32, rng: &mut Rng8) -> Polynomial {
    let count = rng.gen_range(1..=3);
    let terms = (0..count).map(|_| {
        let mut exps = vec![0u16; vars];
        if !live.is_empty() {
            for _ in 0..rng.gen_range(0..=degree) {
                exps[live[rng.gen_range(0..live.len())]] += 1;
            }
        }
        (Monomial::from_exponents(&exps), nonzero_rational(rng))
    });
    Polynomial::from_terms(vars, terms.collect::<Vec<_>>())
}

fn field_over(sig: Signature, blades: &[Blade], live: &[usize], degree: u32, rng: &mut Rng8) -> Field {
    let vars = field_vars(sig);
    loop {
        let mut terms = Vec::new();
        for &b in blades {
            if rng.gen_bool(0.5) {
                terms.push((
                    b,
                    RationalFunction::from_polynomial(polynomial(vars, live, degree, rng)),
                ));
            }
        }
        let f = Field::from_terms(sig, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

fn all_coordinates(sig: Signature) -> Vec<usize> {
    (0..sig.dim()).collect()
}

/// Nonzero polynomial field of total degree at most `degree`.
pub fn field(sig: Signature, degree: u32, rng: &mut Rng8) -> Field {
    field_over(sig, &Blade::all(sig), &all_coordinates(sig), degree, rng)
}

pub fn homogeneous_field(sig: Signature, grade: usize, degree: u32, rng: &mut Rng8) -> Field {
    field_over(sig, &Blade::of_grade(sig, grade), &all_coordinates(sig), degree, rng)
}

/// Even field; with `static_only` it does not depend on x0.
pub fn even_field(sig: Signature, degree: u32, static_only: bool, rng: &mut Rng8) -> Field {
    let blades: Vec<Blade> = Blade::all(sig).into_iter().filter(|b| b.grade() % 2 == 0).collect();
    let live: Vec<usize> = all_coordinates(sig)
        .into_iter()
        .filter(|&i| !static_only || i != 0)
        .collect();
    field_over(sig, &blades, &live, degree, rng)
}

pub fn polynomial_coefficients(sig: Signature, degree: u32, rng: &mut Rng8) -> [RationalFunction; 8] {
    let vars = field_vars(sig);
    let live = all_coordinates(sig);
    std::array::from_fn(|_| {
        if rng.gen_bool(0.5) {
            RationalFunction::from_polynomial(polynomial(vars, &live, degree, rng))
        } else {
            RationalFunction::zero()
        }
    })
}

pub fn rational_coefficients(rng: &mut Rng8) -> [Rational; 8] {
    std::array::from_fn(|_| coefficient(rng))
}

/// (x, y, z) with x² + y² = z².
const TRIPLES: [(i64, i64, i64); 4] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25)];

fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

/// Product of one to three rational boosts and rotations in Cl(1,3). A
/// boost in the 0i plane is (z + x e0i)/y, since z² - x² = y²; a rotation
/// in the ij plane is (x + y eij)/z.
pub fn lorentz_versor(rng: &mut Rng8) -> Versor<Rational> {
    let sig = Signature::spacetime();
    let mut l = Mv::one(sig);
    for _ in 0..rng.gen_range(1..=3) {
        let (mut x, mut y, z) = TRIPLES[rng.gen_range(0..TRIPLES.len())];
        if rng.gen_bool(0.5) {
            std::mem::swap(&mut x, &mut y);
        }
        let s = if rng.gen_bool(0.5) { 1 } else { -1 };
        let factor = if rng.gen_bool(0.5) {
            let i = rng.gen_range(1..4);
            let plane = Mv::blade(sig, &[0, i]).scale_rational(&rational(s * x, y));
            &Mv::scalar(sig, rational(z, y)) + &plane
        } else {
            let (i, j) = [(1, 2), (2, 3), (1, 3)][rng.gen_range(0..3)];
            let plane = Mv::blade(sig, &[i, j]).scale_rational(&rational(s * y, z));
            &Mv::scalar(sig, rational(x, z)) + &plane
        };
        l = l.gp(&factor);
    }
    Versor::new(l).expect("products of unit rotors are versors")
}

/// σ with a₁² + a₂² + a₃² = 1, from signed permutations of rational points
/// on the unit sphere.
pub fn unit_sigma(rng: &mut Rng8) -> SigmaElement {
    const POINTS: [(i64, i64, i64, i64); 4] = [(1, 0, 0, 1), (3, 4, 0, 5), (1, 2, 2, 3), (2, 3, 6, 7)];
    let (a, b, c, d) = POINTS[rng.gen_range(0..POINTS.len())];
    let mut v = [a, b, c];
    for i in (1..3).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    let mut comp = |x: i64| rational(if rng.gen_bool(0.5) { x } else { -x }, d);
    SigmaElement::new(comp(v[0]), comp(v[1]), comp(v[2]))
}

/// σ with arbitrary small rational coefficients.
pub fn any_sigma(rng: &mut Rng8) -> SigmaElement {
    SigmaElement::new(coefficient(rng), coefficient(rng), coefficient(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn unit_vectors_have_requested_square() {
        let mut rng = Rng8::seed_from_u64(3);
        for (p, q) in [(1, 3), (3, 0), (2, 2), (0, 3)] {
            let sig = Signature::new(p, q).unwrap();
            for _ in 0..20 {
                let n = any_unit_vector(sig, &mut rng);
                let sq = n.gp(&n);
                assert!(sq == Mv::one(sig) || sq == Mv::one(sig).negate(), "{n}");
            }
        }
        assert!(unit_vector(Signature::new(0, 3).unwrap(), 1, &mut rng).is_none());
    }

    #[test]
    fn versors_and_sigmas_are_normalized() {
        let mut rng = Rng8::seed_from_u64(5);
        for _ in 0..20 {
            let l = lorentz_versor(&mut rng);
            assert_eq!(l.element().gp(&l.element().reverse()), Mv::one(Signature::spacetime()));
            let s = unit_sigma(&mut rng);
            let sum = s.a1.mul(&s.a1).add(&s.a2.mul(&s.a2)).add(&s.a3.mul(&s.a3));
            assert!(sum.is_one());
        }
    }

    #[test]
    fn static_fields_ignore_time() {
        let mut rng = Rng8::seed_from_u64(9);
        let sig = Signature::spacetime();
        for _ in 0..20 {
            let f = even_field(sig, 3, true, &mut rng);
            assert!(f.is_even());
            assert!(crate::calculus::field_partial(&f, 0).unwrap().is_zero());
        }
    }
}
