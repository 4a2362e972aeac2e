use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;

use cliffsplit::algebra::{blade_product, Blade, Mv, Signature};
use cliffsplit::calculus::{codifferential, differential};
use cliffsplit::grading::{project_contraction_form, Grading, SignMode};
use cliffsplit::hodge::{dual_alpha, hodge_inverse, hodge_star, Orientation};
use cliffsplit::scalars::{gcd, Polynomial, Rational, RationalFunction, Scalar};
use cliffsplit::verify::random::{self, Rng8};

const SIGNATURES: [(usize, usize); 4] = [(1, 3), (3, 0), (2, 2), (0, 3)];

fn signature() -> impl Strategy<Value = Signature> {
    prop::sample::select(SIGNATURES.to_vec()).prop_map(|(p, q)| Signature::new(p, q).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn multivector(sig: Signature) -> impl Strategy<Value = Mv> {
    prop::collection::vec(prop::option::weighted(0.5, small_rational()), sig.blade_count()).prop_map(move |cs| {
        let terms = Blade::all(sig)
            .into_iter()
            .zip(cs)
            .filter_map(|(b, c)| c.map(|c| (b, c)));
        Mv::from_terms(sig, terms.collect::<Vec<_>>())
    })
}

fn sig_and(count: usize) -> impl Strategy<Value = (Signature, Vec<Mv>)> {
    signature().prop_flat_map(move |sig| (Just(sig), prop::collection::vec(multivector(sig), count)))
}

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numerator(), r.denominator())
}

/// Blade product by bubble sort over the concatenated index list.
fn bubble_product(sig: Signature, a: Blade, b: Blade) -> (i32, Blade) {
    let mut idx: Vec<usize> = a.indices().chain(b.indices()).collect();
    let mut sign = 1;
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 1..idx.len() {
            if idx[i - 1] > idx[i] {
                idx.swap(i - 1, i);
                sign = -sign;
                sorted = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < idx.len() {
        if i + 1 < idx.len() && idx[i] == idx[i + 1] {
            sign *= sig.square(idx[i]);
            i += 2;
        } else {
            out.push(idx[i]);
            i += 1;
        }
    }
    (sign, Blade::from_indices(&out))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_matches_bigrational(a in any::<i64>(), b in 1i64..=i64::MAX, c in any::<i64>(), d in 1i64..=i64::MAX) {
        let x = Rational::new(a, b).unwrap();
        let y = Rational::new(c, d).unwrap();
        let bx = BigRational::new(BigInt::from(a), BigInt::from(b));
        let by = BigRational::new(BigInt::from(c), BigInt::from(d));
        prop_assert_eq!(big(&(&x + &y)), &bx + &by);
        prop_assert_eq!(big(&(&x - &y)), &bx - &by);
        prop_assert_eq!(big(&(&x * &y)), &bx * &by);
        prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        if c != 0 {
            prop_assert_eq!(big(&x.checked_div(&y).unwrap()), &bx / &by);
        }
        let round: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(round, x);
    }

    #[test]
    fn blade_product_matches_bubble_sort(a in 0u32..256, b in 0u32..256, pq in 0usize..=8) {
        let sig = Signature::new(pq, 8 - pq).unwrap();
        let (a, b) = (Blade::from_mask(a), Blade::from_mask(b));
        prop_assert_eq!(blade_product(sig, a, b), bubble_product(sig, a, b));
    }

    #[test]
    fn geometric_product_is_associative((_, m) in sig_and(3)) {
        let (a, b, c) = (&m[0], &m[1], &m[2]);
        prop_assert_eq!(a.gp(b).gp(c), a.gp(&b.gp(c)));
        prop_assert_eq!(a.gp(&(b + c)), &a.gp(b) + &a.gp(c));
    }

    #[test]
    fn involutions((_, m) in sig_and(2)) {
        let (a, b) = (&m[0], &m[1]);
        prop_assert_eq!(a.gp(b).reverse(), b.reverse().gp(&a.reverse()));
        prop_assert_eq!(a.gp(b).grade_involution(), a.grade_involution().gp(&b.grade_involution()));
        prop_assert_eq!(a.reverse().reverse(), a.clone());
    }

    #[test]
    fn metric_is_symmetric_and_matches_scalar_product((_, m) in sig_and(2)) {
        let (a, b) = (&m[0], &m[1]);
        prop_assert_eq!(a.metric(b), b.metric(a));
        prop_assert_eq!(a.metric(b), a.reverse().gp(b).scalar_part());
    }

    #[test]
    fn projector_algebra((sig, m) in sig_and(1), seed in any::<u64>()) {
        let psi = &m[0];
        let mut rng = Rng8::seed_from_u64(seed);
        let n = random::any_unit_vector(sig, &mut rng);
        let g = Grading::vector(&n).unwrap();
        let s = g.project(psi).unwrap();
        prop_assert_eq!(&s.parallel + &s.orthogonal, psi.clone());
        prop_assert_eq!(g.parallel(&s.parallel).unwrap(), s.parallel.clone());
        prop_assert!(g.parallel(&s.orthogonal).unwrap().is_zero());
        prop_assert_eq!(project_contraction_form(&n, psi).unwrap(), s);
    }

    #[test]
    fn alpha_is_an_involutive_automorphism((sig, m) in sig_and(2), seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let phi = random::nonzero_multivector(sig, &mut rng);
        let Ok(g) = Grading::general(&phi, SignMode::PlainSandwich) else {
            return Ok(());
        };
        let (a, b) = (&m[0], &m[1]);
        prop_assert_eq!(g.alpha(&a.gp(b)), g.alpha(a).gp(&g.alpha(b)));
        if g.is_involutive() {
            prop_assert_eq!(g.alpha(&g.alpha(a)), a.clone());
        }
        let scaled = Grading::general(&phi.scale(&Rational::new(-7, 3).unwrap()), SignMode::PlainSandwich).unwrap();
        prop_assert_eq!(scaled.alpha(a), g.alpha(a));
    }

    #[test]
    fn hodge_star_is_invertible_and_alpha_has_two_routes((sig, m) in sig_and(1), seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let n = random::any_unit_vector(sig, &mut rng);
        let o = Orientation::new(&n).unwrap();
        let psi = &m[0];
        prop_assert_eq!(hodge_inverse(&hodge_star(psi, &o), &o), psi.clone());
        prop_assert_eq!(dual_alpha(psi, &o), o.grading().alpha(psi));
    }

    #[test]
    fn polynomial_gcd_divides_and_leibniz(seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let live = [0, 1, 2, 3];
        let f = random::polynomial(4, &live, 2, &mut rng);
        let a = random::polynomial(4, &live, 2, &mut rng);
        let b = random::polynomial(4, &live, 2, &mut rng);
        let (fa, fb) = (f.mul(&a), f.mul(&b));
        let g = gcd(&fa, &fb);
        prop_assert!(fa.div_exact(&g).is_some());
        prop_assert!(fb.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&f).is_some());
        for v in 0..4 {
            let lhs = fa.partial_derivative(v).unwrap();
            let rhs = f.partial_derivative(v).unwrap().mul(&a).add(&f.mul(&a.partial_derivative(v).unwrap()));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rational_functions_are_canonical(seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let live = [0, 1, 2, 3];
        let p = random::polynomial(4, &live, 2, &mut rng);
        let q = random::polynomial(4, &live, 2, &mut rng);
        let r = random::polynomial(4, &live, 2, &mut rng);
        let x = RationalFunction::new(p.mul(&r), q.mul(&r)).unwrap();
        let y = RationalFunction::new(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(RationalFunction::new(x.numerator().clone(), x.denominator().clone()).unwrap(), x.clone());
        let back = x.checked_div(&y).unwrap();
        prop_assert!(back.is_one());
        let z = RationalFunction::new(r.clone(), Polynomial::one(4).add(&r.mul(&r))).unwrap();
        prop_assert_eq!(x.add(&z).sub(&z), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>()) {
        let mut rng = Rng8::seed_from_u64(seed);
        let sig = Signature::spacetime();
        let psi = random::field(sig, 3, &mut rng);
        prop_assert!(differential(&differential(&psi)).is_zero());
        prop_assert!(codifferential(&codifferential(&psi)).is_zero());
    }
}
