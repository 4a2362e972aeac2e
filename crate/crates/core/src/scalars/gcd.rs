//! Multivariate polynomial GCD over the rationals by recursive
//! content / primitive-part decomposition with a primitive remainder
//! sequence in a chosen main variable.

use std::collections::BTreeMap;

use super::polynomial::{Monomial, Polynomial, MAX_VARS};
use super::rational::Rational;

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let vars = a.vars().max(b.vars());
    if a.is_zero() {
        return b.monic().with_vars(vars);
    }
    if b.is_zero() {
        return a.monic().with_vars(vars);
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(vars);
    }
    if a == b {
        return a.monic().with_vars(vars);
    }

    // Pull out the common monomial factor first; it is cheap and frequent.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let common = ma.common(&mb);
    let monomial_factor = Polynomial::from_terms(vars, [(common, Rational::one())]);
    if a.is_monomial() || b.is_monomial() {
        return monomial_factor;
    }
    let a = strip_monomial(a, &ma);
    let b = strip_monomial(b, &mb);
    let rest = gcd_no_monomial(&a, &b);
    monomial_factor.mul(&rest).monic().with_vars(vars)
}

fn strip_monomial(p: &Polynomial, m: &Monomial) -> Polynomial {
    if m.is_one() {
        return p.clone();
    }
    let divisor = Polynomial::from_terms(p.vars(), [(*m, Rational::one())]);
    p.div_exact(&divisor).expect("monomial content divides")
}

fn gcd_no_monomial(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let vars = a.vars().max(b.vars());
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(vars);
    }
    // Trial division catches the common case where one argument divides the
    // other without running a remainder sequence.
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.div_exact(small).is_some() {
        return small.monic();
    }
    if small.len() < large.len() && small.div_exact(large).is_some() {
        return large.monic();
    }

    let mask_a = a.var_mask();
    let mask_b = b.var_mask();
    if mask_a & mask_b == 0 {
        return Polynomial::one(vars);
    }
    // A univariate argument only needs univariate gcds with the other
    // argument's coefficients.
    if mask_b.count_ones() == 1 {
        return univariate_gcd_with(b, a, mask_b.trailing_zeros() as usize);
    }
    if mask_a.count_ones() == 1 {
        return univariate_gcd_with(a, b, mask_a.trailing_zeros() as usize);
    }
    // A variable occurring in only one argument cannot occur in the gcd, so
    // the gcd is that of the other argument with every coefficient in it.
    if let Some(v) = first_var(mask_a & !mask_b) {
        return gcd_with_coefficients(b, a, v);
    }
    if let Some(v) = first_var(mask_b & !mask_a) {
        return gcd_with_coefficients(a, b, v);
    }

    let v = main_variable(a, b, mask_a & mask_b);
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            return c.mul(&g).monic();
        }
        if r.degree_in(v) == 0 {
            return c.monic();
        }
        f = g;
        g = primitive_part(&r, v);
    }
}

fn first_var(mask: u32) -> Option<usize> {
    (0..MAX_VARS).find(|i| mask & (1 << i) != 0)
}

/// Shared variable with the smallest combined degree; keeps the remainder
/// sequence short.
fn main_variable(a: &Polynomial, b: &Polynomial, mask: u32) -> usize {
    (0..MAX_VARS)
        .filter(|i| mask & (1 << i) != 0)
        .min_by_key(|&i| (a.degree_in(i).max(b.degree_in(i)), i))
        .expect("nonempty mask")
}

/// Dense coefficients, lowest degree first, without trailing zeros.
type Dense = Vec<Rational>;

fn trim(mut d: Dense) -> Dense {
    while d.last().is_some_and(Rational::is_zero) {
        d.pop();
    }
    d
}

fn dense_monic(d: Dense) -> Dense {
    let inv = d.last().expect("nonzero").recip().expect("nonzero leading coefficient");
    d.iter().map(|c| c * &inv).collect()
}

fn dense_rem(mut f: Dense, g: &Dense) -> Dense {
    let dg = g.len() - 1;
    let lg = g[dg].recip().expect("nonzero leading coefficient");
    while f.len() > dg {
        let df = f.len() - 1;
        let q = &f[df] * &lg;
        if !q.is_zero() {
            for (i, c) in g.iter().enumerate() {
                let t = &f[df - dg + i] - &(&q * c);
                f[df - dg + i] = t;
            }
        }
        f.pop();
        f = trim(f);
    }
    f
}

fn dense_gcd(a: Dense, b: Dense) -> Dense {
    let (mut f, mut g) = (trim(a), trim(b));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let r = dense_rem(f, &g);
        f = g;
        g = r;
    }
    dense_monic(f)
}

/// gcd(u, p) for u univariate in `x_v`: the gcd of u with each coefficient
/// of p viewed as a polynomial in the other variables.
fn univariate_gcd_with(u: &Polynomial, p: &Polynomial, v: usize) -> Polynomial {
    let vars = u.vars().max(p.vars());
    let dense = |q: &Polynomial| -> Dense {
        let mut d = vec![Rational::zero(); q.degree_in(v) as usize + 1];
        for (m, c) in q.terms() {
            d[m.exponent(v) as usize] = c.clone();
        }
        d
    };
    let mut groups: BTreeMap<Monomial, Dense> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut exps = *m.exponents();
        let e = std::mem::take(&mut exps[v]) as usize;
        let d = groups.entry(Monomial::from_exponents(&exps)).or_default();
        if d.len() <= e {
            d.resize(e + 1, Rational::zero());
        }
        d[e] = c.clone();
    }
    let mut coeffs: Vec<Dense> = groups.into_values().collect();
    coeffs.sort_by_key(Vec::len);
    let mut acc = dense(u);
    for c in coeffs {
        acc = dense_gcd(acc, c);
        if acc.len() == 1 {
            return Polynomial::one(vars);
        }
    }
    let acc = dense_monic(trim(acc));
    Polynomial::from_terms(
        vars,
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mut e = [0u16; MAX_VARS];
                e[v] = i as u16;
                (Monomial::from_exponents(&e), c)
            })
            .collect::<Vec<_>>(),
    )
}

/// gcd(start, coefficients of `p` in `x_v`), stopping as soon as it is 1.
fn gcd_with_coefficients(start: &Polynomial, p: &Polynomial, v: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p.coefficients_in(v).into_values().collect();
    coeffs.sort_by_key(Polynomial::len);
    let mut acc = start.clone();
    for c in &coeffs {
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return Polynomial::one(p.vars());
        }
    }
    acc.monic()
}

/// Monic gcd of the coefficients of `p` viewed as a polynomial in `x_v`.
pub fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut coeffs: Vec<Polynomial> = p.coefficients_in(v).into_values().collect();
    // Start from the sparsest coefficient so the fold hits 1 early.
    coeffs.sort_by_key(Polynomial::len);
    let mut acc = Polynomial::zero(p.vars());
    for c in &coeffs {
        acc = gcd(&acc, c);
        if acc.is_constant() {
            return Polynomial::one(p.vars());
        }
    }
    acc
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").monic()
}

/// Lazy pseudo-remainder of `f` by `g` in the variable `x_v`.
fn pseudo_remainder(f: &Polynomial, g: &Polynomial, v: usize) -> Polynomial {
    let dg = g.degree_in(v);
    let lg = g.coefficient_in(v, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < dg {
            break;
        }
        let lr = r.coefficient_in(v, dr);
        r = r.mul(&lg).sub(&g.mul(&lr).shift_var(v, dr - dg));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(4, i).unwrap()
    }

    fn c(n: i64) -> Polynomial {
        Polynomial::constant(4, Rational::from_int(n))
    }

    #[test]
    fn difference_of_squares() {
        let a = x(1).pow(2).sub(&c(1));
        let b = x(1).sub(&c(1));
        assert_eq!(gcd(&a, &b), b);
    }

    #[test]
    fn coprime_is_one() {
        let a = x(0).add(&c(1));
        let b = x(0).sub(&c(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn multivariate_common_factor() {
        let f = x(0).mul(&x(1)).add(&x(2)).add(&c(3));
        let a = f.mul(&x(0).sub(&x(3)));
        let b = f.mul(&x(1).add(&x(2)).pow(2)).scale(&Rational::from_int(7));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn monomial_and_polynomial_parts() {
        let f = x(1).add(&c(2));
        let a = f.mul(&x(0).pow(2)).mul(&x(1));
        let b = f.mul(&x(0)).mul(&x(2));
        assert_eq!(gcd(&a, &b), f.mul(&x(0)).monic());
    }

    #[test]
    fn univariate_against_multivariate() {
        let u = c(1).sub(&x(1).pow(2)).pow(2);
        let w = c(1).sub(&x(1));
        let v = x(0).mul(&w).add(&x(2).mul(&w.pow(2)));
        assert_eq!(gcd(&u, &v), x(1).sub(&c(1)));
        assert_eq!(gcd(&v, &u), x(1).sub(&c(1)));
    }

    #[test]
    fn variable_in_one_argument_only() {
        let f = x(1).add(&x(2));
        let a = f.mul(&x(0).add(&c(1))).add(&f.mul(&x(3)).mul(&x(0)));
        let b = f.pow(2).add(&f.mul(&c(5)));
        assert_eq!(gcd(&a, &b), f.monic());
    }
}
