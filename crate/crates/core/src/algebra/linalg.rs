use super::blade::Blade;
use super::multivector::Multivector;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Solve `m x = rhs` by Gaussian elimination over the scalar field.
/// Returns `None` when the matrix is singular.
#[allow(clippy::needless_range_loop)]
pub fn solve<S: Scalar>(mut m: Vec<Vec<S>>, mut rhs: Vec<S>) -> Option<Vec<S>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let p = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].checked_div(&p).ok()?;
            for c in col..n {
                if m[col][c].is_zero() {
                    continue;
                }
                let t = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&t);
            }
            let t = f.mul(&rhs[col]);
            rhs[r] = rhs[r].sub(&t);
        }
    }
    (0..n).map(|i| rhs[i].checked_div(&m[i][i]).ok()).collect()
}

impl<S: Scalar> Multivector<S> {
    /// Two-sided inverse.
    ///
    /// Versors and blades take the fast path x = ã / (aã) (or the conjugate
    /// analogue); anything else is decided by solving a x = 1 on the full
    /// 2^(p+q)-dimensional space.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        if let Some(s) = self.as_scalar() {
            return Ok(Self::scalar(self.signature(), S::one().checked_div(&s)?));
        }
        for candidate in [self.reverse(), self.conjugate()] {
            if let Some(s) = self.gp(&candidate).as_scalar() {
                if !s.is_zero() {
                    return candidate.div_scalar(&s);
                }
            }
        }
        self.inverse_by_solve()
    }

    /// Inverse through the left-multiplication matrix alone.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse_by_solve(&self) -> Result<Self> {
        let sig = self.signature();
        let n = sig.blade_count();
        let mut matrix = vec![vec![S::zero(); n]; n];
        for col in 0..n {
            let image = self.gp(&Self::from_blade(sig, Blade::from_mask(col as u32), S::one()));
            for (b, c) in image.terms() {
                matrix[b.mask() as usize][col] = c.clone();
            }
        }
        let mut rhs = vec![S::zero(); n];
        rhs[0] = S::one();
        let x = solve(matrix, rhs).ok_or(Error::NotInvertible)?;
        Ok(Self::from_dense(sig, &x))
    }

    /// φ x φ⁻¹ with a precomputed inverse.
    pub fn sandwich(&self, x: &Self, inverse: &Self) -> Self {
        self.gp(x).gp(inverse)
    }
}
