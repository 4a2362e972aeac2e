use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported dimension p + q.
pub const MAX_DIM: usize = 8;

/// Signature (p, q) of a diagonal metric: the first `p` basis 1-forms square
/// to +1 and the remaining `q` to -1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_DIM {
            return Err(Error::BadSignature { p, q, max: MAX_DIM });
        }
        Ok(Signature { p: p as u8, q: q as u8 })
    }

    /// Minkowski signature (+,-,-,-).
    pub fn spacetime() -> Self {
        Signature { p: 1, q: 3 }
    }

    pub fn p(&self) -> usize {
        self.p as usize
    }

    pub fn q(&self) -> usize {
        self.q as usize
    }

    pub fn dim(&self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, 2^(p+q).
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Metric diagonal entry g_{ii}.
    pub fn square(&self, i: usize) -> i32 {
        if i < self.p() {
            1
        } else {
            -1
        }
    }

    /// Bit mask of the basis 1-forms squaring to -1.
    pub fn negative_mask(&self) -> u32 {
        ((1u32 << self.dim()) - 1) & !((1u32 << self.p()) - 1)
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.dim()) - 1
    }

    pub fn check_same(&self, other: &Signature) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SignatureMismatch(self.p(), self.q(), other.p(), other.q()))
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Parses `p,q`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |pos: usize| Error::Parse {
            pos,
            msg: format!("expected signature `p,q`, got `{s}`"),
        };
        let (a, b) = s.split_once(',').ok_or(bad(0))?;
        let p = a.trim().parse().map_err(|_| bad(0))?;
        let q = b.trim().parse().map_err(|_| bad(a.len() + 1))?;
        Signature::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        let s = Signature::new(1, 3).unwrap();
        assert_eq!(s.negative_mask(), 0b1110);
        assert_eq!(s.full_mask(), 0b1111);
        assert_eq!(s.blade_count(), 16);
        assert_eq!(Signature::new(0, 3).unwrap().negative_mask(), 0b111);
    }

    #[test]
    fn cap() {
        assert!(Signature::new(5, 4).is_err());
        assert!(Signature::new(4, 4).is_ok());
    }

    #[test]
    fn parse() {
        assert_eq!("2,2".parse::<Signature>().unwrap(), Signature::new(2, 2).unwrap());
        assert!("2;2".parse::<Signature>().is_err());
    }
}
