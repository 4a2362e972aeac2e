use std::cmp::Ordering;
use std::fmt;

use super::signature::Signature;

/// Basis blade e^{i1 i2 ... ik} (ascending indices) stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    pub fn basis(i: usize) -> Self {
        Blade(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Blade(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn grade(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(&self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// All blades of the algebra in display order.
    pub fn all(sig: Signature) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..sig.blade_count() as u32).map(Blade).collect();
        v.sort();
        v
    }

    pub fn of_grade(sig: Signature, k: usize) -> Vec<Blade> {
        Blade::all(sig).into_iter().filter(|b| b.grade() == k).collect()
    }
}

/// Sign of the reordering needed to bring `a b` into ascending order.
pub fn reorder_sign(a: u32, b: u32) -> i32 {
    let mut swaps = 0;
    let mut a = a >> 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Geometric product of two basis blades: the sign and the resulting blade.
pub fn blade_product(sig: Signature, a: Blade, b: Blade) -> (i32, Blade) {
    let mut sign = reorder_sign(a.0, b.0);
    if (a.0 & b.0 & sig.negative_mask()).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Product of the metric diagonal over the blade's indices, i.e. e_A e_A~.
pub fn blade_norm(sig: Signature, a: Blade) -> i32 {
    if (a.0 & sig.negative_mask()).count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

impl Ord for Blade {
    /// Grade first, then lexicographic on the ascending index list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sta() -> Signature {
        Signature::new(1, 3).unwrap()
    }

    #[test]
    fn squares() {
        assert_eq!(
            blade_product(sta(), Blade::basis(0), Blade::basis(0)),
            (1, Blade::SCALAR)
        );
        assert_eq!(
            blade_product(sta(), Blade::basis(1), Blade::basis(1)),
            (-1, Blade::SCALAR)
        );
    }

    #[test]
    fn anticommute() {
        let e01 = Blade::from_indices(&[0, 1]);
        assert_eq!(blade_product(sta(), Blade::basis(0), Blade::basis(1)), (1, e01));
        assert_eq!(blade_product(sta(), Blade::basis(1), Blade::basis(0)), (-1, e01));
    }

    #[test]
    fn pseudoscalar_squares_to_minus_one() {
        let i = Blade::from_mask(0b1111);
        assert_eq!(blade_product(sta(), i, i), (-1, Blade::SCALAR));
    }

    #[test]
    fn display_order() {
        let names: Vec<String> = Blade::of_grade(sta(), 2).iter().map(|b| b.to_string()).collect();
        assert_eq!(names, ["e01", "e02", "e03", "e12", "e13", "e23"]);
        assert_eq!(Blade::SCALAR.to_string(), "1");
    }
}
