//! Published k-vectorial grading tables of Cl(1,3), stored as pattern rows.
//!
//! Letters `i`, `j`, `k` stand for distinct spatial indices in {1,2,3} and
//! `m`, `n`, `s` (μ, ν, σ) for distinct indices in {0,1,2,3}. A blade such
//! as `e0ij` means the product e0 ei ej in the written order, so a row
//! stands for every injective assignment of its letters.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    Bivectorial,
    Trivectorial,
    Tetravectorial,
}

impl TableKind {
    pub const ALL: [TableKind; 3] = [
        TableKind::Bivectorial,
        TableKind::Trivectorial,
        TableKind::Tetravectorial,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TableKind::Bivectorial => "bivectorial",
            TableKind::Trivectorial => "trivectorial",
            TableKind::Tetravectorial => "tetravectorial",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        TableKind::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn fixtures(&self) -> Vec<FixtureRow> {
        let rows: &[(&str, [&str; 5])] = match self {
            TableKind::Bivectorial => BIVECTORIAL,
            TableKind::Trivectorial => TRIVECTORIAL,
            TableKind::Tetravectorial => TETRAVECTORIAL,
        };
        rows.iter()
            .map(|(section, [psi, phi, alpha, par, perp])| FixtureRow {
                kind: *self,
                section,
                psi,
                phi,
                alpha,
                parallel: par,
                orthogonal: perp,
            })
            .collect()
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One published row: ψ, φ, α(ψ), π∥(ψ), π⊥(ψ) as pattern text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixtureRow {
    pub kind: TableKind,
    pub section: &'static str,
    pub psi: &'static str,
    pub phi: &'static str,
    pub alpha: &'static str,
    pub parallel: &'static str,
    pub orthogonal: &'static str,
}

const LATIN: [char; 3] = ['i', 'j', 'k'];
const GREEK: [char; 3] = ['m', 'n', 's'];

/// Letter assignment for one instance of a pattern row.
pub type Assignment = Vec<(char, usize)>;

impl FixtureRow {
    fn letters(&self) -> (Vec<char>, Vec<char>) {
        let text: String = [self.psi, self.phi, self.alpha, self.parallel, self.orthogonal].concat();
        let latin = LATIN.iter().copied().filter(|c| text.contains(*c)).collect();
        let greek = GREEK.iter().copied().filter(|c| text.contains(*c)).collect();
        (latin, greek)
    }

    /// Every injective assignment of the row's letters, in lexicographic
    /// order.
    pub fn assignments(&self) -> Vec<Assignment> {
        let (latin, greek) = self.letters();
        let mut out = Vec::new();
        for l in injective(&latin, &[1, 2, 3]) {
            for g in injective(&greek, &[0, 1, 2, 3]) {
                out.push(l.iter().chain(g.iter()).copied().collect());
            }
        }
        out
    }

    /// The five columns with letters replaced by digits.
    pub fn instantiate(&self, a: &Assignment) -> [String; 5] {
        [self.psi, self.phi, self.alpha, self.parallel, self.orthogonal].map(|t| substitute(t, a))
    }
}

pub fn substitute(text: &str, a: &Assignment) -> String {
    text.chars()
        .map(|c| match a.iter().find(|(l, _)| *l == c) {
            Some((_, d)) => char::from_digit(*d as u32, 10).expect("single digit"),
            None => c,
        })
        .collect()
}

pub fn describe(a: &Assignment) -> String {
    let greek = |c: char| match c {
        'm' => "mu",
        'n' => "nu",
        's' => "sigma",
        _ => "",
    };
    a.iter()
        .map(|(c, d)| {
            let name = greek(*c);
            if name.is_empty() {
                format!("{c}={d}")
            } else {
                format!("{name}={d}")
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn injective(letters: &[char], domain: &[usize]) -> Vec<Vec<(char, usize)>> {
    match letters.split_first() {
        None => vec![vec![]],
        Some((first, rest)) => {
            let mut out = Vec::new();
            for &d in domain {
                let remaining: Vec<usize> = domain.iter().copied().filter(|&x| x != d).collect();
                for mut tail in injective(rest, &remaining) {
                    tail.insert(0, (*first, d));
                    out.push(tail);
                }
            }
            out
        }
    }
}

const BIVECTORIAL: &[(&str, [&str; 5])] = &[
    ("a", ["e0", "e0j", "-e0", "0", "e0"]),
    ("a", ["e0", "eij", "e0", "e0", "0"]),
    ("a", ["ei", "e0j", "ei", "ei", "0"]),
    ("a", ["ei", "eik", "-ei", "0", "ei"]),
    ("a", ["ei", "e0i", "-ei", "0", "ei"]),
    ("a", ["ei", "ejk", "ei", "ei", "0"]),
    ("b", ["e0i", "e0j", "-e0i", "0", "e0i"]),
    ("b", ["e0i", "eij", "-e0i", "0", "e0i"]),
    ("b", ["e0i", "ejk", "e0i", "e0i", "0"]),
    ("b", ["eij", "e0i", "-eij", "0", "eij"]),
    ("b", ["eij", "e0k", "eij", "eij", "0"]),
    ("b", ["eij", "eik", "-eij", "0", "eij"]),
    ("c", ["e0ij", "e0j", "e0ij", "e0ij", "0"]),
    ("c", ["e0ij", "eij", "e0i", "e0ij", "0"]),
    ("c", ["e0ij", "ejk", "-e0ij", "0", "e0ij"]),
    ("c", ["e123", "e0i", "-e123", "0", "e123"]),
    ("c", ["e123", "eij", "e123", "e123", "0"]),
    ("d", ["e0123", "emn", "e0123", "e0123", "0"]),
];

const TRIVECTORIAL: &[(&str, [&str; 5])] = &[
    ("a", ["e0", "e0ij", "e0", "e0", "0"]),
    ("a", ["e0", "e123", "-e0", "0", "e0"]),
    ("a", ["ei", "e0ij", "ei", "ei", "0"]),
    ("a", ["ei", "e0jk", "-ei", "0", "ei"]),
    ("a", ["ei", "e123", "ei", "ei", "0"]),
    ("b", ["e0i", "e0ij", "e0i", "e0i", "0"]),
    ("b", ["e0i", "e123", "-e0i", "0", "e0i"]),
    ("b", ["eij", "e0ij", "eij", "eij", "0"]),
    ("b", ["eij", "e0ik", "-eij", "0", "eij"]),
    ("b", ["eij", "e123", "eij", "eij", "0"]),
    ("c", ["e0ij", "e0ik", "e0ij", "e0ij", "0"]),
    ("c", ["e0ij", "e123", "-e0ij", "0", "e0ij"]),
    ("c", ["e123", "e0ij", "-e123", "0", "-e123"]),
    ("d", ["e0123", "emns", "-e0123", "0", "e0123"]),
];

const TETRAVECTORIAL: &[(&str, [&str; 5])] = &[
    ("-", ["em", "e0123", "-em", "0", "em"]),
    ("-", ["emn", "e0123", "emn", "emn", "0"]),
    ("-", ["emns", "e0123", "-emns", "0", "emns"]),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        assert_eq!(TableKind::Bivectorial.fixtures().len(), 18);
        assert_eq!(TableKind::Trivectorial.fixtures().len(), 14);
        assert_eq!(TableKind::Tetravectorial.fixtures().len(), 3);
    }

    #[test]
    fn expansion() {
        let rows = TableKind::Bivectorial.fixtures();
        // (e0ij, ejk): three distinct spatial letters, 3! assignments.
        assert_eq!(rows[14].assignments().len(), 6);
        // (e0, e0j): one letter.
        assert_eq!(rows[0].assignments().len(), 3);
        let a = rows[14].assignments()[0].clone();
        assert_eq!(rows[14].instantiate(&a)[0], "e012");
        let tet = TableKind::Tetravectorial.fixtures();
        assert_eq!(tet[2].assignments().len(), 24);
    }
}
