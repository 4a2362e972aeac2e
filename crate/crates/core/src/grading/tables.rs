use serde::Serialize;
use serde_json::{json, Value};

use super::fixtures::{describe, substitute, Assignment, FixtureRow, TableKind};
use super::{Grading, SplitMultivector};
use crate::algebra::{Mv, Signature};

/// One recomputed table row. Computed columns are rendered in the same
/// pattern notation as the published row whenever the value is 0, ψ or -ψ
/// for every instance; otherwise the first instance is shown concretely.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub kind: String,
    pub section: String,
    pub psi: String,
    pub phi: String,
    pub alpha: String,
    pub parallel: String,
    pub orthogonal: String,
    pub published_alpha: String,
    pub published_parallel: String,
    pub published_orthogonal: String,
    pub matches_paper: bool,
    pub self_consistent: bool,
    pub instances: usize,
    /// First instance that disagrees with the published entry.
    pub mismatch: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub kinds: Vec<String>,
    pub rows: Vec<TableRow>,
}

struct Instance {
    assignment: Assignment,
    psi: Mv,
    alpha: Mv,
    split: SplitMultivector<crate::scalars::Rational>,
    published: [Mv; 3],
    consistent: bool,
}

fn parse(sig: Signature, text: &str) -> Mv {
    Mv::parse(sig, text).unwrap_or_else(|e| panic!("fixture `{text}`: {e}"))
}

fn evaluate(row: &FixtureRow, a: &Assignment) -> Instance {
    let sig = Signature::spacetime();
    let [psi, phi, alpha, par, perp] = row.instantiate(a);
    let psi = parse(sig, &psi);
    let phi = parse(sig, &phi);
    let g = Grading::k_form(&phi).expect("basis blades are invertible");
    let computed = g.alpha(&psi);
    let split = g.project(&psi).expect("blade gradings are involutive");
    let consistent =
        &split.parallel + &split.orthogonal == psi && g.alpha(&computed) == psi && &computed * &phi == &phi * &psi;
    Instance {
        assignment: a.clone(),
        psi,
        alpha: computed,
        split,
        published: [parse(sig, &alpha), parse(sig, &par), parse(sig, &perp)],
        consistent,
    }
}

fn render(values: &[&Mv], psis: &[&Mv], psi_pattern: &str, first: &Assignment) -> String {
    if values.iter().all(|v| v.is_zero()) {
        "0".into()
    } else if values.iter().zip(psis).all(|(v, p)| v == p) {
        psi_pattern.into()
    } else if values.iter().zip(psis).all(|(v, p)| **v == -*p) {
        format!("-{psi_pattern}")
    } else {
        format!("{} [{}]", values[0], describe(first))
    }
}

fn table_row(row: &FixtureRow) -> TableRow {
    let instances: Vec<Instance> = row.assignments().iter().map(|a| evaluate(row, a)).collect();
    let psis: Vec<&Mv> = instances.iter().map(|i| &i.psi).collect();
    let first = &instances[0].assignment;
    let col = |f: &dyn Fn(&Instance) -> &Mv| {
        let vals: Vec<&Mv> = instances.iter().map(f).collect();
        render(&vals, &psis, row.psi, first)
    };
    let mismatch = instances
        .iter()
        .find(|i| {
            i.alpha != i.published[0] || i.split.parallel != i.published[1] || i.split.orthogonal != i.published[2]
        })
        .map(|i| {
            format!(
                "{}: psi={} phi={} alpha={} (published {}), parallel={} (published {}), orthogonal={} (published {})",
                describe(&i.assignment),
                i.psi,
                substitute(row.phi, &i.assignment),
                i.alpha,
                i.published[0],
                i.split.parallel,
                i.published[1],
                i.split.orthogonal,
                i.published[2],
            )
        });
    TableRow {
        kind: row.kind.name().into(),
        section: row.section.into(),
        psi: row.psi.into(),
        phi: row.phi.into(),
        alpha: col(&|i| &i.alpha),
        parallel: col(&|i| &i.split.parallel),
        orthogonal: col(&|i| &i.split.orthogonal),
        published_alpha: row.alpha.into(),
        published_parallel: row.parallel.into(),
        published_orthogonal: row.orthogonal.into(),
        matches_paper: mismatch.is_none(),
        self_consistent: instances.iter().all(|i| i.consistent),
        instances: instances.len(),
        mismatch,
    }
}

/// Recompute the published k-vectorial grading tables of Cl(1,3) by direct
/// sandwich products, row by row.
pub fn generate_tables(kinds: &[TableKind]) -> Table {
    Table {
        kinds: kinds.iter().map(|k| k.name().to_string()).collect(),
        rows: kinds.iter().flat_map(|k| k.fixtures()).map(|r| table_row(&r)).collect(),
    }
}

impl Table {
    pub fn matches(&self) -> usize {
        self.rows.iter().filter(|r| r.matches_paper).count()
    }

    pub fn mismatches(&self) -> usize {
        self.rows.len() - self.matches()
    }

    pub fn self_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.self_consistent)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kinds": self.kinds,
            "rows": self.rows,
            "summary": {
                "rows": self.rows.len(),
                "matches_paper": self.matches(),
                "paper_mismatch": self.mismatches(),
                "self_consistent": self.self_consistent(),
            }
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        for kind in &self.kinds {
            out.push_str(&format!("## {kind}\n\n"));
            out.push_str("| | ψ | φ | α(ψ) | π∥(ψ) | π⊥(ψ) | matches_paper | published (α, π∥, π⊥) |\n");
            out.push_str("|---|---|---|---|---|---|---|---|\n");
            for r in self.rows.iter().filter(|r| &r.kind == kind) {
                let published = if r.matches_paper {
                    String::new()
                } else {
                    format!(
                        "{}, {}, {}",
                        r.published_alpha, r.published_parallel, r.published_orthogonal
                    )
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    r.section, r.psi, r.phi, r.alpha, r.parallel, r.orthogonal, r.matches_paper, published
                ));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "rows: {}, matches_paper: {}, paper_mismatch: {}, self_consistent: {}\n",
            self.rows.len(),
            self.matches(),
            self.mismatches(),
            self.self_consistent()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetravectorial_is_grade_involution() {
        let t = generate_tables(&[TableKind::Tetravectorial]);
        assert_eq!(t.rows.len(), 3);
        assert_eq!(t.mismatches(), 0);
        assert_eq!(t.rows[1].alpha, "emn");
        assert_eq!(t.rows[0].orthogonal, "em");
    }

    #[test]
    fn known_disagreements() {
        let t = generate_tables(&TableKind::ALL);
        assert!(t.self_consistent());
        let bad: Vec<(&str, &str, &str)> = t
            .rows
            .iter()
            .filter(|r| !r.matches_paper)
            .map(|r| (r.kind.as_str(), r.psi.as_str(), r.phi.as_str()))
            .collect();
        assert_eq!(
            bad,
            [
                ("bivectorial", "e0ij", "eij"),
                ("trivectorial", "e0ij", "e0ik"),
                ("trivectorial", "e123", "e0ij"),
            ]
        );
    }

    #[test]
    fn first_bivectorial_b_row() {
        let t = generate_tables(&[TableKind::Bivectorial]);
        let r = &t.rows[6];
        assert_eq!(
            (r.alpha.as_str(), r.parallel.as_str(), r.orthogonal.as_str()),
            ("-e0i", "0", "e0i")
        );
    }
}
