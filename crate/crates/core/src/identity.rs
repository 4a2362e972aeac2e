//! Residual records for identity checks that are reported, not asserted.

use serde::Serialize;

use crate::algebra::Multivector;
use crate::scalars::Scalar;

/// Both sides of one identity evaluated on one grade of the input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityRecord {
    pub identity_id: &'static str,
    pub formula: &'static str,
    pub grade: usize,
    /// Coordinate index for identities stated per direction μ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub matches: bool,
}

impl IdentityRecord {
    pub fn new<S: Scalar>(
        identity_id: &'static str,
        formula: &'static str,
        grade: usize,
        lhs: &Multivector<S>,
        rhs: &Multivector<S>,
    ) -> Self {
        let residual = lhs - rhs;
        IdentityRecord {
            identity_id,
            formula,
            grade,
            index: None,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            matches: residual.is_zero(),
            residual: residual.to_string(),
        }
    }

    pub fn at(mut self, index: usize) -> Self {
        self.index = Some(index);
        self
    }
}

/// True when every record matches.
pub fn all_match(records: &[IdentityRecord]) -> bool {
    records.iter().all(|r| r.matches)
}

/// Records of `id` that do not match.
pub fn failures<'a>(records: &'a [IdentityRecord], id: &str) -> Vec<&'a IdentityRecord> {
    records.iter().filter(|r| r.identity_id == id && !r.matches).collect()
}
