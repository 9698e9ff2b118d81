//! Outcome records for families of exact identities.

use serde::Serialize;

use crate::gamma_form::display_residual;
use crate::numerics::{ExactScalar, Poly, QPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationOutcome {
    pub relation: String,
    pub n: usize,
    pub holds: bool,
    /// Nonzero residual, present only when the identity fails.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub outcomes: Vec<RelationOutcome>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome> {
        self.outcomes.iter().filter(|o| !o.holds)
    }

    pub fn extend(&mut self, other: RelationReport) {
        self.outcomes.extend(other.outcomes);
    }

    pub(crate) fn push_scalar_residual(&mut self, relation: &str, n: usize, r: &Poly<ExactScalar>) {
        self.outcomes.push(RelationOutcome {
            relation: relation.to_string(),
            n,
            holds: r.is_zero(),
            residual: (!r.is_zero()).then(|| display_residual(r)),
        });
    }

    pub(crate) fn push_poly_residual(&mut self, relation: &str, n: usize, r: &QPoly) {
        self.outcomes.push(RelationOutcome {
            relation: relation.to_string(),
            n,
            holds: r.is_zero(),
            residual: (!r.is_zero()).then(|| r.to_string()),
        });
    }
}
