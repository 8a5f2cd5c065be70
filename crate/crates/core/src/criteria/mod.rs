//! Decision procedures for regularity, the aCM property, and the cohomological
//! splitting criteria.

mod acm;
mod regularity;
mod split;

pub use acm::{acm_closed_form_line, is_acm};
pub use regularity::{balanced_regularity, is_regular_at, regularity_failures, RegularityResult};
pub use split::{
    condition, shape_match, verify_criterion, ConditionOutcome, Criterion, CriterionReport,
    ShapeCertificate, ShapeMatch, SummandKind, UnitClass,
};

use crate::quantifier::Witness;

/// A yes/no answer with the first counterexample when the answer is no.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub(crate) fn from_witness(witness: Option<Witness>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Deterministic witness order: degree, then `k`, then `t`, then the rest.
pub(crate) fn sort_witnesses(ws: &mut [Witness]) {
    ws.sort_by(|a, b| {
        (a.degree, &a.k, a.t, &a.q, a.atom_index).cmp(&(b.degree, &b.k, b.t, &b.q, b.atom_index))
    });
}
