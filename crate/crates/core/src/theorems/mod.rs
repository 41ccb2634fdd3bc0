//! Hypothesis-gated numerical checks of identities and inequalities between
//! cones, polars, duals and their angles.
//!
//! Every check reports its hypotheses separately from its conclusion. When a
//! hypothesis fails the conclusion is [`Verdict::NotApplicable`], never a
//! failure, so counterexamples to dropped assumptions show up as such.
//!
//! Sums of polyhedral cones are closed, so set identities that would need a
//! closure in general are evaluated on the plain sum. Reports carry this in
//! their `notes`.

mod checks;
mod explore;
mod random;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

pub use checks::*;
pub use explore::{explore_open_question, gen_structured_pair, ExploreHit, ExploreSummary};
pub use random::{gen_random_cone, trial_rng, RandomConeParams};

use crate::cone::PolyhedralCone;
use crate::linalg::Vector;

/// Margin for strict hypotheses such as `c < 1`.
pub const HYPOTHESIS_MARGIN: f64 = 1e-9;

/// Closure note attached to reports involving sums of cones.
pub const CLOSURE_NOTE: &str =
    "sums of polyhedral cones are closed; closures are evaluated as plain sums";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub hypotheses: Vec<Hypothesis>,
    pub hypotheses_hold: bool,
    pub conclusion: Verdict,
    pub witness: BTreeMap<String, Value>,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem_id: &str, tolerance: f64) -> Self {
        Self {
            theorem_id: theorem_id.to_string(),
            hypotheses: Vec::new(),
            hypotheses_hold: true,
            conclusion: Verdict::NotApplicable,
            witness: BTreeMap::new(),
            tolerance,
            notes: Vec::new(),
        }
    }

    pub fn hypothesis(&mut self, name: &str, holds: bool) -> &mut Self {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            holds,
        });
        self.hypotheses_hold &= holds;
        self
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.witness.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, note: &str) -> &mut Self {
        self.notes.push(note.to_string());
        self
    }

    /// Records the conclusion; ignored (not applicable) unless every
    /// hypothesis holds.
    pub fn conclude(&mut self, holds: bool) -> &mut Self {
        self.conclusion = match (self.hypotheses_hold, holds) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
        };
        self
    }

    /// `false` only for a checked and violated conclusion.
    pub fn passed(&self) -> bool {
        self.conclusion != Verdict::Fails
    }
}

pub(crate) fn vector_json(v: &Vector) -> Value {
    Value::from(v.iter().copied().collect::<Vec<f64>>())
}

pub(crate) fn cone_json(k: &PolyhedralCone) -> Value {
    serde_json::to_value(k.to_spec()).unwrap_or(Value::Null)
}
