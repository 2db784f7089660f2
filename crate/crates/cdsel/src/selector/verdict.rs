//! Checking outcomes and counterexample witnesses.

use crate::model_dsl::value::Elem;

/// Pseudo-operation name used when the closed interaction formula itself
/// fails on a state (rather than an operation failing to preserve it).
pub const INTERACTION_OP: &str = "interaction";

/// A concrete witness that a property is not preserved. Re-checkable by
/// evaluation: the property and precondition hold on `xs0`, the model
/// operation yields `post`, and the property fails on `post`. For the
/// `interaction` pseudo-operation, `post == xs0` and the witness simply
/// falsifies the closed formula.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CounterexampleTrace {
    pub property: String,
    pub op: String,
    pub xs0: Vec<Elem>,
    pub aux: Option<Elem>,
    pub post: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Invalid { counterexample: CounterexampleTrace },
    /// No state within the bound satisfies both the property and the
    /// operation's precondition; concluding "valid" from an empty search
    /// space would be unsound.
    Vacuous { op: String },
    Timeout { op: String },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Valid => "valid",
            Verdict::Invalid { .. } => "invalid",
            Verdict::Vacuous { .. } => "vacuous",
            Verdict::Timeout { .. } => "timeout",
        }
    }
}
