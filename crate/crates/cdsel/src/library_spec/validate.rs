//! Specification self-checks by bounded enumeration: model operations must
//! be total and deterministic where their preconditions hold, the shared
//! invariant must be re-established by every triple, and no precondition may
//! be unsatisfiable within the bound.

use super::catalogue::Catalogue;
use super::hoare::{apply_post_op, eval_invariant, eval_pre, ContainerSpec};
use crate::model_dsl::builtins::BuiltinRegistry;
use crate::model_dsl::domain::ElementDomain;
use crate::model_dsl::eval::Interp;
use crate::model_dsl::value::Elem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecDiagnostic {
    /// The invariant held before the operation but not after.
    NonPreserving {
        op: String,
        xs0: Vec<Elem>,
        aux: Option<Elem>,
        post: Vec<Elem>,
    },
    /// No state within the bound satisfies invariant and precondition.
    VacuousPre { op: String },
    /// Two evaluations of the model operation disagreed.
    NondeterministicModelOp { op: String },
    /// The model operation failed to evaluate on a precondition-satisfying
    /// input.
    ModelOpFailure { op: String, message: String },
}

impl std::fmt::Display for SpecDiagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecDiagnostic::NonPreserving { op, xs0, aux, post } => {
                write!(f, "operation `{op}` does not preserve the invariant: {xs0:?}")?;
                if let Some(x) = aux {
                    write!(f, " with input {x}")?;
                }
                write!(f, " yields {post:?}")
            }
            SpecDiagnostic::VacuousPre { op } => {
                write!(f, "operation `{op}` has an unsatisfiable precondition within the bound")
            }
            SpecDiagnostic::NondeterministicModelOp { op } => {
                write!(f, "model operation of `{op}` is not deterministic")
            }
            SpecDiagnostic::ModelOpFailure { op, message } => {
                write!(f, "model operation of `{op}` failed: {message}")
            }
        }
    }
}

/// Checks one container specification over all model states of length at
/// most `k` (element domain of size `k + 1`).
pub fn validate_spec(
    catalogue: &Catalogue,
    spec: &ContainerSpec,
    k: usize,
) -> Vec<SpecDiagnostic> {
    let registry = BuiltinRegistry::standard();
    let domain = ElementDomain::of_size(k + 1);
    let mut diags = Vec::new();

    for triple in spec.ops(&catalogue.interfaces) {
        let Some(post) = spec.resolve_post(&triple.post_model_op) else {
            // Unresolvable posts are a load error; skip here.
            continue;
        };
        let aux_values: Vec<Option<Elem>> = if triple.shape.takes_aux() {
            domain.values().iter().map(|&v| Some(v)).collect()
        } else {
            vec![None]
        };

        let mut satisfiable = false;
        'search: for xs0 in domain.lists_up_to(k) {
            for &aux in &aux_values {
                let mut interp = Interp::new(&registry, &domain);
                let inv_holds = match eval_invariant(&spec.invariant_pre, &xs0, &mut interp) {
                    Ok(b) => b,
                    Err(e) => {
                        diags.push(SpecDiagnostic::ModelOpFailure {
                            op: triple.op.clone(),
                            message: e.to_string(),
                        });
                        break 'search;
                    }
                };
                let pre_holds = inv_holds
                    && matches!(
                        eval_pre(&triple.pre, triple.shape, &xs0, aux, &mut interp),
                        Ok(true)
                    );
                if !pre_holds {
                    continue;
                }
                satisfiable = true;

                let first = apply_post_op(&post, triple.shape, &xs0, aux, &mut interp);
                let second = apply_post_op(&post, triple.shape, &xs0, aux, &mut interp);
                let (post_state, _) = match (first, second) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            diags.push(SpecDiagnostic::NondeterministicModelOp {
                                op: triple.op.clone(),
                            });
                            break 'search;
                        }
                        a
                    }
                    (Err(e), _) | (_, Err(e)) => {
                        diags.push(SpecDiagnostic::ModelOpFailure {
                            op: triple.op.clone(),
                            message: e.to_string(),
                        });
                        break 'search;
                    }
                };

                match eval_invariant(&spec.invariant_pre, &post_state, &mut interp) {
                    Ok(true) => {}
                    Ok(false) => {
                        diags.push(SpecDiagnostic::NonPreserving {
                            op: triple.op.clone(),
                            xs0: xs0.clone(),
                            aux,
                            post: post_state,
                        });
                        break 'search;
                    }
                    Err(e) => {
                        diags.push(SpecDiagnostic::ModelOpFailure {
                            op: triple.op.clone(),
                            message: e.to_string(),
                        });
                        break 'search;
                    }
                }
            }
        }

        if !satisfiable {
            diags.push(SpecDiagnostic::VacuousPre {
                op: triple.op.clone(),
            });
        }
    }

    diags
}
