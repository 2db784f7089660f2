//! Property checking against one candidate's library specification.
//!
//! A property is checked as an invariant across each specified operation:
//! enumerate every model state within the bound (and every auxiliary input
//! over the element domain), keep those satisfying the property and the
//! operation's precondition, apply the model operation, and require the
//! property on the post-state. The first failure in enumeration order is the
//! reported counterexample, so witnesses are minimal. If nothing satisfied
//! property and precondition, the verdict is `Vacuous`, never `Valid`.
//!
//! Properties with an interface bound are additionally evaluated as closed
//! formulas: their operation placeholders are instantiated with the
//! candidate's model operations and the formula must hold on every state
//! within the bound.

use std::time::Instant;

use super::config::CheckConfig;
use super::verdict::{CounterexampleTrace, Verdict, INTERACTION_OP};
use crate::library_spec::hoare::{apply_post_op, eval_invariant, eval_pre, ContainerSpec, HoareSpec};
use crate::library_spec::interface::{InterfaceRegistry, OpShape};
use crate::model_dsl::builtins::BuiltinRegistry;
use crate::model_dsl::eval::{Env, EvalError, Interp, Value};
use crate::model_dsl::value::{Elem, ModelValue};
use crate::spec_lang::ast::Term;
use crate::spec_lang::printer::print_term;
use crate::spec_lang::typecheck::TypedProperty;

/// A predicate closed over one candidate: property names are bound to their
/// bodies and, for bounded properties, operation names to the candidate's
/// model operations.
#[derive(Debug, Clone)]
pub struct BoundProperty {
    /// Label used in reports: the property name for a simple application,
    /// otherwise the printed conjunct.
    pub label: String,
    /// Whether any referenced property declares an interface bound, which
    /// triggers the closed interaction check.
    pub bounded: bool,
    predicate: Value,
}

/// The synthesized term an operation name denotes inside a bounded property:
/// the candidate's model operation, projected to the returned value for
/// value-returning shapes (a mutator returning nothing denotes the
/// post-state container).
fn placeholder_term(spec: &ContainerSpec, triple: &HoareSpec) -> Term {
    let model_op = match spec.model_ops.get(&triple.post_model_op) {
        Some(local) => local.clone(),
        None => Term::var(&triple.post_model_op),
    };
    let shape = triple.shape;
    let call = if shape.takes_aux() {
        Term::apps(model_op, [Term::var("xs"), Term::var("x")])
    } else {
        Term::app(model_op, Term::var("xs"))
    };
    let body = if shape.returns_value() {
        Term::app(Term::var("snd"), call)
    } else {
        call
    };
    if shape.takes_aux() {
        Term::lam("xs", Term::lam("x", body))
    } else {
        Term::lam("xs", body)
    }
}

fn placeholder_env(
    spec: &ContainerSpec,
    interface: &str,
    interfaces: &InterfaceRegistry,
    interp: &mut Interp<'_>,
) -> Result<Env, EvalError> {
    let mut env = Env::empty();
    if let Some(sig) = interfaces.get(interface) {
        for (op, _) in &sig.operations {
            if let Some(triple) = spec.triples.get(op) {
                let value = interp.eval(&placeholder_term(spec, triple), &Env::empty())?;
                env = env.bind(op.clone(), value);
            }
        }
    }
    Ok(env)
}

impl BoundProperty {
    /// Closes a refinement conjunct over a candidate specification.
    pub fn bind(
        conjunct: &Term,
        container_var: &str,
        properties: &[TypedProperty],
        spec: &ContainerSpec,
        interfaces: &InterfaceRegistry,
        registry: &BuiltinRegistry,
        cfg: &CheckConfig,
    ) -> Result<BoundProperty, EvalError> {
        let domain = cfg.domain();
        let mut interp = Interp::new(registry, &domain);

        let referenced = conjunct.free_vars();
        let mut env = Env::empty();
        let mut bounded = false;
        for p in properties {
            if !referenced.contains(&p.def.name.as_str()) {
                continue;
            }
            let prop_env = match &p.def.bound {
                Some(b) => {
                    bounded = true;
                    placeholder_env(spec, b, interfaces, &mut interp)?
                }
                None => Env::empty(),
            };
            let closure = interp.eval(&p.def.body, &prop_env)?;
            env = env.bind(p.def.name.clone(), closure);
        }

        let label = match conjunct.spine() {
            (Term::Var(p), args)
                if args.len() == 1 && matches!(args[0], Term::Var(v) if v == container_var) =>
            {
                p.clone()
            }
            _ => print_term(conjunct),
        };

        let pred_term = Term::lam(container_var, conjunct.clone());
        let predicate = interp.eval(&pred_term, &env)?;
        Ok(BoundProperty {
            label,
            bounded,
            predicate,
        })
    }

    /// Evaluates the predicate on a model state.
    pub fn holds(&self, xs: &[Elem], interp: &mut Interp<'_>) -> Result<bool, EvalError> {
        match interp.apply(self.predicate.clone(), Value::list(xs.to_vec()))? {
            Value::Data(ModelValue::Bool(b)) => Ok(b),
            other => Err(EvalError::Kind {
                builtin: "property".to_string(),
                message: format!("expected a boolean, got {}", other.describe()),
            }),
        }
    }
}

fn aux_candidates(shape: OpShape, cfg: &CheckConfig) -> Vec<Option<Elem>> {
    if shape.takes_aux() {
        cfg.domain().values().iter().map(|&v| Some(v)).collect()
    } else {
        vec![None]
    }
}

/// Checks that a property is preserved by one operation's Hoare triple.
pub fn check_property_on_op(
    property: &BoundProperty,
    spec: &ContainerSpec,
    triple: &HoareSpec,
    cfg: &CheckConfig,
    deadline: Option<Instant>,
    registry: &BuiltinRegistry,
) -> Result<Verdict, EvalError> {
    let domain = cfg.domain();
    let post = spec
        .resolve_post(&triple.post_model_op)
        .expect("loaded specifications resolve their model operations");
    let aux_values = aux_candidates(triple.shape, cfg);

    let mut satisfied = false;
    for xs0 in domain.lists_up_to(cfg.model_size) {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(Verdict::Timeout {
                op: triple.op.clone(),
            });
        }
        for &aux in &aux_values {
            let mut interp = Interp::new(registry, &domain);
            if !property.holds(&xs0, &mut interp)? {
                continue;
            }
            if !eval_invariant(&spec.invariant_pre, &xs0, &mut interp)? {
                continue;
            }
            if !eval_pre(&triple.pre, triple.shape, &xs0, aux, &mut interp)? {
                continue;
            }
            satisfied = true;

            let (post_state, _) = apply_post_op(&post, triple.shape, &xs0, aux, &mut interp)?;
            if !property.holds(&post_state, &mut interp)? {
                return Ok(Verdict::Invalid {
                    counterexample: CounterexampleTrace {
                        property: property.label.clone(),
                        op: triple.op.clone(),
                        xs0,
                        aux,
                        post: post_state,
                    },
                });
            }
        }
    }

    if satisfied {
        Ok(Verdict::Valid)
    } else {
        Ok(Verdict::Vacuous {
            op: triple.op.clone(),
        })
    }
}

/// Evaluates a bounded property as a closed formula over every state within
/// the bound (the per-operation invariant checks run separately).
pub fn check_interaction_property(
    property: &BoundProperty,
    cfg: &CheckConfig,
    deadline: Option<Instant>,
    registry: &BuiltinRegistry,
) -> Result<Verdict, EvalError> {
    let domain = cfg.domain();
    for xs0 in domain.lists_up_to(cfg.model_size) {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(Verdict::Timeout {
                op: INTERACTION_OP.to_string(),
            });
        }
        let mut interp = Interp::new(registry, &domain);
        if !property.holds(&xs0, &mut interp)? {
            return Ok(Verdict::Invalid {
                counterexample: CounterexampleTrace {
                    property: property.label.clone(),
                    op: INTERACTION_OP.to_string(),
                    xs0: xs0.clone(),
                    aux: None,
                    post: xs0,
                },
            });
        }
    }
    Ok(Verdict::Valid)
}

/// Re-checks a counterexample by direct evaluation; used to keep reported
/// witnesses honest.
pub fn revalidate_trace(
    trace: &CounterexampleTrace,
    property: &BoundProperty,
    spec: &ContainerSpec,
    cfg: &CheckConfig,
    registry: &BuiltinRegistry,
) -> Result<bool, EvalError> {
    let domain = cfg.domain();
    let mut interp = Interp::new(registry, &domain);
    if trace.op == INTERACTION_OP {
        return Ok(!property.holds(&trace.xs0, &mut interp)?);
    }
    let Some(triple) = spec.triples.get(&trace.op) else {
        return Ok(false);
    };
    let post = spec
        .resolve_post(&triple.post_model_op)
        .expect("loaded specifications resolve their model operations");

    let pre_ok = property.holds(&trace.xs0, &mut interp)?
        && eval_invariant(&spec.invariant_pre, &trace.xs0, &mut interp)?
        && eval_pre(&triple.pre, triple.shape, &trace.xs0, trace.aux, &mut interp)?;
    if !pre_ok {
        return Ok(false);
    }
    let (post_state, _) = apply_post_op(&post, triple.shape, &trace.xs0, trace.aux, &mut interp)?;
    Ok(post_state == trace.post && !property.holds(&post_state, &mut interp)?)
}
