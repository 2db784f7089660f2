//! Library specifications: one pre/post Hoare triple per operation, with the
//! postcondition naming a deterministic model operation.

use std::collections::BTreeMap;

use super::interface::{InterfaceRegistry, OpShape};
use crate::model_dsl::eval::{Env, EvalError, Interp, Value};
use crate::model_dsl::model_ops::NativeModelOp;
use crate::model_dsl::value::{Elem, ModelValue};
use crate::spec_lang::ast::Term;

/// `{pre} op {xs = model_op(xs0, aux)}`. The precondition is a lambda over
/// the input model and, for element-taking operations, the input element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoareSpec {
    pub op: String,
    pub shape: OpShape,
    pub pre: Term,
    pub post_model_op: String,
}

/// One catalogue entry: the interfaces an implementation offers, a shared
/// invariant precondition on the model, and a triple per operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerSpec {
    pub name: String,
    pub interfaces: Vec<String>,
    pub invariant_pre: Term,
    pub triples: BTreeMap<String, HoareSpec>,
    /// Container-local model operations defined in the model DSL; these
    /// shadow same-named registry operations within this spec.
    pub model_ops: BTreeMap<String, Term>,
}

/// A resolved postcondition model operation.
#[derive(Debug, Clone)]
pub enum PostOp<'c> {
    Native(NativeModelOp),
    Local(&'c Term),
}

impl ContainerSpec {
    pub fn implements_all(&self, bounds: &[String]) -> bool {
        bounds.iter().all(|b| self.interfaces.contains(b))
    }

    pub fn resolve_post(&self, name: &str) -> Option<PostOp<'_>> {
        if let Some(term) = self.model_ops.get(name) {
            return Some(PostOp::Local(term));
        }
        NativeModelOp::by_name(name).map(PostOp::Native)
    }

    /// Operations in deterministic order: interface declaration order over
    /// the declared interfaces.
    pub fn ops<'a>(&'a self, interfaces: &'a InterfaceRegistry) -> Vec<&'a HoareSpec> {
        let mut out = Vec::new();
        for iface in &self.interfaces {
            if let Some(sig) = interfaces.get(iface) {
                for (op, _) in &sig.operations {
                    if let Some(triple) = self.triples.get(op) {
                        if !out.iter().any(|t: &&HoareSpec| t.op == triple.op) {
                            out.push(triple);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Applies a resolved model operation to a model state, yielding the
/// post-state and the returned value (`Null` when the operation returns
/// nothing).
pub fn apply_post_op(
    post: &PostOp<'_>,
    shape: OpShape,
    xs: &[Elem],
    aux: Option<Elem>,
    interp: &mut Interp<'_>,
) -> Result<(Vec<Elem>, ModelValue), EvalError> {
    match post {
        PostOp::Native(op) => Ok(op.apply(xs, aux)),
        PostOp::Local(term) => {
            let mut value = interp.eval(term, &Env::empty())?;
            value = interp.apply(value, Value::list(xs.to_vec()))?;
            if shape.takes_aux() {
                let x = aux.expect("operation shape takes an input");
                value = interp.apply(value, Value::Data(ModelValue::Elem(x)))?;
            }
            match value {
                Value::Data(ModelValue::List(post_state)) if !shape.returns_value() => {
                    Ok((post_state, ModelValue::Null))
                }
                Value::Data(ModelValue::Pair(list, ret)) if shape.returns_value() => {
                    match *list {
                        ModelValue::List(post_state) => Ok((post_state, *ret)),
                        other => Err(EvalError::Kind {
                            builtin: "model operation".to_string(),
                            message: format!(
                                "post-state component is {}, expected a list",
                                other.kind()
                            ),
                        }),
                    }
                }
                other => Err(EvalError::Kind {
                    builtin: "model operation".to_string(),
                    message: format!(
                        "result {} does not match the operation's shape",
                        other.describe()
                    ),
                }),
            }
        }
    }
}

/// The full model-level result in the shape conformance compares against:
/// the bare post-state list, or a (list, value) pair for value-returning
/// operations.
pub fn post_op_result_value(
    post: &PostOp<'_>,
    shape: OpShape,
    xs: &[Elem],
    aux: Option<Elem>,
    interp: &mut Interp<'_>,
) -> Result<ModelValue, EvalError> {
    let (post_state, ret) = apply_post_op(post, shape, xs, aux, interp)?;
    if shape.returns_value() {
        Ok(ModelValue::pair(ModelValue::List(post_state), ret))
    } else {
        Ok(ModelValue::List(post_state))
    }
}

/// Evaluates a precondition lambda on a model state and optional input.
pub fn eval_pre(
    pre: &Term,
    shape: OpShape,
    xs: &[Elem],
    aux: Option<Elem>,
    interp: &mut Interp<'_>,
) -> Result<bool, EvalError> {
    let mut value = interp.eval(pre, &Env::empty())?;
    value = interp.apply(value, Value::list(xs.to_vec()))?;
    if shape.takes_aux() {
        let x = aux.expect("operation shape takes an input");
        value = interp.apply(value, Value::Data(ModelValue::Elem(x)))?;
    }
    match value {
        Value::Data(ModelValue::Bool(b)) => Ok(b),
        other => Err(EvalError::Kind {
            builtin: "precondition".to_string(),
            message: format!("expected a boolean, got {}", other.describe()),
        }),
    }
}

/// Evaluates a one-argument predicate lambda (such as a container spec's
/// invariant) on a model state.
pub fn eval_invariant(
    invariant: &Term,
    xs: &[Elem],
    interp: &mut Interp<'_>,
) -> Result<bool, EvalError> {
    let value = interp.eval(invariant, &Env::empty())?;
    match interp.apply(value, Value::list(xs.to_vec()))? {
        Value::Data(ModelValue::Bool(b)) => Ok(b),
        other => Err(EvalError::Kind {
            builtin: "invariant".to_string(),
            message: format!("expected a boolean, got {}", other.describe()),
        }),
    }
}
