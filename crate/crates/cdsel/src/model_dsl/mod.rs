//! The abstract list model: values, the bounded element domain, the built-in
//! vocabulary, the evaluator, and the native model operations.

pub mod builtins;
pub mod domain;
pub mod eval;
pub mod model_ops;
pub mod value;

pub use builtins::{Builtin, BuiltinKind, BuiltinRegistry};
pub use domain::ElementDomain;
pub use eval::{eval, Env, EvalError, Interp, Value, DEFAULT_FUEL};
pub use model_ops::NativeModelOp;
pub use value::{value_cmp, Elem, ModelValue};
