//! Evaluator for terms over the model domain.
//!
//! Evaluation is pure and deterministic. The grammar has no recursion form,
//! so well-typed terms always terminate; the fuel counter encodes that
//! structural-decrease argument as a runtime bound and doubles as a guard
//! for hand-built terms that never went through the type checker.
//!
//! `forall` quantifies over the bounded element domain: the predicate is
//! required to hold for every domain value.

use std::rc::Rc;

use super::builtins::{BuiltinKind, BuiltinRegistry};
use super::domain::ElementDomain;
use super::value::{value_cmp, Elem, ModelValue};
use crate::spec_lang::ast::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable `{name}`")]
    UnboundVariable { name: String },
    #[error("cannot apply {found}: not a function")]
    Arity { found: String },
    #[error("{builtin}: {message}")]
    Kind { builtin: String, message: String },
    #[error("term evaluated to a function, not a value")]
    NotData,
    #[error("evaluation fuel exhausted")]
    FuelExhausted,
}

/// Runtime values: model data, user closures, or partially applied
/// built-ins.
#[derive(Debug, Clone)]
pub enum Value {
    Data(ModelValue),
    Closure {
        param: String,
        body: Rc<Term>,
        env: Env,
    },
    Prim {
        name: Rc<str>,
        kind: BuiltinKind,
        arity: usize,
        args: Vec<Value>,
    },
}

impl Value {
    pub fn data(v: ModelValue) -> Value {
        Value::Data(v)
    }

    pub fn list(xs: Vec<Elem>) -> Value {
        Value::Data(ModelValue::List(xs))
    }

    pub fn describe(&self) -> String {
        match self {
            Value::Data(d) => d.kind().to_string(),
            Value::Closure { .. } => "a function".to_string(),
            Value::Prim { name, .. } => format!("built-in `{name}`"),
        }
    }
}

/// Immutable binding environment (persistent linked list).
#[derive(Debug, Clone, Default)]
pub struct Env(Option<Rc<EnvNode>>);

#[derive(Debug)]
struct EnvNode {
    name: String,
    value: Value,
    parent: Env,
}

impl Env {
    pub fn empty() -> Env {
        Env(None)
    }

    #[must_use]
    pub fn bind(&self, name: impl Into<String>, value: Value) -> Env {
        Env(Some(Rc::new(EnvNode {
            name: name.into(),
            value,
            parent: self.clone(),
        })))
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        let mut cur = self;
        while let Some(node) = &cur.0 {
            if node.name == name {
                return Some(&node.value);
            }
            cur = &node.parent;
        }
        None
    }
}

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// One evaluation context: built-in registry, element domain, fuel.
pub struct Interp<'a> {
    registry: &'a BuiltinRegistry,
    domain: &'a ElementDomain,
    fuel: u64,
}

impl<'a> Interp<'a> {
    pub fn new(registry: &'a BuiltinRegistry, domain: &'a ElementDomain) -> Interp<'a> {
        Interp {
            registry,
            domain,
            fuel: DEFAULT_FUEL,
        }
    }

    pub fn with_fuel(registry: &'a BuiltinRegistry, domain: &'a ElementDomain, fuel: u64) -> Interp<'a> {
        Interp { registry, domain, fuel }
    }

    pub fn domain(&self) -> &ElementDomain {
        self.domain
    }

    fn burn(&mut self) -> Result<(), EvalError> {
        if self.fuel == 0 {
            return Err(EvalError::FuelExhausted);
        }
        self.fuel -= 1;
        Ok(())
    }

    pub fn eval(&mut self, term: &Term, env: &Env) -> Result<Value, EvalError> {
        self.burn()?;
        match term {
            Term::Bool(b) => Ok(Value::Data(ModelValue::Bool(*b))),
            Term::Var(name) => {
                if let Some(v) = env.lookup(name) {
                    return Ok(v.clone());
                }
                match self.registry.get(name) {
                    Some(b) if b.arity == 0 => self.run_builtin(&b.name.clone(), b.kind, Vec::new()),
                    Some(b) => Ok(Value::Prim {
                        name: Rc::from(b.name.as_str()),
                        kind: b.kind,
                        arity: b.arity,
                        args: Vec::new(),
                    }),
                    None => Err(EvalError::UnboundVariable { name: name.clone() }),
                }
            }
            Term::Lambda { param, body } => Ok(Value::Closure {
                param: param.clone(),
                body: Rc::new((**body).clone()),
                env: env.clone(),
            }),
            Term::App { func, arg } => {
                let f = self.eval(func, env)?;
                let a = self.eval(arg, env)?;
                self.apply(f, a)
            }
        }
    }

    /// Evaluates to first-order data, rejecting functional results.
    pub fn eval_data(&mut self, term: &Term, env: &Env) -> Result<ModelValue, EvalError> {
        match self.eval(term, env)? {
            Value::Data(d) => Ok(d),
            _ => Err(EvalError::NotData),
        }
    }

    pub fn eval_bool(&mut self, term: &Term, env: &Env) -> Result<bool, EvalError> {
        match self.eval_data(term, env)? {
            ModelValue::Bool(b) => Ok(b),
            other => Err(EvalError::Kind {
                builtin: "predicate".to_string(),
                message: format!("expected a boolean, got {}", other.kind()),
            }),
        }
    }

    pub fn apply(&mut self, func: Value, arg: Value) -> Result<Value, EvalError> {
        self.burn()?;
        match func {
            Value::Closure { param, body, env } => {
                let inner = env.bind(param, arg);
                self.eval(&body, &inner)
            }
            Value::Prim {
                name,
                kind,
                arity,
                mut args,
            } => {
                args.push(arg);
                if args.len() == arity {
                    self.run_builtin(&name, kind, args)
                } else {
                    Ok(Value::Prim { name, kind, arity, args })
                }
            }
            Value::Data(d) => Err(EvalError::Arity {
                found: d.kind().to_string(),
            }),
        }
    }

    /// Applies a predicate value to one data argument and reads a boolean.
    pub fn call_pred(&mut self, pred: &Value, arg: ModelValue) -> Result<bool, EvalError> {
        match self.apply(pred.clone(), Value::Data(arg))? {
            Value::Data(ModelValue::Bool(b)) => Ok(b),
            other => Err(EvalError::Kind {
                builtin: "predicate".to_string(),
                message: format!("expected a boolean, got {}", other.describe()),
            }),
        }
    }

    fn run_builtin(
        &mut self,
        name: &str,
        kind: BuiltinKind,
        args: Vec<Value>,
    ) -> Result<Value, EvalError> {
        use BuiltinKind::*;

        let kind_err = |message: String| EvalError::Kind {
            builtin: name.to_string(),
            message,
        };
        let as_data = |v: &Value| -> Result<ModelValue, EvalError> {
            match v {
                Value::Data(d) => Ok(d.clone()),
                other => Err(kind_err(format!("expected a value, got {}", other.describe()))),
            }
        };
        let as_bool = |v: &Value| -> Result<bool, EvalError> {
            match v {
                Value::Data(ModelValue::Bool(b)) => Ok(*b),
                other => Err(kind_err(format!("expected a boolean, got {}", other.describe()))),
            }
        };
        let as_elem = |v: &Value| -> Result<Elem, EvalError> {
            match v {
                Value::Data(ModelValue::Elem(x)) => Ok(*x),
                other => Err(kind_err(format!("expected an element, got {}", other.describe()))),
            }
        };
        let as_list = |v: &Value| -> Result<Vec<Elem>, EvalError> {
            match v {
                Value::Data(ModelValue::List(xs)) => Ok(xs.clone()),
                other => Err(kind_err(format!("expected a list, got {}", other.describe()))),
            }
        };
        let bool_val = |b: bool| Ok(Value::Data(ModelValue::Bool(b)));
        let list_val = |xs: Vec<Elem>| Ok(Value::Data(ModelValue::List(xs)));

        match kind {
            And => bool_val(as_bool(&args[0])? && as_bool(&args[1])?),
            Or => bool_val(as_bool(&args[0])? || as_bool(&args[1])?),
            Not => bool_val(!as_bool(&args[0])?),
            Equal => bool_val(as_data(&args[0])? == as_data(&args[1])?),
            Leq | Geq => {
                let x = as_data(&args[0])?;
                let y = as_data(&args[1])?;
                let ord = value_cmp(&x, &y).ok_or_else(|| {
                    kind_err(format!("cannot compare {} with {}", x.kind(), y.kind()))
                })?;
                bool_val(if matches!(kind, Leq) { ord.is_le() } else { ord.is_ge() })
            }
            UniqueCount => {
                let x = as_data(&args[0])?;
                let xs = as_list(&args[1])?;
                let count = match x {
                    ModelValue::Elem(x) => xs.iter().filter(|y| **y == x).count(),
                    _ => 0,
                };
                bool_val(count == 1)
            }
            ForAllElems => {
                let pred = args[0].clone();
                let xs = as_list(&args[1])?;
                for x in xs {
                    if !self.call_pred(&pred, ModelValue::Elem(x))? {
                        return bool_val(false);
                    }
                }
                bool_val(true)
            }
            ForAllConsecutivePairs => {
                let xs = as_list(&args[0])?;
                let rel = args[1].clone();
                for w in xs.windows(2) {
                    let partial = self.apply(rel.clone(), Value::Data(ModelValue::Elem(w[0])))?;
                    match self.apply(partial, Value::Data(ModelValue::Elem(w[1])))? {
                        Value::Data(ModelValue::Bool(true)) => {}
                        Value::Data(ModelValue::Bool(false)) => return bool_val(false),
                        other => {
                            return Err(kind_err(format!(
                                "relation returned {}, expected a boolean",
                                other.describe()
                            )))
                        }
                    }
                }
                bool_val(true)
            }
            Forall => {
                let pred = args[0].clone();
                for &v in self.domain.values() {
                    if !self.call_pred(&pred, ModelValue::Elem(v))? {
                        return bool_val(false);
                    }
                }
                bool_val(true)
            }
            Nil => list_val(Vec::new()),
            Cons => {
                let x = as_elem(&args[0])?;
                let mut xs = as_list(&args[1])?;
                xs.insert(0, x);
                list_val(xs)
            }
            Append => {
                let mut xs = as_list(&args[0])?;
                xs.extend(as_list(&args[1])?);
                list_val(xs)
            }
            SortAscending => {
                let mut xs = as_list(&args[0])?;
                xs.sort_unstable();
                list_val(xs)
            }
            DedupAdjacent => {
                let mut xs = as_list(&args[0])?;
                xs.dedup();
                list_val(xs)
            }
            Init => {
                let mut xs = as_list(&args[0])?;
                xs.pop();
                list_val(xs)
            }
            MemberP => {
                let x = as_data(&args[0])?;
                let xs = as_list(&args[1])?;
                bool_val(matches!(x, ModelValue::Elem(x) if xs.contains(&x)))
            }
            RemoveFirst => {
                let x = as_elem(&args[0])?;
                let mut xs = as_list(&args[1])?;
                if let Some(idx) = xs.iter().position(|y| *y == x) {
                    xs.remove(idx);
                }
                list_val(xs)
            }
            Take => {
                let xs = as_list(&args[0])?;
                let n = as_elem(&args[1])?;
                let n = usize::try_from(n.max(0)).unwrap_or(0).min(xs.len());
                list_val(xs[..n].to_vec())
            }
            Last => Ok(Value::Data(ModelValue::opt_elem(
                as_list(&args[0])?.last().copied(),
            ))),
            Length => {
                let xs = as_list(&args[0])?;
                Ok(Value::Data(ModelValue::Elem(xs.len() as Elem)))
            }
            NullP => bool_val(as_list(&args[0])?.is_empty()),
            MakePair => Ok(Value::Data(ModelValue::pair(
                as_data(&args[0])?,
                as_data(&args[1])?,
            ))),
            Fst | Snd => match as_data(&args[0])? {
                ModelValue::Pair(a, b) => Ok(Value::Data(if matches!(kind, Fst) {
                    *a
                } else {
                    *b
                })),
                other => Err(kind_err(format!("expected a pair, got {}", other.kind()))),
            },
            Model(op) => {
                let xs = as_list(&args[0])?;
                let aux = if op.takes_aux() {
                    Some(as_elem(&args[1])?)
                } else {
                    None
                };
                Ok(Value::Data(op.result_value(&xs, aux)))
            }
        }
    }
}

/// Evaluates a term against data bindings, with the standard built-ins.
pub fn eval(
    term: &Term,
    bindings: &[(&str, ModelValue)],
    domain: &ElementDomain,
) -> Result<ModelValue, EvalError> {
    let registry = BuiltinRegistry::standard();
    let mut interp = Interp::new(&registry, domain);
    let mut env = Env::empty();
    for (name, value) in bindings {
        env = env.bind(*name, Value::Data(value.clone()));
    }
    interp.eval_data(term, &env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec_lang::parser::{parse_spec, parse_term};

    fn domain() -> ElementDomain {
        ElementDomain::of_size(4)
    }

    fn eval_property(src: &str, name: &str, xs: Vec<Elem>) -> bool {
        let spec = parse_spec(src).unwrap();
        let p = spec.property(name).unwrap();
        let registry = BuiltinRegistry::standard();
        let d = domain();
        let mut interp = Interp::new(&registry, &d);
        let pred = interp.eval(&p.body, &Env::empty()).unwrap();
        match interp.apply(pred, Value::list(xs)).unwrap() {
            Value::Data(ModelValue::Bool(b)) => b,
            other => panic!("property returned {other:?}"),
        }
    }

    const UNIQUE: &str =
        "property unique { \\c -> (for-all-elems (\\a -> (unique-count? a c)) c) }";
    const ASCENDING: &str = "property ascending { \\c -> (for-all-consecutive-pairs c leq?) }";
    const DESCENDING: &str = "property descending { \\c -> (for-all-consecutive-pairs c geq?) }";

    #[test]
    fn unique_rejects_the_duplicate_list() {
        assert!(!eval_property(UNIQUE, "unique", vec![3, 1, 2, 3]));
        assert!(eval_property(UNIQUE, "unique", vec![3, 1, 2]));
    }

    #[test]
    fn for_all_elems_is_vacuously_true_on_empty() {
        assert!(eval_property(UNIQUE, "unique", vec![]));
    }

    #[test]
    fn ascending_is_non_strict() {
        assert!(eval_property(ASCENDING, "ascending", vec![1, 1, 2]));
        assert!(!eval_property(ASCENDING, "ascending", vec![2, 1]));
    }

    #[test]
    fn descending_fails_on_an_ascending_pair() {
        assert!(!eval_property(DESCENDING, "descending", vec![1, 2]));
        assert!(eval_property(DESCENDING, "descending", vec![2, 1, 1]));
    }

    #[test]
    fn forall_ranges_over_the_domain() {
        // leq? against the maximum holds for every domain element; against a
        // middle element it does not.
        let t = parse_term("(forall \\x. (leq? x m))").unwrap();
        let d = domain();
        let top = eval(&t, &[("m", ModelValue::Elem(3))], &d).unwrap();
        assert_eq!(top, ModelValue::Bool(true));
        let mid = eval(&t, &[("m", ModelValue::Elem(1))], &d).unwrap();
        assert_eq!(mid, ModelValue::Bool(false));
    }

    #[test]
    fn list_primitives_compose() {
        let t = parse_term("(dedup-adjacent (sort-ascending (append xs (cons x nil))))").unwrap();
        let d = domain();
        let out = eval(
            &t,
            &[
                ("xs", ModelValue::List(vec![3, 1, 3])),
                ("x", ModelValue::Elem(2)),
            ],
            &d,
        )
        .unwrap();
        assert_eq!(out, ModelValue::List(vec![1, 2, 3]));
    }

    #[test]
    fn evaluation_is_deterministic() {
        let t = parse_term("(model-pop (model-push-lifo xs x))").unwrap();
        let d = domain();
        let bindings = [
            ("xs", ModelValue::List(vec![1, 2])),
            ("x", ModelValue::Elem(3)),
        ];
        let once = eval(&t, &bindings, &d).unwrap();
        let twice = eval(&t, &bindings, &d).unwrap();
        assert_eq!(once, twice);
        assert_eq!(
            once,
            ModelValue::pair(ModelValue::List(vec![1, 2]), ModelValue::Elem(3))
        );
    }

    #[test]
    fn applying_data_is_an_arity_error() {
        let t = parse_term("(true false)").unwrap();
        let d = domain();
        assert!(matches!(
            eval(&t, &[], &d),
            Err(EvalError::Arity { .. })
        ));
    }

    #[test]
    fn unbound_variables_error() {
        let t = parse_term("(mystery x)").unwrap();
        let d = domain();
        assert!(matches!(
            eval(&t, &[("x", ModelValue::Elem(0))], &d),
            Err(EvalError::UnboundVariable { .. })
        ));
    }
}
