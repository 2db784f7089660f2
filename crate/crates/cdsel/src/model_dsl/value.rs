//! Runtime values of the model language.
//!
//! Model lists are flat sequences of elements; `Null` is the distinguished
//! "no result" value of partial observers and is distinct from every element
//! and from the empty list.

use std::cmp::Ordering;
use std::fmt;

/// An element of the checking domain: a small integer. Conformance testing
/// reuses the same representation for real container elements.
pub type Elem = i64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModelValue {
    Elem(Elem),
    Bool(bool),
    List(Vec<Elem>),
    Pair(Box<ModelValue>, Box<ModelValue>),
    Null,
}

impl ModelValue {
    pub fn pair(a: ModelValue, b: ModelValue) -> ModelValue {
        ModelValue::Pair(Box::new(a), Box::new(b))
    }

    pub fn opt_elem(x: Option<Elem>) -> ModelValue {
        match x {
            Some(v) => ModelValue::Elem(v),
            None => ModelValue::Null,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ModelValue::Elem(_) => "element",
            ModelValue::Bool(_) => "boolean",
            ModelValue::List(_) => "list",
            ModelValue::Pair(..) => "pair",
            ModelValue::Null => "null",
        }
    }
}

impl fmt::Display for ModelValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelValue::Elem(x) => write!(f, "{x}"),
            ModelValue::Bool(b) => write!(f, "{b}"),
            ModelValue::List(xs) => {
                write!(f, "[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            ModelValue::Pair(a, b) => write!(f, "({a}, {b})"),
            ModelValue::Null => write!(f, "null"),
        }
    }
}

/// Total order used by `leq?`/`geq?`. `Null` sorts below everything; values
/// of different kinds are otherwise incomparable (which well-typed terms
/// cannot ask for).
pub fn value_cmp(a: &ModelValue, b: &ModelValue) -> Option<Ordering> {
    use ModelValue::*;
    match (a, b) {
        (Null, Null) => Some(Ordering::Equal),
        (Null, _) => Some(Ordering::Less),
        (_, Null) => Some(Ordering::Greater),
        (Elem(x), Elem(y)) => Some(x.cmp(y)),
        (Bool(x), Bool(y)) => Some(x.cmp(y)),
        (List(xs), List(ys)) => Some(xs.cmp(ys)),
        (Pair(a1, b1), Pair(a2, b2)) => match value_cmp(a1, a2)? {
            Ordering::Equal => value_cmp(b1, b2),
            ord => Some(ord),
        },
        _ => None,
    }
}
