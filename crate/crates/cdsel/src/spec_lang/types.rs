//! Types of the specification language and the built-in vocabulary.
//!
//! `Con<t>` is the abstract container placeholder that checking resolves to
//! the list model. Scalars drawn from the checker's element domain inhabit
//! the type variables; the distinguished null result of partial observers
//! inhabits every scalar type.

use std::fmt;

pub type TyVar = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecType {
    Bool,
    Var(TyVar),
    Con(Box<SpecType>),
    Arrow(Box<SpecType>, Box<SpecType>),
    Pair(Box<SpecType>, Box<SpecType>),
}

impl SpecType {
    pub fn con(elem: SpecType) -> SpecType {
        SpecType::Con(Box::new(elem))
    }

    pub fn arrow(from: SpecType, to: SpecType) -> SpecType {
        SpecType::Arrow(Box::new(from), Box::new(to))
    }

    /// `arrows([a, b], r)` builds `a -> b -> r`.
    pub fn arrows(args: impl IntoIterator<Item = SpecType>, ret: SpecType) -> SpecType {
        let args: Vec<_> = args.into_iter().collect();
        args.into_iter()
            .rev()
            .fold(ret, |acc, a| SpecType::arrow(a, acc))
    }

    pub fn pair(a: SpecType, b: SpecType) -> SpecType {
        SpecType::Pair(Box::new(a), Box::new(b))
    }

    pub fn vars(&self) -> Vec<TyVar> {
        fn walk(t: &SpecType, out: &mut Vec<TyVar>) {
            match t {
                SpecType::Bool => {}
                SpecType::Var(v) => {
                    if !out.contains(v) {
                        out.push(*v);
                    }
                }
                SpecType::Con(e) => walk(e, out),
                SpecType::Arrow(a, b) | SpecType::Pair(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for SpecType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecType::Bool => write!(f, "Bool"),
            SpecType::Var(v) => write!(f, "t{v}"),
            SpecType::Con(e) => write!(f, "Con<{e}>"),
            SpecType::Arrow(a, b) => match a.as_ref() {
                SpecType::Arrow(..) => write!(f, "({a}) -> {b}"),
                _ => write!(f, "{a} -> {b}"),
            },
            SpecType::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// A type scheme: quantification appears only here, at the outermost level,
/// which is what makes inference principal without annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    pub vars: Vec<TyVar>,
    pub ty: SpecType,
}

impl Scheme {
    pub fn mono(ty: SpecType) -> Scheme {
        Scheme { vars: Vec::new(), ty }
    }

    pub fn poly(vars: impl IntoIterator<Item = TyVar>, ty: SpecType) -> Scheme {
        Scheme {
            vars: vars.into_iter().collect(),
            ty,
        }
    }
}
