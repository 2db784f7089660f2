//! Abstract syntax of the property specification language.
//!
//! Terms are a tiny lambda calculus: boolean literals, variables, lambdas,
//! and application. There is no recursion form, so every well-typed term
//! denotes a terminating computation. Infix `and`, `or` and `==` in the
//! surface syntax desugar to applications of the `and`, `or` and `equal?`
//! built-ins.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Bool(bool),
    Var(String),
    Lambda { param: String, body: Box<Term> },
    App { func: Box<Term>, arg: Box<Term> },
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn lam(param: impl Into<String>, body: Term) -> Term {
        Term::Lambda {
            param: param.into(),
            body: Box::new(body),
        }
    }

    pub fn app(func: Term, arg: Term) -> Term {
        Term::App {
            func: Box::new(func),
            arg: Box::new(arg),
        }
    }

    /// `apps(f, [a, b])` builds `((f a) b)`.
    pub fn apps(func: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(func, Term::app)
    }

    /// Splits the application `((f a) b)` into `(f, [a, b])`.
    pub fn spine(&self) -> (&Term, Vec<&Term>) {
        let mut args = Vec::new();
        let mut head = self;
        while let Term::App { func, arg } = head {
            args.push(arg.as_ref());
            head = func;
        }
        args.reverse();
        (head, args)
    }

    /// Free variables in order of first occurrence.
    pub fn free_vars(&self) -> Vec<&str> {
        fn walk<'t>(t: &'t Term, bound: &mut Vec<&'t str>, out: &mut Vec<&'t str>) {
            match t {
                Term::Bool(_) => {}
                Term::Var(name) => {
                    if !bound.contains(&name.as_str()) && !out.contains(&name.as_str()) {
                        out.push(name);
                    }
                }
                Term::Lambda { param, body } => {
                    bound.push(param);
                    walk(body, bound, out);
                    bound.pop();
                }
                Term::App { func, arg } => {
                    walk(func, bound, out);
                    walk(arg, bound, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }
}

/// A conjunction of predicate applications attached to a container type
/// declaration. Conjuncts are stored flattened left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub conjuncts: Vec<Term>,
}

/// Recursively splits `and` applications into their conjuncts.
pub fn flatten_conjuncts(term: &Term) -> Vec<Term> {
    fn walk(t: &Term, out: &mut Vec<Term>) {
        if let Term::App { func, arg } = t {
            if let Term::App { func: inner, arg: lhs } = func.as_ref() {
                if matches!(inner.as_ref(), Term::Var(n) if n == "and") {
                    walk(lhs, out);
                    walk(arg, out);
                    return;
                }
            }
        }
        out.push(t.clone());
    }
    let mut out = Vec::new();
    walk(term, &mut out);
    out
}

/// A named semantic property: a predicate over the abstract container.
///
/// `bound` is the interface whose operations the body may reference (for
/// properties like the push/pop round trip); `body` is the full outer lambda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyDef {
    pub name: String,
    pub bound: Option<String>,
    pub body: Term,
}

impl PropertyDef {
    /// The variable the outer lambda binds to the container.
    pub fn container_var(&self) -> &str {
        match &self.body {
            Term::Lambda { param, .. } => param,
            _ => unreachable!("property bodies are lambdas by construction"),
        }
    }
}

/// `type Name<T> = {v <: (B1, B2) | r}`: a container type declaration with
/// its interface bounds and refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerTypeDecl {
    pub name: String,
    pub elem_param: String,
    pub var: String,
    pub bounds: Vec<String>,
    pub refinement: Refinement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Property(PropertyDef),
    ContainerType(ContainerTypeDecl),
}

/// A parsed specification file, declarations in source order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecFile {
    pub decls: Vec<Decl>,
}

impl SpecFile {
    pub fn properties(&self) -> impl Iterator<Item = &PropertyDef> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Property(p) => Some(p),
            _ => None,
        })
    }

    pub fn container_types(&self) -> impl Iterator<Item = &ContainerTypeDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::ContainerType(t) => Some(t),
            _ => None,
        })
    }

    pub fn property(&self, name: &str) -> Option<&PropertyDef> {
        self.properties().find(|p| p.name == name)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::spec_lang::printer::print_term(self))
    }
}
