//! Hindley-Milner style inference for property specifications.
//!
//! There are no type annotations on lambdas; built-ins carry polymorphic
//! schemes that instantiate at each use, and unification does the rest.
//! Every property must come out at `Con<t> -> Bool` with `t` still free:
//! properties are predicates over a container of an arbitrary element type.
//!
//! A property that declares an interface bound (`\c <: StackT -> ...`) may
//! reference that interface's operations; they type as placeholders that the
//! selector later instantiates with a candidate's model operations.

use std::collections::BTreeMap;

use super::ast::{ContainerTypeDecl, PropertyDef, SpecFile, Term};
use super::types::{Scheme, SpecType, TyVar};
use crate::library_spec::interface::InterfaceRegistry;
use crate::model_dsl::builtins::BuiltinRegistry;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("{context}: unbound variable `{name}`")]
    UnboundVariable { name: String, context: String },
    #[error("{context}: type mismatch: expected {expected}, found {actual}")]
    TypeMismatch {
        expected: SpecType,
        actual: SpecType,
        context: String,
    },
    #[error("{context}: unknown interface `{name}`")]
    UnknownInterface { name: String, context: String },
    #[error("property `{property}` is not a predicate: its body has type {found}, expected Con<t> -> Bool with t free")]
    PropertyBodyNotPredicate { property: String, found: SpecType },
    #[error("{context}: operation `{name}` is only available under the `{interface}` bound, which is not declared")]
    OperationOutsideBound {
        name: String,
        interface: String,
        context: String,
    },
    #[error("type `{decl}` declares bound `{name}` twice")]
    DuplicateBound { decl: String, name: String },
}

/// A type-checked property, known to be `Con<t> -> Bool`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedProperty {
    pub def: PropertyDef,
}

/// A type-checked container type declaration: bounds registered, refinement
/// conjuncts boolean, bounded properties in scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedDecl {
    pub decl: ContainerTypeDecl,
}

/// A fully type-checked specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedSpec {
    pub properties: Vec<TypedProperty>,
    pub decls: Vec<TypedDecl>,
}

impl TypedSpec {
    pub fn property(&self, name: &str) -> Option<&TypedProperty> {
        self.properties.iter().find(|p| p.def.name == name)
    }
}

pub fn typecheck(
    spec: &SpecFile,
    interfaces: &InterfaceRegistry,
    builtins: &BuiltinRegistry,
) -> Result<TypedSpec, Vec<TypeError>> {
    let mut errors = Vec::new();
    let mut properties = Vec::new();

    for prop in spec.properties() {
        match check_property(prop, interfaces, builtins) {
            Ok(p) => properties.push(p),
            Err(e) => errors.push(e),
        }
    }

    let mut decls = Vec::new();
    for decl in spec.container_types() {
        match check_decl(decl, &properties, interfaces, builtins) {
            Ok(d) => decls.push(d),
            Err(mut e) => errors.append(&mut e),
        }
    }

    if errors.is_empty() {
        Ok(TypedSpec { properties, decls })
    } else {
        Err(errors)
    }
}

/// Infers the type of a property body; exposed for tests and tooling.
pub fn infer_property_type(
    prop: &PropertyDef,
    interfaces: &InterfaceRegistry,
    builtins: &BuiltinRegistry,
) -> Result<SpecType, TypeError> {
    let mut infer = Infer::new(builtins, interfaces);
    let context = format!("property `{}`", prop.name);

    let mut ops: BTreeMap<&str, Scheme> = BTreeMap::new();
    if let Some(bound) = &prop.bound {
        let sig = interfaces.get(bound).ok_or_else(|| TypeError::UnknownInterface {
            name: bound.clone(),
            context: context.clone(),
        })?;
        for (op, shape) in &sig.operations {
            ops.insert(op, shape.placeholder_scheme());
        }
    }

    let ty = infer.infer(&prop.body, &mut Vec::new(), &ops, &context)?;
    Ok(infer.zonk(&ty))
}

fn check_property(
    prop: &PropertyDef,
    interfaces: &InterfaceRegistry,
    builtins: &BuiltinRegistry,
) -> Result<TypedProperty, TypeError> {
    let mut infer = Infer::new(builtins, interfaces);
    let context = format!("property `{}`", prop.name);

    let mut ops: BTreeMap<&str, Scheme> = BTreeMap::new();
    if let Some(bound) = &prop.bound {
        let sig = interfaces.get(bound).ok_or_else(|| TypeError::UnknownInterface {
            name: bound.clone(),
            context: context.clone(),
        })?;
        for (op, shape) in &sig.operations {
            ops.insert(op, shape.placeholder_scheme());
        }
    }

    let body_ty = infer.infer(&prop.body, &mut Vec::new(), &ops, &context)?;

    // The body must be Con<t> -> Bool with t still free.
    let elem = infer.fresh();
    let want = SpecType::arrow(SpecType::con(elem.clone()), SpecType::Bool);
    if infer.unify(&body_ty, &want).is_err() {
        return Err(TypeError::PropertyBodyNotPredicate {
            property: prop.name.clone(),
            found: infer.zonk(&body_ty),
        });
    }
    if !matches!(infer.zonk(&elem), SpecType::Var(_)) {
        return Err(TypeError::PropertyBodyNotPredicate {
            property: prop.name.clone(),
            found: infer.zonk(&body_ty),
        });
    }

    Ok(TypedProperty { def: prop.clone() })
}

fn check_decl(
    decl: &ContainerTypeDecl,
    properties: &[TypedProperty],
    interfaces: &InterfaceRegistry,
    builtins: &BuiltinRegistry,
) -> Result<TypedDecl, Vec<TypeError>> {
    let context = format!("type `{}`", decl.name);
    let mut errors = Vec::new();

    let mut seen: Vec<&str> = Vec::new();
    for bound in &decl.bounds {
        if seen.contains(&bound.as_str()) {
            errors.push(TypeError::DuplicateBound {
                decl: decl.name.clone(),
                name: bound.clone(),
            });
        } else {
            seen.push(bound);
        }
        if !interfaces.contains_key(bound) {
            errors.push(TypeError::UnknownInterface {
                name: bound.clone(),
                context: context.clone(),
            });
        }
    }

    // Properties are in scope as Con<t> -> Bool; a property that declares an
    // interface bound is only usable when the declaration also bounds it.
    let mut scope: BTreeMap<&str, Scheme> = BTreeMap::new();
    for p in properties {
        scope.insert(
            &p.def.name,
            Scheme::poly(
                [0],
                SpecType::arrow(SpecType::con(SpecType::Var(0)), SpecType::Bool),
            ),
        );
    }

    for conjunct in &decl.refinement.conjuncts {
        for var in conjunct.free_vars() {
            if let Some(p) = properties.iter().find(|p| p.def.name == var) {
                if let Some(required) = &p.def.bound {
                    if !decl.bounds.contains(required) {
                        errors.push(TypeError::OperationOutsideBound {
                            name: var.to_string(),
                            interface: required.clone(),
                            context: context.clone(),
                        });
                    }
                }
            }
        }

        let mut infer = Infer::new(builtins, interfaces);
        let con_ty = SpecType::con(infer.fresh());
        let mut binders = vec![(decl.var.clone(), con_ty)];
        match infer.infer(conjunct, &mut binders, &scope, &context) {
            Ok(ty) => {
                if infer.unify(&ty, &SpecType::Bool).is_err() {
                    errors.push(TypeError::TypeMismatch {
                        expected: SpecType::Bool,
                        actual: infer.zonk(&ty),
                        context: context.clone(),
                    });
                }
            }
            Err(e) => errors.push(e),
        }
    }

    if errors.is_empty() {
        Ok(TypedDecl { decl: decl.clone() })
    } else {
        Err(errors)
    }
}

struct Infer<'a> {
    subst: Vec<Option<SpecType>>,
    builtins: &'a BuiltinRegistry,
    interfaces: &'a InterfaceRegistry,
}

struct Mismatch;

impl<'a> Infer<'a> {
    fn new(builtins: &'a BuiltinRegistry, interfaces: &'a InterfaceRegistry) -> Infer<'a> {
        Infer {
            subst: Vec::new(),
            builtins,
            interfaces,
        }
    }

    fn fresh(&mut self) -> SpecType {
        let v = self.subst.len() as TyVar;
        self.subst.push(None);
        SpecType::Var(v)
    }

    fn instantiate(&mut self, scheme: &Scheme) -> SpecType {
        let mapping: BTreeMap<TyVar, SpecType> = scheme
            .vars
            .iter()
            .map(|v| (*v, self.fresh()))
            .collect();
        fn subst(t: &SpecType, mapping: &BTreeMap<TyVar, SpecType>) -> SpecType {
            match t {
                SpecType::Bool => SpecType::Bool,
                SpecType::Var(v) => mapping.get(v).cloned().unwrap_or(SpecType::Var(*v)),
                SpecType::Con(e) => SpecType::con(subst(e, mapping)),
                SpecType::Arrow(a, b) => {
                    SpecType::arrow(subst(a, mapping), subst(b, mapping))
                }
                SpecType::Pair(a, b) => SpecType::pair(subst(a, mapping), subst(b, mapping)),
            }
        }
        subst(&scheme.ty, &mapping)
    }

    /// Resolves a type under the current substitution.
    fn zonk(&self, t: &SpecType) -> SpecType {
        match t {
            SpecType::Bool => SpecType::Bool,
            SpecType::Var(v) => match self.subst.get(*v as usize).and_then(|s| s.as_ref()) {
                Some(bound) => self.zonk(&bound.clone()),
                None => SpecType::Var(*v),
            },
            SpecType::Con(e) => SpecType::con(self.zonk(e)),
            SpecType::Arrow(a, b) => SpecType::arrow(self.zonk(a), self.zonk(b)),
            SpecType::Pair(a, b) => SpecType::pair(self.zonk(a), self.zonk(b)),
        }
    }

    fn occurs(&self, v: TyVar, t: &SpecType) -> bool {
        match t {
            SpecType::Bool => false,
            SpecType::Var(w) => *w == v,
            SpecType::Con(e) => self.occurs(v, e),
            SpecType::Arrow(a, b) | SpecType::Pair(a, b) => {
                self.occurs(v, a) || self.occurs(v, b)
            }
        }
    }

    fn unify(&mut self, a: &SpecType, b: &SpecType) -> Result<(), Mismatch> {
        let a = self.zonk(a);
        let b = self.zonk(b);
        match (&a, &b) {
            (SpecType::Var(v), SpecType::Var(w)) if v == w => Ok(()),
            (SpecType::Var(v), other) | (other, SpecType::Var(v)) => {
                if self.occurs(*v, other) {
                    return Err(Mismatch);
                }
                self.subst[*v as usize] = Some(other.clone());
                Ok(())
            }
            (SpecType::Bool, SpecType::Bool) => Ok(()),
            (SpecType::Con(x), SpecType::Con(y)) => self.unify(x, y),
            (SpecType::Arrow(a1, b1), SpecType::Arrow(a2, b2))
            | (SpecType::Pair(a1, b1), SpecType::Pair(a2, b2)) => {
                self.unify(a1, a2)?;
                self.unify(b1, b2)
            }
            _ => Err(Mismatch),
        }
    }

    fn infer(
        &mut self,
        term: &Term,
        binders: &mut Vec<(String, SpecType)>,
        extra: &BTreeMap<&str, Scheme>,
        context: &str,
    ) -> Result<SpecType, TypeError> {
        match term {
            Term::Bool(_) => Ok(SpecType::Bool),
            Term::Var(name) => {
                // Lexical scope: binders shadow the extra scope, which
                // shadows the built-ins.
                if let Some((_, ty)) = binders.iter().rev().find(|(n, _)| n == name) {
                    return Ok(ty.clone());
                }
                if let Some(scheme) = extra.get(name.as_str()) {
                    return Ok(self.instantiate(&scheme.clone()));
                }
                if let Some(builtin) = self.builtins.get(name) {
                    let scheme = builtin.scheme.clone();
                    return Ok(self.instantiate(&scheme));
                }
                // An interface operation used without declaring its bound is
                // a distinct, more helpful error than a plain unbound name.
                for sig in self.interfaces.values() {
                    if sig.op(name).is_some() {
                        return Err(TypeError::OperationOutsideBound {
                            name: name.clone(),
                            interface: sig.name.clone(),
                            context: context.to_string(),
                        });
                    }
                }
                Err(TypeError::UnboundVariable {
                    name: name.clone(),
                    context: context.to_string(),
                })
            }
            Term::Lambda { param, body } => {
                let arg_ty = self.fresh();
                binders.push((param.clone(), arg_ty.clone()));
                let body_ty = self.infer(body, binders, extra, context)?;
                binders.pop();
                Ok(SpecType::arrow(arg_ty, body_ty))
            }
            Term::App { func, arg } => {
                let func_ty = self.infer(func, binders, extra, context)?;
                let arg_ty = self.infer(arg, binders, extra, context)?;
                let ret = self.fresh();
                let want = SpecType::arrow(arg_ty.clone(), ret.clone());
                if self.unify(&func_ty, &want).is_err() {
                    return Err(TypeError::TypeMismatch {
                        expected: self.zonk(&want),
                        actual: self.zonk(&func_ty),
                        context: context.to_string(),
                    });
                }
                Ok(self.zonk(&ret))
            }
        }
    }
}

/// Checks a standalone term against an expected type, with optional binders
/// already in scope. Used by the catalogue loader for preconditions and
/// model-operation definitions.
pub fn check_term_type(
    term: &Term,
    binder_types: &[(String, SpecType)],
    expected: &SpecType,
    builtins: &BuiltinRegistry,
    interfaces: &InterfaceRegistry,
    context: &str,
) -> Result<(), TypeError> {
    let mut infer = Infer::new(builtins, interfaces);
    // Binder types may reuse variables 0.. as their own namespace; shift them
    // into fresh inference variables.
    let mut mapping: BTreeMap<TyVar, SpecType> = BTreeMap::new();
    let mut shift = |t: &SpecType, infer: &mut Infer| -> SpecType {
        fn walk(
            t: &SpecType,
            mapping: &mut BTreeMap<TyVar, SpecType>,
            infer: &mut Infer,
        ) -> SpecType {
            match t {
                SpecType::Bool => SpecType::Bool,
                SpecType::Var(v) => mapping
                    .entry(*v)
                    .or_insert_with(|| infer.fresh())
                    .clone(),
                SpecType::Con(e) => SpecType::con(walk(e, mapping, infer)),
                SpecType::Arrow(a, b) => {
                    SpecType::arrow(walk(a, mapping, infer), walk(b, mapping, infer))
                }
                SpecType::Pair(a, b) => {
                    SpecType::pair(walk(a, mapping, infer), walk(b, mapping, infer))
                }
            }
        }
        walk(t, &mut mapping, infer)
    };

    let mut binders: Vec<(String, SpecType)> = Vec::new();
    for (name, ty) in binder_types {
        let shifted = shift(ty, &mut infer);
        binders.push((name.clone(), shifted));
    }
    let expected = shift(expected, &mut infer);

    let actual = infer.infer(term, &mut binders, &BTreeMap::new(), context)?;
    if infer.unify(&actual, &expected).is_err() {
        return Err(TypeError::TypeMismatch {
            expected: infer.zonk(&expected),
            actual: infer.zonk(&actual),
            context: context.to_string(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library_spec::catalogue::builtin_interfaces;
    use crate::spec_lang::parser::parse_spec;

    fn check(src: &str) -> Result<TypedSpec, Vec<TypeError>> {
        let spec = parse_spec(src).unwrap();
        typecheck(&spec, &builtin_interfaces(), &BuiltinRegistry::standard())
    }

    #[test]
    fn unique_types_as_a_predicate() {
        let spec = parse_spec(
            "property unique { \\c -> (for-all-elems (\\a -> (unique-count? a c)) c) }",
        )
        .unwrap();
        let prop = spec.property("unique").unwrap();
        let ty = infer_property_type(
            prop,
            &builtin_interfaces(),
            &BuiltinRegistry::standard(),
        )
        .unwrap();
        match ty {
            SpecType::Arrow(from, to) => {
                assert!(matches!(*from, SpecType::Con(ref e) if matches!(**e, SpecType::Var(_))));
                assert_eq!(*to, SpecType::Bool);
            }
            other => panic!("unexpected type {other}"),
        }
    }

    #[test]
    fn identity_is_not_a_predicate() {
        let errs = check("property bad { \\c -> c }").unwrap_err();
        assert!(matches!(
            errs[0],
            TypeError::PropertyBodyNotPredicate { .. }
        ));
        let shown = errs[0].to_string();
        assert!(shown.contains("Con<"), "type shown: {shown}");
    }

    #[test]
    fn self_application_is_an_occurs_failure() {
        let errs = check("property p { \\c -> (c c) }").unwrap_err();
        assert!(matches!(errs[0], TypeError::TypeMismatch { .. }));
    }

    #[test]
    fn lifo_typechecks_under_its_bound() {
        let ok = check("property lifo { \\c <: StackT -> (forall \\x. pop (push c x) == x) }");
        assert!(ok.is_ok(), "{ok:?}");
    }

    #[test]
    fn operations_require_their_bound() {
        let errs =
            check("property lifo { \\c -> (forall \\x. pop (push c x) == x) }").unwrap_err();
        assert!(
            matches!(&errs[0], TypeError::OperationOutsideBound { name, .. } if name == "pop" || name == "push")
        );
    }

    #[test]
    fn declarations_check_their_bounds_and_conjuncts() {
        let ok = check(
            "property unique { \\c -> (for-all-elems (\\a -> (unique-count? a c)) c) }\n\
             type UniqueCon<T> = {c <: (ContainerT) | (unique c)}",
        );
        assert!(ok.is_ok(), "{ok:?}");

        let errs = check("type Bad<T> = {c <: (NoSuchT) | true}").unwrap_err();
        assert!(matches!(errs[0], TypeError::UnknownInterface { .. }));
    }

    #[test]
    fn bounded_property_requires_matching_decl_bound() {
        let errs = check(
            "property lifo { \\c <: StackT -> (forall \\x. pop (push c x) == x) }\n\
             type StackCon<T> = {c <: (ContainerT) | (lifo c)}",
        )
        .unwrap_err();
        assert!(matches!(
            errs[0],
            TypeError::OperationOutsideBound { ref interface, .. } if interface == "StackT"
        ));
    }

    #[test]
    fn unknown_property_in_refinement_is_unbound() {
        let errs = check("type X<T> = {c <: (ContainerT) | (mystery c)}").unwrap_err();
        assert!(matches!(errs[0], TypeError::UnboundVariable { .. }));
    }
}
