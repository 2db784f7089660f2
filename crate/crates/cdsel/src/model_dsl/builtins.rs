//! The built-in vocabulary: combinators, element predicates, list
//! primitives, and the native model operations, each with an arity and a
//! type scheme. Quantifiers in the schemes appear only at the outermost
//! level.

use std::collections::BTreeMap;

use super::model_ops::NativeModelOp;
use crate::spec_lang::types::{Scheme, SpecType};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    And,
    Or,
    Not,
    Equal,
    Leq,
    Geq,
    UniqueCount,
    ForAllElems,
    ForAllConsecutivePairs,
    Forall,
    Nil,
    Cons,
    Append,
    SortAscending,
    DedupAdjacent,
    Init,
    MemberP,
    RemoveFirst,
    Take,
    Last,
    Length,
    NullP,
    MakePair,
    Fst,
    Snd,
    Model(NativeModelOp),
}

#[derive(Debug, Clone)]
pub struct Builtin {
    pub name: String,
    pub arity: usize,
    pub scheme: Scheme,
    pub kind: BuiltinKind,
}

/// Name-indexed table of every built-in.
#[derive(Debug, Clone)]
pub struct BuiltinRegistry {
    map: BTreeMap<String, Builtin>,
}

fn a() -> SpecType {
    SpecType::Var(0)
}

fn b() -> SpecType {
    SpecType::Var(1)
}

fn con_a() -> SpecType {
    SpecType::con(a())
}

impl BuiltinRegistry {
    pub fn standard() -> BuiltinRegistry {
        use BuiltinKind::*;
        use SpecType::Bool;

        let mut reg = BuiltinRegistry { map: BTreeMap::new() };
        let mut def = |name: &str, arity: usize, scheme: Scheme, kind: BuiltinKind| {
            reg.map.insert(
                name.to_string(),
                Builtin {
                    name: name.to_string(),
                    arity,
                    scheme,
                    kind,
                },
            );
        };

        let mono2 = |x: SpecType, y: SpecType, r: SpecType| Scheme::mono(SpecType::arrows([x, y], r));
        let poly = |ty: SpecType| Scheme::poly([0], ty);

        def("and", 2, mono2(Bool, Bool, Bool), And);
        def("or", 2, mono2(Bool, Bool, Bool), Or);
        def("not", 1, Scheme::mono(SpecType::arrow(Bool, Bool)), Not);

        def("equal?", 2, poly(SpecType::arrows([a(), a()], Bool)), Equal);
        def("leq?", 2, poly(SpecType::arrows([a(), a()], Bool)), Leq);
        def("geq?", 2, poly(SpecType::arrows([a(), a()], Bool)), Geq);
        def(
            "unique-count?",
            2,
            poly(SpecType::arrows([a(), con_a()], Bool)),
            UniqueCount,
        );

        def(
            "for-all-elems",
            2,
            poly(SpecType::arrows([SpecType::arrow(a(), Bool), con_a()], Bool)),
            ForAllElems,
        );
        def(
            "for-all-consecutive-pairs",
            2,
            poly(SpecType::arrows(
                [con_a(), SpecType::arrows([a(), a()], Bool)],
                Bool,
            )),
            ForAllConsecutivePairs,
        );
        def(
            "forall",
            1,
            poly(SpecType::arrow(SpecType::arrow(a(), Bool), Bool)),
            Forall,
        );

        def("nil", 0, poly(con_a()), Nil);
        def("cons", 2, poly(SpecType::arrows([a(), con_a()], con_a())), Cons);
        def(
            "append",
            2,
            poly(SpecType::arrows([con_a(), con_a()], con_a())),
            Append,
        );
        def(
            "sort-ascending",
            1,
            poly(SpecType::arrow(con_a(), con_a())),
            SortAscending,
        );
        def(
            "dedup-adjacent",
            1,
            poly(SpecType::arrow(con_a(), con_a())),
            DedupAdjacent,
        );
        def("init", 1, poly(SpecType::arrow(con_a(), con_a())), Init);
        def("member?", 2, poly(SpecType::arrows([a(), con_a()], Bool)), MemberP);
        def(
            "remove-first",
            2,
            poly(SpecType::arrows([a(), con_a()], con_a())),
            RemoveFirst,
        );
        def("take", 2, poly(SpecType::arrows([con_a(), a()], con_a())), Take);
        def("last", 1, poly(SpecType::arrow(con_a(), a())), Last);
        def("length", 1, poly(SpecType::arrow(con_a(), a())), Length);
        def("null?", 1, poly(SpecType::arrow(con_a(), Bool)), NullP);
        def(
            "pair",
            2,
            Scheme::poly([0, 1], SpecType::arrows([a(), b()], SpecType::pair(a(), b()))),
            MakePair,
        );
        def(
            "fst",
            1,
            Scheme::poly([0, 1], SpecType::arrow(SpecType::pair(a(), b()), a())),
            Fst,
        );
        def(
            "snd",
            1,
            Scheme::poly([0, 1], SpecType::arrow(SpecType::pair(a(), b()), b())),
            Snd,
        );

        for op in NativeModelOp::all() {
            let (arity, ty) = model_op_type(*op);
            def(op.name(), arity, poly(ty), Model(*op));
        }

        reg
    }

    pub fn get(&self, name: &str) -> Option<&Builtin> {
        self.map.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.map.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(|s| s.as_str())
    }
}

impl Default for BuiltinRegistry {
    fn default() -> Self {
        BuiltinRegistry::standard()
    }
}

fn model_op_type(op: NativeModelOp) -> (usize, SpecType) {
    let ret = if op.returns_value() {
        let value = match op {
            NativeModelOp::Contains | NativeModelOp::IsEmpty => SpecType::Bool,
            _ => a(),
        };
        SpecType::pair(con_a(), value)
    } else {
        con_a()
    };
    if op.takes_aux() {
        (2, SpecType::arrows([con_a(), a()], ret))
    } else {
        (1, SpecType::arrow(con_a(), ret))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_contains_the_required_names() {
        let reg = BuiltinRegistry::standard();
        for name in [
            "for-all-elems",
            "for-all-consecutive-pairs",
            "forall",
            "unique-count?",
            "leq?",
            "geq?",
            "equal?",
            "and",
            "or",
            "not",
            "append",
            "sort-ascending",
            "dedup-adjacent",
            "member?",
            "remove-first",
            "take",
            "last",
            "length",
            "null?",
            "cons",
            "pair",
            "nil",
            "model-insert-seq",
            "model-pop",
        ] {
            assert!(reg.contains(name), "missing builtin {name}");
        }
    }

    #[test]
    fn arities_match_schemes() {
        let reg = BuiltinRegistry::standard();
        for name in reg.names() {
            let b = reg.get(name).unwrap();
            let mut arrows = 0;
            let mut ty = &b.scheme.ty;
            while let SpecType::Arrow(_, rest) = ty {
                arrows += 1;
                ty = rest;
            }
            assert!(
                arrows >= b.arity,
                "builtin {name} declares arity {} but its type has {arrows} arrows",
                b.arity
            );
        }
    }
}
