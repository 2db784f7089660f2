//! Pretty printer. Output re-parses to an equal syntax tree: applications are
//! parenthesized Lisp-style, `and`/`or` applications print back in their
//! infix form, and lambdas in argument position are parenthesized.

use super::ast::{Decl, PropertyDef, SpecFile, Term};

pub fn print_term(term: &Term) -> String {
    let mut out = String::new();
    write_term(term, &mut out);
    out
}

fn write_term(term: &Term, out: &mut String) {
    match term {
        Term::Bool(true) => out.push_str("true"),
        Term::Bool(false) => out.push_str("false"),
        Term::Var(name) => out.push_str(name),
        Term::Lambda { param, body } => {
            out.push('\\');
            out.push_str(param);
            out.push_str(" -> ");
            write_term(body, out);
        }
        Term::App { .. } => {
            let (head, args) = term.spine();
            if let (Term::Var(name), [lhs, rhs]) = (head, args.as_slice()) {
                if name == "and" || name == "or" {
                    out.push('(');
                    write_arg(lhs, out);
                    out.push(' ');
                    out.push_str(name);
                    out.push(' ');
                    write_arg(rhs, out);
                    out.push(')');
                    return;
                }
            }
            out.push('(');
            write_arg(head, out);
            for arg in args {
                out.push(' ');
                write_arg(arg, out);
            }
            out.push(')');
        }
    }
}

/// In argument position a lambda needs its own parentheses; applications
/// bring theirs.
fn write_arg(term: &Term, out: &mut String) {
    match term {
        Term::Lambda { .. } => {
            out.push('(');
            write_term(term, out);
            out.push(')');
        }
        _ => write_term(term, out),
    }
}

fn write_property(p: &PropertyDef, out: &mut String) {
    out.push_str("property ");
    out.push_str(&p.name);
    out.push_str(" { \\");
    let Term::Lambda { param, body } = &p.body else {
        unreachable!("property bodies are lambdas by construction");
    };
    out.push_str(param);
    if let Some(bound) = &p.bound {
        out.push_str(" <: ");
        out.push_str(bound);
    }
    out.push_str(" -> ");
    write_term(body, out);
    out.push_str(" }\n");
}

pub fn print_spec(spec: &SpecFile) -> String {
    let mut out = String::new();
    for decl in &spec.decls {
        match decl {
            Decl::Property(p) => write_property(p, &mut out),
            Decl::ContainerType(t) => {
                out.push_str("type ");
                out.push_str(&t.name);
                out.push('<');
                out.push_str(&t.elem_param);
                out.push_str("> = {");
                out.push_str(&t.var);
                out.push_str(" <: (");
                out.push_str(&t.bounds.join(", "));
                out.push_str(") | ");
                for (i, conjunct) in t.refinement.conjuncts.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" and ");
                    }
                    write_term(conjunct, &mut out);
                }
                out.push_str("}\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec_lang::parser::parse_spec;

    const CORPUS: &[&str] = &[
        "property unique { \\c -> (for-all-elems (\\a -> (unique-count? a c)) c) }",
        "property ascending { \\c -> (for-all-consecutive-pairs c leq?) }",
        "property descending { \\c -> (for-all-consecutive-pairs c geq?) }",
        "property lifo { \\c <: StackT -> (forall \\x. pop (push c x) == x) }",
        "type UniqueCon<T> = {c <: (ContainerT) | (unique c)}",
        "type AscendingIndexableCon<T> = {c <: (ContainerT, IndexableT) | (ascending c)}",
        "type StrictlyAscendingCon<T> = {c <: (ContainerT) | ((unique c) and (ascending c))}",
        "type StackCon<T> = {c <: (ContainerT, StackT) | (lifo c)}",
        "property t { \\c -> true or false and (p c) }",
    ];

    #[test]
    fn print_parse_round_trip() {
        for src in CORPUS {
            let spec = parse_spec(src).unwrap();
            let printed = print_spec(&spec);
            let reparsed = parse_spec(&printed)
                .unwrap_or_else(|e| panic!("printed form of {src:?} failed to parse: {e:?}"));
            assert_eq!(spec, reparsed, "round trip for {src:?} via {printed:?}");
        }
    }
}
