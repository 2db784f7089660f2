//! The property specification language: syntax, parser, printer, and type
//! checker.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod typecheck;
pub mod types;

pub use ast::{
    flatten_conjuncts, ContainerTypeDecl, Decl, PropertyDef, Refinement, SpecFile, Term,
};
pub use parser::{parse_spec, parse_term, ParseError};
pub use printer::{print_spec, print_term};
pub use typecheck::{typecheck, TypeError, TypedSpec};
pub use types::{Scheme, SpecType, TyVar};

/// Splits a declaration's refinement into independently checkable conjuncts,
/// flattening any conjunctions nested inside the stored terms.
pub fn refinement_conjuncts(decl: &ContainerTypeDecl) -> Vec<Term> {
    decl.refinement
        .conjuncts
        .iter()
        .flat_map(flatten_conjuncts)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_conjuncts_flattens_nested_conjunctions() {
        let spec = parse_spec("type X<T> = {c <: B | ((a c) and ((b c) and (d c)))}").unwrap();
        let decl = spec.container_types().next().unwrap();
        let conjuncts = refinement_conjuncts(decl);
        let printed: Vec<String> = conjuncts.iter().map(print_term).collect();
        assert_eq!(printed, vec!["(a c)", "(b c)", "(d c)"]);
    }

    #[test]
    fn single_conjunct_stays_single() {
        let spec = parse_spec("type X<T> = {c <: B | (a c)}").unwrap();
        let decl = spec.container_types().next().unwrap();
        assert_eq!(refinement_conjuncts(decl).len(), 1);
    }
}
