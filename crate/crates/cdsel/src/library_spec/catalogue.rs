//! Catalogue loading: the `.cts` declarative format for interface signatures
//! and container specifications.
//!
//! A catalogue directory holds `interfaces.cts` plus one file per container:
//!
//! ```text
//! container BTreeSet
//! implements ContainerT, IndexableT
//! invariant { \xs -> (xs == (dedup-adjacent (sort-ascending xs))) }
//! op insert post model-insert-sorted-unique
//! op remove pre { \xs -> \x -> true } post model-remove
//! ...
//! ```
//!
//! `interfaces.cts` declares the operation signatures:
//!
//! ```text
//! interface ContainerT {
//!   observer len() -> size
//!   mutator insert(elem)
//!   ...
//! }
//! ```
//!
//! Preconditions default to `true` when omitted. `model <name> { <lambda> }`
//! clauses define container-local model operations in the model DSL; they
//! shadow same-named registry operations. Every operation of every declared
//! interface must have exactly one triple.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use super::hoare::{ContainerSpec, HoareSpec};
use super::interface::{InterfaceRegistry, InterfaceSig, OpShape};
use crate::model_dsl::builtins::BuiltinRegistry;
use crate::model_dsl::model_ops::NativeModelOp;
use crate::spec_lang::ast::Term;
use crate::spec_lang::lexer::{lex, Pos, Spanned, Token};
use crate::spec_lang::parser::parse_term_at;
use crate::spec_lang::typecheck::{check_term_type, TypeError};
use crate::spec_lang::types::SpecType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error("{file}: {message}")]
    Io { file: String, message: String },
    #[error("{file}:{pos}: {message}")]
    Malformed { file: String, pos: Pos, message: String },
    #[error("duplicate container name `{name}`")]
    DuplicateContainer { name: String },
    #[error("container `{container}` implements unknown interface `{name}`")]
    UnknownInterface { container: String, name: String },
    #[error("container `{container}`: operation `{op}` is not part of any implemented interface")]
    UnknownOp { container: String, op: String },
    #[error("container `{container}`: duplicate triple for operation `{op}`")]
    DuplicateTriple { container: String, op: String },
    #[error("incomplete specification: container `{container}` implements `{interface}` but has no triple for `{op}`")]
    MissingTriple {
        container: String,
        interface: String,
        op: String,
    },
    #[error("container `{container}`: operation `{op}` names unknown model operation `{model_op}`")]
    UnknownModelOp {
        container: String,
        op: String,
        model_op: String,
    },
    #[error("container `{container}`: operation `{op}`: model operation `{model_op}` does not fit the operation's shape")]
    IncompatibleModelOp {
        container: String,
        op: String,
        model_op: String,
    },
    #[error("container `{container}`: {error}")]
    Type { container: String, error: TypeError },
}

/// A loaded, validated catalogue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalogue {
    pub interfaces: InterfaceRegistry,
    pub containers: BTreeMap<String, ContainerSpec>,
}

impl Catalogue {
    pub fn empty() -> Catalogue {
        Catalogue {
            interfaces: InterfaceRegistry::new(),
            containers: BTreeMap::new(),
        }
    }

    pub fn container(&self, name: &str) -> Option<&ContainerSpec> {
        self.containers.get(name)
    }

    pub fn container_names(&self) -> Vec<&str> {
        self.containers.keys().map(|s| s.as_str()).collect()
    }

    /// A sub-catalogue with only the named containers.
    pub fn restrict(&self, names: &[&str]) -> Catalogue {
        Catalogue {
            interfaces: self.interfaces.clone(),
            containers: self
                .containers
                .iter()
                .filter(|(name, _)| names.contains(&name.as_str()))
                .map(|(name, spec)| (name.clone(), spec.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Catalogue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} interfaces, {} containers",
            self.interfaces.len(),
            self.containers.len()
        )
    }
}

/// The three interface signatures the shipped catalogue is built from.
pub fn builtin_interfaces() -> InterfaceRegistry {
    use OpShape::*;
    let mut reg = InterfaceRegistry::new();
    for sig in [
        InterfaceSig {
            name: "ContainerT".to_string(),
            operations: vec![
                ("len".to_string(), ObserverSize),
                ("contains".to_string(), ObserverElemBool),
                ("is_empty".to_string(), ObserverBool),
                ("insert".to_string(), MutatorElemUnit),
                ("clear".to_string(), MutatorUnit),
                ("remove".to_string(), MutatorElemOptElem),
            ],
        },
        InterfaceSig {
            name: "IndexableT".to_string(),
            operations: vec![
                ("first".to_string(), ObserverOptElem),
                ("last".to_string(), ObserverOptElem),
                ("nth".to_string(), ObserverIndexOptElem),
            ],
        },
        InterfaceSig {
            name: "StackT".to_string(),
            operations: vec![
                ("push".to_string(), MutatorElemUnit),
                ("pop".to_string(), MutatorOptElem),
            ],
        },
    ] {
        reg.insert(sig.name.clone(), sig);
    }
    reg
}

/// An unresolved container file.
#[derive(Debug, Clone)]
pub struct RawContainer {
    pub name: String,
    pub interfaces: Vec<String>,
    pub invariant: Option<Term>,
    pub model_ops: BTreeMap<String, Term>,
    pub ops: Vec<RawOp>,
}

#[derive(Debug, Clone)]
pub struct RawOp {
    pub name: String,
    pub pre: Option<Term>,
    pub post: String,
}

struct Cts {
    file: String,
    tokens: Vec<Spanned>,
    idx: usize,
}

impl Cts {
    fn new(src: &str, file: &str) -> Result<Cts, LoadError> {
        let tokens = lex(src).map_err(|e| LoadError::Malformed {
            file: file.to_string(),
            pos: e.pos,
            message: e.message,
        })?;
        Ok(Cts {
            file: file.to_string(),
            tokens,
            idx: 0,
        })
    }

    fn pos(&self) -> Pos {
        self.tokens
            .get(self.idx)
            .or_else(|| self.tokens.last())
            .map(|s| s.pos)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn fail(&self, message: impl Into<String>) -> LoadError {
        LoadError::Malformed {
            file: self.file.clone(),
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.idx >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|s| &s.token)
    }

    fn peek_word(&self) -> Option<&str> {
        match self.peek() {
            Some(Token::Ident(w)) => Some(w.as_str()),
            _ => None,
        }
    }

    fn eat_token(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect_token(&mut self, t: Token) -> Result<(), LoadError> {
        if self.eat_token(&t) {
            Ok(())
        } else {
            Err(self.fail(format!("expected {t}")))
        }
    }

    fn ident(&mut self) -> Result<String, LoadError> {
        match self.peek() {
            Some(Token::Ident(_)) => {
                let Some(Token::Ident(name)) = self.tokens.get(self.idx).map(|s| s.token.clone())
                else {
                    unreachable!()
                };
                self.idx += 1;
                Ok(name)
            }
            _ => Err(self.fail("expected an identifier")),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), LoadError> {
        match self.peek_word() {
            Some(w) if w == word => {
                self.idx += 1;
                Ok(())
            }
            _ => Err(self.fail(format!("expected `{word}`"))),
        }
    }

    fn brace_term(&mut self) -> Result<Term, LoadError> {
        self.expect_token(Token::LBrace)?;
        let (term, next) = parse_term_at(&self.tokens, self.idx).map_err(|e| LoadError::Malformed {
            file: self.file.clone(),
            pos: e.pos,
            message: e.message,
        })?;
        self.idx = next;
        self.expect_token(Token::RBrace)?;
        Ok(term)
    }
}

/// Parses an `interfaces.cts` source.
pub fn parse_interfaces(src: &str, file: &str) -> Result<Vec<InterfaceSig>, LoadError> {
    let mut p = Cts::new(src, file)?;
    let mut sigs = Vec::new();
    while !p.at_end() {
        p.keyword("interface")?;
        let name = p.ident()?;
        p.expect_token(Token::LBrace)?;
        let mut operations: Vec<(String, OpShape)> = Vec::new();
        while !p.eat_token(&Token::RBrace) {
            let role = p.ident()?;
            let op = p.ident()?;
            p.expect_token(Token::LParen)?;
            let arg = if p.peek() == Some(&Token::RParen) {
                None
            } else {
                Some(p.ident()?)
            };
            p.expect_token(Token::RParen)?;
            let ret = if p.eat_token(&Token::Arrow) {
                Some(p.ident()?)
            } else {
                None
            };
            let shape = op_shape(&role, arg.as_deref(), ret.as_deref())
                .ok_or_else(|| p.fail(format!("unsupported operation signature for `{op}`")))?;
            if operations.iter().any(|(n, _)| *n == op) {
                return Err(p.fail(format!("duplicate operation `{op}` in interface `{name}`")));
            }
            operations.push((op, shape));
        }
        sigs.push(InterfaceSig { name, operations });
    }
    Ok(sigs)
}

fn op_shape(role: &str, arg: Option<&str>, ret: Option<&str>) -> Option<OpShape> {
    use OpShape::*;
    Some(match (role, arg, ret) {
        ("mutator", Some("elem"), None) => MutatorElemUnit,
        ("mutator", None, None) => MutatorUnit,
        ("mutator", Some("elem"), Some("elem?")) => MutatorElemOptElem,
        ("mutator", None, Some("elem?")) => MutatorOptElem,
        ("observer", Some("elem"), Some("bool")) => ObserverElemBool,
        ("observer", None, Some("bool")) => ObserverBool,
        ("observer", None, Some("size")) => ObserverSize,
        ("observer", Some("index"), Some("elem?")) => ObserverIndexOptElem,
        ("observer", None, Some("elem?")) => ObserverOptElem,
        _ => return None,
    })
}

/// Parses one container `.cts` source.
pub fn parse_container(src: &str, file: &str) -> Result<RawContainer, LoadError> {
    let mut p = Cts::new(src, file)?;
    p.keyword("container")?;
    let name = p.ident()?;
    p.keyword("implements")?;
    let mut interfaces = vec![p.ident()?];
    while p.eat_token(&Token::Comma) {
        interfaces.push(p.ident()?);
    }

    let mut invariant = None;
    let mut model_ops = BTreeMap::new();
    let mut ops = Vec::new();

    while !p.at_end() {
        match p.peek_word() {
            Some("invariant") => {
                p.idx += 1;
                if invariant.is_some() {
                    return Err(p.fail("duplicate `invariant` clause"));
                }
                invariant = Some(p.brace_term()?);
            }
            Some("model") => {
                p.idx += 1;
                let op_name = p.ident()?;
                let term = p.brace_term()?;
                if model_ops.insert(op_name.clone(), term).is_some() {
                    return Err(p.fail(format!("duplicate model operation `{op_name}`")));
                }
            }
            Some("op") => {
                p.idx += 1;
                let op = p.ident()?;
                let pre = if p.peek_word() == Some("pre") {
                    p.idx += 1;
                    Some(p.brace_term()?)
                } else {
                    None
                };
                p.keyword("post")?;
                let post = p.ident()?;
                ops.push(RawOp { name: op, pre, post });
            }
            _ => return Err(p.fail("expected `invariant`, `model`, or `op`")),
        }
    }

    Ok(RawContainer {
        name,
        interfaces,
        invariant,
        model_ops,
        ops,
    })
}

fn default_pre(shape: OpShape) -> Term {
    if shape.takes_aux() {
        Term::lam("xs", Term::lam("x", Term::Bool(true)))
    } else {
        Term::lam("xs", Term::Bool(true))
    }
}

fn native_fits_shape(op: NativeModelOp, shape: OpShape) -> bool {
    use NativeModelOp::*;
    let value_is_bool = matches!(op, Contains | IsEmpty);
    op.takes_aux() == shape.takes_aux()
        && op.returns_value() == shape.returns_value()
        && (!shape.returns_value() || value_is_bool == shape.value_is_bool())
}

fn expected_model_op_type(shape: OpShape) -> SpecType {
    let a = SpecType::Var(0);
    let con = SpecType::con(a.clone());
    let value = if shape.value_is_bool() { SpecType::Bool } else { a.clone() };
    let ret = if shape.returns_value() {
        SpecType::pair(con.clone(), value)
    } else {
        con.clone()
    };
    if shape.takes_aux() {
        SpecType::arrows([con, a], ret)
    } else {
        SpecType::arrow(con, ret)
    }
}

/// Resolves raw parses into a validated catalogue.
pub fn assemble(
    interfaces: InterfaceRegistry,
    raw: Vec<RawContainer>,
    builtins: &BuiltinRegistry,
) -> Result<Catalogue, Vec<LoadError>> {
    let mut errors = Vec::new();
    let mut containers: BTreeMap<String, ContainerSpec> = BTreeMap::new();

    for rc in raw {
        if containers.contains_key(&rc.name) {
            errors.push(LoadError::DuplicateContainer { name: rc.name.clone() });
            continue;
        }
        match assemble_container(rc, &interfaces, builtins) {
            Ok(spec) => {
                containers.insert(spec.name.clone(), spec);
            }
            Err(mut e) => errors.append(&mut e),
        }
    }

    if errors.is_empty() {
        Ok(Catalogue { interfaces, containers })
    } else {
        Err(errors)
    }
}

fn assemble_container(
    rc: RawContainer,
    interfaces: &InterfaceRegistry,
    builtins: &BuiltinRegistry,
) -> Result<ContainerSpec, Vec<LoadError>> {
    let mut errors = Vec::new();
    let container = rc.name.clone();

    let mut shapes: BTreeMap<&str, (OpShape, &str)> = BTreeMap::new();
    for iface in &rc.interfaces {
        match interfaces.get(iface) {
            Some(sig) => {
                for (op, shape) in &sig.operations {
                    shapes.entry(op).or_insert((*shape, iface));
                }
            }
            None => errors.push(LoadError::UnknownInterface {
                container: container.clone(),
                name: iface.clone(),
            }),
        }
    }

    let mut triples: BTreeMap<String, HoareSpec> = BTreeMap::new();
    for op in &rc.ops {
        let Some((shape, _)) = shapes.get(op.name.as_str()) else {
            errors.push(LoadError::UnknownOp {
                container: container.clone(),
                op: op.name.clone(),
            });
            continue;
        };
        if triples.contains_key(&op.name) {
            errors.push(LoadError::DuplicateTriple {
                container: container.clone(),
                op: op.name.clone(),
            });
            continue;
        }

        // The postcondition must name a model operation that exists and
        // fits the operation's shape.
        if let Some(local) = rc.model_ops.get(&op.post) {
            let context = format!("model operation `{}`", op.post);
            if let Err(error) = check_term_type(
                local,
                &[],
                &expected_model_op_type(*shape),
                builtins,
                interfaces,
                &context,
            ) {
                errors.push(LoadError::Type {
                    container: container.clone(),
                    error,
                });
            }
        } else {
            match NativeModelOp::by_name(&op.post) {
                Some(native) => {
                    if !native_fits_shape(native, *shape) {
                        errors.push(LoadError::IncompatibleModelOp {
                            container: container.clone(),
                            op: op.name.clone(),
                            model_op: op.post.clone(),
                        });
                    }
                }
                None => {
                    errors.push(LoadError::UnknownModelOp {
                        container: container.clone(),
                        op: op.name.clone(),
                        model_op: op.post.clone(),
                    });
                }
            }
        }

        let pre = op.pre.clone().unwrap_or_else(|| default_pre(*shape));
        let expected_pre_ty = if shape.takes_aux() {
            SpecType::arrows(
                [SpecType::con(SpecType::Var(0)), SpecType::Var(0)],
                SpecType::Bool,
            )
        } else {
            SpecType::arrow(SpecType::con(SpecType::Var(0)), SpecType::Bool)
        };
        if let Err(error) = check_term_type(
            &pre,
            &[],
            &expected_pre_ty,
            builtins,
            interfaces,
            &format!("precondition of `{}`", op.name),
        ) {
            errors.push(LoadError::Type {
                container: container.clone(),
                error,
            });
        }

        triples.insert(
            op.name.clone(),
            HoareSpec {
                op: op.name.clone(),
                shape: *shape,
                pre,
                post_model_op: op.post.clone(),
            },
        );
    }

    // Completeness: every operation of every implemented interface is
    // specified.
    for iface in &rc.interfaces {
        if let Some(sig) = interfaces.get(iface) {
            for (op, _) in &sig.operations {
                if !triples.contains_key(op) {
                    errors.push(LoadError::MissingTriple {
                        container: container.clone(),
                        interface: iface.clone(),
                        op: op.clone(),
                    });
                }
            }
        }
    }

    let invariant = rc
        .invariant
        .unwrap_or_else(|| Term::lam("xs", Term::Bool(true)));
    if let Err(error) = check_term_type(
        &invariant,
        &[],
        &SpecType::arrow(SpecType::con(SpecType::Var(0)), SpecType::Bool),
        builtins,
        interfaces,
        "invariant",
    ) {
        errors.push(LoadError::Type {
            container: container.clone(),
            error,
        });
    }

    if errors.is_empty() {
        Ok(ContainerSpec {
            name: rc.name,
            interfaces: rc.interfaces,
            invariant_pre: invariant,
            triples,
            model_ops: rc.model_ops,
        })
    } else {
        Err(errors)
    }
}

/// Loads a catalogue directory: `interfaces.cts` plus `<container>.cts`
/// files, in lexicographic filename order.
pub fn load_catalogue(path: impl AsRef<Path>) -> Result<Catalogue, Vec<LoadError>> {
    let path = path.as_ref();
    let builtins = BuiltinRegistry::standard();
    let mut errors = Vec::new();

    let read = |p: &Path| -> Result<String, LoadError> {
        std::fs::read_to_string(p).map_err(|e| LoadError::Io {
            file: p.display().to_string(),
            message: e.to_string(),
        })
    };

    let mut files: Vec<_> = match std::fs::read_dir(path) {
        Ok(dir) => dir
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|ext| ext == "cts"))
            .collect(),
        Err(e) => {
            return Err(vec![LoadError::Io {
                file: path.display().to_string(),
                message: e.to_string(),
            }])
        }
    };
    files.sort();

    let mut interfaces = InterfaceRegistry::new();
    let mut raw = Vec::new();
    for file in &files {
        let name = file.display().to_string();
        let src = match read(file) {
            Ok(s) => s,
            Err(e) => {
                errors.push(e);
                continue;
            }
        };
        let is_interface_file = src
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .is_some_and(|l| l.starts_with("interface"));
        if is_interface_file {
            match parse_interfaces(&src, &name) {
                Ok(sigs) => {
                    for sig in sigs {
                        interfaces.insert(sig.name.clone(), sig);
                    }
                }
                Err(e) => errors.push(e),
            }
        } else {
            match parse_container(&src, &name) {
                Ok(rc) => raw.push(rc),
                Err(e) => errors.push(e),
            }
        }
    }

    if !errors.is_empty() {
        return Err(errors);
    }
    assemble(interfaces, raw, &builtins)
}

#[cfg(test)]
mod tests {
    use super::*;

    const IFACES: &str = r#"
interface ContainerT {
  observer len() -> size
  observer contains(elem) -> bool
  observer is_empty() -> bool
  mutator insert(elem)
  mutator clear()
  mutator remove(elem) -> elem?
}
interface StackT {
  mutator push(elem)
  mutator pop() -> elem?
}
"#;

    #[test]
    fn parses_interfaces() {
        let sigs = parse_interfaces(IFACES, "interfaces.cts").unwrap();
        assert_eq!(sigs.len(), 2);
        assert_eq!(sigs[0].name, "ContainerT");
        assert_eq!(sigs[0].op("remove"), Some(OpShape::MutatorElemOptElem));
        assert_eq!(sigs[1].op("pop"), Some(OpShape::MutatorOptElem));
    }

    fn container_src(post_insert: &str) -> String {
        format!(
            r#"
container Demo
implements ContainerT
invariant {{ \xs -> true }}
op len post model-len
op contains post model-contains
op is_empty post model-is-empty
op insert post {post_insert}
op clear post model-clear
op remove post model-remove
"#
        )
    }

    fn iface_reg() -> InterfaceRegistry {
        let mut reg = InterfaceRegistry::new();
        for sig in parse_interfaces(IFACES, "interfaces.cts").unwrap() {
            reg.insert(sig.name.clone(), sig);
        }
        reg
    }

    #[test]
    fn assembles_a_complete_container() {
        let raw = parse_container(&container_src("model-insert-seq"), "demo.cts").unwrap();
        let cat = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap();
        let spec = cat.container("Demo").unwrap();
        assert_eq!(spec.triples.len(), 6);
        assert_eq!(spec.triples["insert"].post_model_op, "model-insert-seq");
        // Omitted pre defaults to true.
        assert_eq!(
            spec.triples["clear"].pre,
            Term::lam("xs", Term::Bool(true))
        );
    }

    #[test]
    fn missing_triple_is_incomplete() {
        let src = r#"
container Demo
implements ContainerT
op len post model-len
op contains post model-contains
op is_empty post model-is-empty
op insert post model-insert-seq
op remove post model-remove
"#;
        let raw = parse_container(src, "demo.cts").unwrap();
        let errs = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap_err();
        assert!(errs.iter().any(|e| matches!(
            e,
            LoadError::MissingTriple { op, .. } if op == "clear"
        )));
    }

    #[test]
    fn unknown_model_op_is_rejected() {
        let raw = parse_container(&container_src("model-wat"), "demo.cts").unwrap();
        let errs = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, LoadError::UnknownModelOp { .. })));
    }

    #[test]
    fn shape_incompatible_model_op_is_rejected() {
        // model-pop takes no input element; insert's shape does.
        let raw = parse_container(&container_src("model-pop"), "demo.cts").unwrap();
        let errs = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap_err();
        assert!(errs
            .iter()
            .any(|e| matches!(e, LoadError::IncompatibleModelOp { .. })));
    }

    #[test]
    fn local_model_ops_are_typechecked() {
        let src = r#"
container Gadget
implements StackT
model my-push { \xs -> \x -> (append xs (cons x nil)) }
model my-pop { \xs -> (pair (init xs) (last xs)) }
op push post my-push
op pop post my-pop
"#;
        let raw = parse_container(src, "gadget.cts").unwrap();
        let cat = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap();
        assert!(cat.container("Gadget").unwrap().model_ops.contains_key("my-pop"));

        let bad = r#"
container Gadget
implements StackT
model my-push { \xs -> \x -> (leq? x x) }
op push post my-push
op pop post model-pop
"#;
        let raw = parse_container(bad, "gadget.cts").unwrap();
        let errs = assemble(iface_reg(), vec![raw], &BuiltinRegistry::standard()).unwrap_err();
        assert!(errs.iter().any(|e| matches!(e, LoadError::Type { .. })));
    }
}
