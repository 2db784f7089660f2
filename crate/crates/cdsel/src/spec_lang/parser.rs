//! Recursive-descent parser for property specification files.
//!
//! Grammar (lowest precedence first):
//!
//! ```text
//! file    := { decl }
//! decl    := "property" IDENT "{" prop-body "}" [";"]
//!          | "type" IDENT "<" IDENT ">" "=" "{" IDENT "<:" bounds "|" term "}" [";"]
//! bounds  := IDENT | "(" IDENT { "," IDENT } ")"
//! prop-body := "\" IDENT [ "<:" IDENT ] ("->" | ".") term
//! term    := lambda | or
//! lambda  := "\" IDENT ("->" | ".") term
//! or      := and { "or" and }
//! and     := eq { "and" eq }
//! eq      := app { "==" app }
//! app     := atom { atom } [ lambda ]
//! atom    := "true" | "false" | IDENT | "(" term ")"
//! ```
//!
//! A lambda may appear unparenthesized as an application's final argument, as
//! in `(forall \x. ...)`. Interface bounds on a binder (`\c <: StackT ->`)
//! are only legal on the outermost lambda of a property.

use super::ast::{ContainerTypeDecl, Decl, PropertyDef, Refinement, SpecFile, Term};
use super::ast::flatten_conjuncts;
use super::lexer::{lex, Pos, Spanned, Token};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

pub type ParseResult<T> = Result<T, Vec<ParseError>>;

/// Parses a whole specification file, recovering at declaration boundaries so
/// several errors can be reported at once.
pub fn parse_spec(input: &str) -> ParseResult<SpecFile> {
    let tokens = match lex(input) {
        Ok(t) => t,
        Err(e) => {
            return Err(vec![ParseError {
                pos: e.pos,
                message: e.message,
            }])
        }
    };
    let mut parser = Parser::new(tokens);
    let mut decls = Vec::new();
    while !parser.at_end() {
        match parser.decl() {
            Ok(d) => decls.push(d),
            Err(e) => {
                parser.errors.push(e);
                parser.recover_to_decl();
            }
        }
    }

    let mut seen = Vec::new();
    for decl in &decls {
        let name = match decl {
            Decl::Property(p) => &p.name,
            Decl::ContainerType(t) => &t.name,
        };
        if seen.contains(&name.as_str()) {
            parser.errors.push(ParseError {
                pos: Pos { line: 1, col: 1 },
                message: format!("duplicate declaration name `{name}`"),
            });
        } else {
            seen.push(name);
        }
    }

    if parser.errors.is_empty() {
        Ok(SpecFile { decls })
    } else {
        Err(parser.errors)
    }
}

/// Parses a single term, used by the catalogue format for preconditions and
/// model-operation definitions.
pub fn parse_term(input: &str) -> ParseResult<Term> {
    let tokens = match lex(input) {
        Ok(t) => t,
        Err(e) => {
            return Err(vec![ParseError {
                pos: e.pos,
                message: e.message,
            }])
        }
    };
    let mut parser = Parser::new(tokens);
    let term = parser.term().map_err(|e| vec![e])?;
    if !parser.at_end() {
        return Err(vec![parser.unexpected("end of input")]);
    }
    Ok(term)
}

/// Parses one term starting at `idx` in a token stream, returning the term
/// and the index just past it. The catalogue format embeds terms in its own
/// structure and uses this to share the grammar.
pub(crate) fn parse_term_at(tokens: &[Spanned], idx: usize) -> Result<(Term, usize), ParseError> {
    let mut parser = Parser::new(tokens.to_vec());
    parser.idx = idx;
    let term = parser.term()?;
    Ok((term, parser.idx))
}

struct Parser {
    tokens: Vec<Spanned>,
    idx: usize,
    errors: Vec<ParseError>,
}

impl Parser {
    fn new(tokens: Vec<Spanned>) -> Self {
        Parser {
            tokens,
            idx: 0,
            errors: Vec::new(),
        }
    }

    fn at_end(&self) -> bool {
        self.idx >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|s| &s.token)
    }

    fn pos(&self) -> Pos {
        self.tokens
            .get(self.idx)
            .or_else(|| self.tokens.last())
            .map(|s| s.pos)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|s| s.token.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, expected: &Token) -> bool {
        if self.peek() == Some(expected) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: Token) -> Result<(), ParseError> {
        if self.eat(&expected) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("{expected}")))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        let found = match self.peek() {
            Some(t) => format!("{t}"),
            None => "end of input".to_string(),
        };
        ParseError {
            pos: self.pos(),
            message: format!("expected {wanted}, found {found}"),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token::Ident(_)) => match self.bump() {
                Some(Token::Ident(name)) => Ok(name),
                _ => unreachable!(),
            },
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn recover_to_decl(&mut self) {
        let mut depth = 0usize;
        while let Some(t) = self.peek() {
            match t {
                Token::LBrace => depth += 1,
                Token::RBrace => depth = depth.saturating_sub(1),
                Token::KwProperty | Token::KwType if depth == 0 => return,
                _ => {}
            }
            self.idx += 1;
        }
    }

    fn decl(&mut self) -> Result<Decl, ParseError> {
        match self.peek() {
            Some(Token::KwProperty) => self.property_decl().map(Decl::Property),
            Some(Token::KwType) => self.type_decl().map(Decl::ContainerType),
            _ => Err(self.unexpected("`property` or `type`")),
        }
    }

    fn property_decl(&mut self) -> Result<PropertyDef, ParseError> {
        self.expect(Token::KwProperty)?;
        let name = self.ident()?;
        self.expect(Token::LBrace)?;
        self.expect(Token::Backslash)?;
        let param = self.ident()?;
        let bound = if self.eat(&Token::SubtypeOf) {
            Some(self.ident()?)
        } else {
            None
        };
        if !self.eat(&Token::Arrow) && !self.eat(&Token::Dot) {
            return Err(self.unexpected("`->` or `.` after the binder"));
        }
        let body = self.term()?;
        self.expect(Token::RBrace)?;
        self.eat(&Token::Semi);
        Ok(PropertyDef {
            name,
            bound,
            body: Term::lam(param, body),
        })
    }

    fn type_decl(&mut self) -> Result<ContainerTypeDecl, ParseError> {
        self.expect(Token::KwType)?;
        let name = self.ident()?;
        self.expect(Token::Lt)?;
        let elem_param = self.ident()?;
        self.expect(Token::Gt)?;
        self.expect(Token::Assign)?;
        self.expect(Token::LBrace)?;
        let var = self.ident()?;
        self.expect(Token::SubtypeOf)?;
        let bounds = self.bounds()?;
        self.expect(Token::Pipe)?;
        let refinement_term = self.term()?;
        self.expect(Token::RBrace)?;
        self.eat(&Token::Semi);
        Ok(ContainerTypeDecl {
            name,
            elem_param,
            var,
            bounds,
            refinement: Refinement {
                conjuncts: flatten_conjuncts(&refinement_term),
            },
        })
    }

    fn bounds(&mut self) -> Result<Vec<String>, ParseError> {
        if self.eat(&Token::LParen) {
            let mut names = vec![self.ident()?];
            while self.eat(&Token::Comma) {
                names.push(self.ident()?);
            }
            self.expect(Token::RParen)?;
            Ok(names)
        } else {
            Ok(vec![self.ident()?])
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek() == Some(&Token::Backslash) {
            self.lambda()
        } else {
            self.or_term()
        }
    }

    fn lambda(&mut self) -> Result<Term, ParseError> {
        self.expect(Token::Backslash)?;
        let param = self.ident()?;
        if self.peek() == Some(&Token::SubtypeOf) {
            return Err(ParseError {
                pos: self.pos(),
                message: "interface bounds are only allowed on a property's outermost binder"
                    .to_string(),
            });
        }
        if !self.eat(&Token::Arrow) && !self.eat(&Token::Dot) {
            return Err(self.unexpected("`->` or `.` after the binder"));
        }
        let body = self.term()?;
        Ok(Term::lam(param, body))
    }

    fn or_term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.and_term()?;
        while self.eat(&Token::KwOr) {
            let rhs = self.and_term()?;
            lhs = Term::apps(Term::var("or"), [lhs, rhs]);
        }
        Ok(lhs)
    }

    fn and_term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.eq_term()?;
        while self.eat(&Token::KwAnd) {
            let rhs = self.eq_term()?;
            lhs = Term::apps(Term::var("and"), [lhs, rhs]);
        }
        Ok(lhs)
    }

    fn eq_term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.app_term()?;
        while self.eat(&Token::EqEq) {
            let rhs = self.app_term()?;
            lhs = Term::apps(Term::var("equal?"), [lhs, rhs]);
        }
        Ok(lhs)
    }

    fn app_term(&mut self) -> Result<Term, ParseError> {
        let mut term = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::KwTrue | Token::KwFalse | Token::Ident(_) | Token::LParen) => {
                    let arg = self.atom()?;
                    term = Term::app(term, arg);
                }
                // A trailing lambda is the application's final argument.
                Some(Token::Backslash) => {
                    let arg = self.lambda()?;
                    term = Term::app(term, arg);
                    break;
                }
                _ => break,
            }
        }
        Ok(term)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Token::KwTrue) => {
                self.idx += 1;
                Ok(Term::Bool(true))
            }
            Some(Token::KwFalse) => {
                self.idx += 1;
                Ok(Term::Bool(false))
            }
            Some(Token::Ident(_)) => Ok(Term::Var(self.ident()?)),
            Some(Token::LParen) => {
                self.idx += 1;
                let term = self.term()?;
                self.expect(Token::RParen)?;
                Ok(term)
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn app2(f: &str, a: Term, b: Term) -> Term {
        Term::apps(Term::var(f), [a, b])
    }

    #[test]
    fn parses_the_unique_property() {
        let spec = parse_spec(
            "property unique { \\c -> (for-all-elems (\\a -> (unique-count? a c)) c) }",
        )
        .unwrap();
        let p = spec.property("unique").unwrap();
        assert_eq!(p.bound, None);
        let expected = Term::lam(
            "c",
            Term::apps(
                Term::var("for-all-elems"),
                [
                    Term::lam("a", app2("unique-count?", Term::var("a"), Term::var("c"))),
                    Term::var("c"),
                ],
            ),
        );
        assert_eq!(p.body, expected);
    }

    #[test]
    fn parses_bounded_property_with_trailing_lambda_and_eq() {
        let spec =
            parse_spec("property lifo { \\c <: StackT -> (forall \\x. pop (push c x) == x) }")
                .unwrap();
        let p = spec.property("lifo").unwrap();
        assert_eq!(p.bound.as_deref(), Some("StackT"));
        let inner = Term::lam(
            "x",
            app2(
                "equal?",
                Term::app(
                    Term::var("pop"),
                    app2("push", Term::var("c"), Term::var("x")),
                ),
                Term::var("x"),
            ),
        );
        assert_eq!(p.body, Term::lam("c", Term::app(Term::var("forall"), inner)));
    }

    #[test]
    fn parses_type_declaration_with_bounds_and_conjunction() {
        let spec = parse_spec(
            "type StrictlyAscendingCon<T> = {c <: (ContainerT) | ((unique c) and (ascending c))}",
        )
        .unwrap();
        let t = spec.container_types().next().unwrap();
        assert_eq!(t.name, "StrictlyAscendingCon");
        assert_eq!(t.elem_param, "T");
        assert_eq!(t.var, "c");
        assert_eq!(t.bounds, vec!["ContainerT".to_string()]);
        assert_eq!(
            t.refinement.conjuncts,
            vec![
                Term::app(Term::var("unique"), Term::var("c")),
                Term::app(Term::var("ascending"), Term::var("c")),
            ]
        );
    }

    #[test]
    fn stack_type_declaration_keeps_bound_order() {
        let spec =
            parse_spec("type StackCon<T> = {c <: (ContainerT, StackT) | (lifo c)}").unwrap();
        let t = spec.container_types().next().unwrap();
        assert_eq!(t.bounds, vec!["ContainerT".to_string(), "StackT".to_string()]);
        assert_eq!(t.refinement.conjuncts.len(), 1);
    }

    #[test]
    fn empty_input_is_an_empty_spec() {
        assert_eq!(parse_spec("").unwrap(), SpecFile::default());
        assert_eq!(parse_spec("# only comments\n").unwrap(), SpecFile::default());
    }

    #[test]
    fn self_application_is_grammatical() {
        // The grammar admits any application; rejecting `(c c)` is the type
        // checker's job.
        let spec = parse_spec("property p { \\c -> (c c) }").unwrap();
        let p = spec.property("p").unwrap();
        assert_eq!(
            p.body,
            Term::lam("c", Term::app(Term::var("c"), Term::var("c")))
        );
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let errs = parse_spec(
            "property p { \\c -> true }\nproperty p { \\c -> false }",
        )
        .unwrap_err();
        assert!(errs.iter().any(|e| e.message.contains("duplicate")));
    }

    #[test]
    fn errors_carry_positions_and_parsing_recovers() {
        let errs = parse_spec(
            "property broken { \\c -> (f c }\nproperty alsobad { -> }",
        )
        .unwrap_err();
        assert!(errs.len() >= 2);
        assert_eq!(errs[0].pos.line, 1);
    }

    #[test]
    fn nested_conjunctions_flatten_in_declarations() {
        let spec =
            parse_spec("type X<T> = {c <: B | ((a c) and ((b c) and (d c)))}").unwrap();
        let t = spec.container_types().next().unwrap();
        assert_eq!(t.refinement.conjuncts.len(), 3);
    }
}
