//! Tokenizer for `.prs` property files and the term syntax shared with the
//! catalogue format. `#` starts a line comment. Identifiers may contain `-`,
//! `_`, `?` and `!` after the first letter, so names like `for-all-elems`
//! and `unique-count?` are single tokens; a `-` immediately followed by `>`
//! ends the identifier so `x->y` still lexes as `x`, `->`, `y`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    KwProperty,
    KwType,
    KwAnd,
    KwOr,
    KwTrue,
    KwFalse,
    Backslash,
    Arrow,
    Dot,
    SubtypeOf,
    EqEq,
    Assign,
    Pipe,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Lt,
    Gt,
    Comma,
    Semi,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Token::Ident(name) => return write!(f, "`{name}`"),
            Token::KwProperty => "`property`",
            Token::KwType => "`type`",
            Token::KwAnd => "`and`",
            Token::KwOr => "`or`",
            Token::KwTrue => "`true`",
            Token::KwFalse => "`false`",
            Token::Backslash => "`\\`",
            Token::Arrow => "`->`",
            Token::Dot => "`.`",
            Token::SubtypeOf => "`<:`",
            Token::EqEq => "`==`",
            Token::Assign => "`=`",
            Token::Pipe => "`|`",
            Token::LParen => "`(`",
            Token::RParen => "`)`",
            Token::LBrace => "`{`",
            Token::RBrace => "`}`",
            Token::Lt => "`<`",
            Token::Gt => "`>`",
            Token::Comma => "`,`",
            Token::Semi => "`;`",
        };
        write!(f, "{s}")
    }
}

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub token: Token,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct LexError {
    pub pos: Pos,
    pub message: String,
}

pub fn lex(input: &str) -> Result<Vec<Spanned>, LexError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    let mut line: u32 = 1;
    let mut col: u32 = 1;

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }

    loop {
        let pos = Pos { line, col };
        let Some(&c) = chars.peek() else { break };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '\\' => {
                bump!();
                tokens.push(Spanned { token: Token::Backslash, pos });
            }
            '.' => {
                bump!();
                tokens.push(Spanned { token: Token::Dot, pos });
            }
            '-' => {
                bump!();
                if chars.peek() == Some(&'>') {
                    bump!();
                    tokens.push(Spanned { token: Token::Arrow, pos });
                } else {
                    return Err(LexError {
                        pos,
                        message: "stray `-`; identifiers may contain `-` only after a letter"
                            .to_string(),
                    });
                }
            }
            '<' => {
                bump!();
                if chars.peek() == Some(&':') {
                    bump!();
                    tokens.push(Spanned { token: Token::SubtypeOf, pos });
                } else {
                    tokens.push(Spanned { token: Token::Lt, pos });
                }
            }
            '>' => {
                bump!();
                tokens.push(Spanned { token: Token::Gt, pos });
            }
            '=' => {
                bump!();
                if chars.peek() == Some(&'=') {
                    bump!();
                    tokens.push(Spanned { token: Token::EqEq, pos });
                } else {
                    tokens.push(Spanned { token: Token::Assign, pos });
                }
            }
            '|' => {
                bump!();
                tokens.push(Spanned { token: Token::Pipe, pos });
            }
            '(' => {
                bump!();
                tokens.push(Spanned { token: Token::LParen, pos });
            }
            ')' => {
                bump!();
                tokens.push(Spanned { token: Token::RParen, pos });
            }
            '{' => {
                bump!();
                tokens.push(Spanned { token: Token::LBrace, pos });
            }
            '}' => {
                bump!();
                tokens.push(Spanned { token: Token::RBrace, pos });
            }
            ',' => {
                bump!();
                tokens.push(Spanned { token: Token::Comma, pos });
            }
            ';' => {
                bump!();
                tokens.push(Spanned { token: Token::Semi, pos });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    let ident_char = c.is_ascii_alphanumeric() || matches!(c, '_' | '?' | '!');
                    if ident_char {
                        name.push(c);
                        bump!();
                    } else if c == '-' {
                        // `-` continues the identifier unless it starts `->`.
                        let mut ahead = chars.clone();
                        ahead.next();
                        if ahead.peek() == Some(&'>') {
                            break;
                        }
                        name.push(c);
                        bump!();
                    } else {
                        break;
                    }
                }
                let token = match name.as_str() {
                    "property" => Token::KwProperty,
                    "type" => Token::KwType,
                    "and" => Token::KwAnd,
                    "or" => Token::KwOr,
                    "true" => Token::KwTrue,
                    "false" => Token::KwFalse,
                    _ => Token::Ident(name),
                };
                tokens.push(Spanned { token, pos });
            }
            other => {
                return Err(LexError {
                    pos,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_dashed_identifiers_and_arrows() {
        let toks = lex(r"\c -> (for-all-elems c)").unwrap();
        let kinds: Vec<_> = toks.into_iter().map(|s| s.token).collect();
        assert_eq!(
            kinds,
            vec![
                Token::Backslash,
                Token::Ident("c".into()),
                Token::Arrow,
                Token::LParen,
                Token::Ident("for-all-elems".into()),
                Token::Ident("c".into()),
                Token::RParen,
            ]
        );
    }

    #[test]
    fn arrow_after_identifier_without_space() {
        let toks = lex(r"c->d").unwrap();
        let kinds: Vec<_> = toks.into_iter().map(|s| s.token).collect();
        assert_eq!(
            kinds,
            vec![Token::Ident("c".into()), Token::Arrow, Token::Ident("d".into())]
        );
    }

    #[test]
    fn comments_and_positions() {
        let toks = lex("# heading\n  unique-count?").unwrap();
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].token, Token::Ident("unique-count?".into()));
        assert_eq!(toks[0].pos, Pos { line: 2, col: 3 });
    }

    #[test]
    fn rejects_unknown_characters() {
        assert!(lex("42").is_err());
        assert!(lex("$x").is_err());
    }
}
