//! Recursive-descent parser for the presentation grammar:
//!
//! ```text
//! presentation := "<" gens "|" relators ">"
//! gens         := ident ("," ident)*
//! relators     := word ("," word)*
//! word         := factor+
//! factor       := ident ("^" int)? | "(" word ")" ("^" int)?
//! ident        := [A-Za-z][A-Za-z0-9]*
//! ```
//!
//! An identifier that is not a declared generator is split into declared
//! names when possible, so `(ab)^3` reads as `(a b)^3`.

use super::{GroupPresentation, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lt,
    Gt,
    Bar,
    Comma,
    Caret,
    LParen,
    RParen,
    Ident(String),
    Int(i64),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<(Vec<Token>, (usize, usize))> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        let simple = match c {
            '<' => Some(Tok::Lt),
            '>' => Some(Tok::Gt),
            '|' => Some(Tok::Bar),
            ',' => Some(Tok::Comma),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            tokens.push(Token { tok, line, column });
            i += 1;
            column += 1;
        } else if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            i += 1;
            column += 1;
        } else if c.is_ascii_alphabetic() {
            let mut ident = String::new();
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                ident.push(chars[i]);
                i += 1;
                column += 1;
            }
            tokens.push(Token {
                tok: Tok::Ident(ident),
                line: start.0,
                column: start.1,
            });
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let mut digits = String::from(c);
            i += 1;
            column += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                digits.push(chars[i]);
                i += 1;
                column += 1;
            }
            let value = digits.parse::<i64>().map_err(|_| Error::Syntax {
                line: start.0,
                column: start.1,
                message: format!("integer `{digits}` out of range"),
            })?;
            tokens.push(Token {
                tok: Tok::Int(value),
                line: start.0,
                column: start.1,
            });
        } else {
            return Err(Error::Syntax {
                line,
                column,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok((tokens, (line, column)))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    names: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        let (line, column) = self.here();
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.syntax(format!("expected {what}, found {}", describe(found))),
                None => self.syntax(format!("expected {what}, found end of input")),
            }
        }
    }

    fn presentation(&mut self) -> Result<GroupPresentation> {
        self.expect(Tok::Lt, "`<`")?;
        loop {
            match self.peek().cloned() {
                Some(Tok::Ident(name)) => {
                    if self.names.contains(&name) {
                        return self.syntax(format!("duplicate generator `{name}`"));
                    }
                    self.names.push(name);
                    self.pos += 1;
                }
                _ => return self.syntax("expected a generator name"),
            }
            if self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.expect(Tok::Bar, "`|` or `,`")?;
        let mut relators = Vec::new();
        loop {
            relators.push(self.word()?);
            if self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.expect(Tok::Gt, "`>` or `,`")?;
        if self.pos != self.tokens.len() {
            return self.syntax("trailing input after `>`");
        }
        Ok(GroupPresentation {
            generator_names: std::mem::take(&mut self.names),
            relators: relators.into_iter().map(normalize).filter(|w| !w.is_empty()).collect(),
        })
    }

    fn word(&mut self) -> Result<Word> {
        let mut word = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Ident(_)) | Some(Tok::LParen) => word.extend(self.factor()?),
                _ if word.is_empty() => return self.syntax("expected a word"),
                _ => return Ok(word),
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let mut base = match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let (line, column) = self.here();
                self.pos += 1;
                self.resolve(&name, line, column)?
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                return self.power(inner);
            }
            _ => return self.syntax("expected a generator or `(`"),
        };
        if self.peek() == Some(&Tok::Caret) {
            // The exponent binds to the last generator of a split identifier.
            let last = base.pop().expect("resolved identifiers are non-empty");
            let powered = self.power(vec![last])?;
            base.extend(powered);
        }
        Ok(base)
    }

    /// Parses an optional `^ int` suffix and applies it to `word`.
    fn power(&mut self, word: Word) -> Result<Word> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(word);
        }
        self.pos += 1;
        let (line, column) = self.here();
        let exponent = match self.peek() {
            Some(Tok::Int(n)) => *n,
            _ => return self.syntax("expected an integer exponent"),
        };
        self.pos += 1;
        if exponent == 0 {
            return Err(Error::ZeroExponent { line, column });
        }
        let unit = if exponent < 0 { invert(&word) } else { word };
        let mut out = Vec::with_capacity(unit.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            out.extend_from_slice(&unit);
        }
        Ok(out)
    }

    fn resolve(&self, name: &str, line: usize, column: usize) -> Result<Word> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(vec![(i, 1)]);
        }
        split_ident(name, &self.names)
            .map(|parts| parts.into_iter().map(|i| (i, 1)).collect())
            .ok_or_else(|| Error::UnknownGenerator {
                name: name.to_string(),
                line,
                column,
            })
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Lt => "`<`".into(),
        Tok::Gt => "`>`".into(),
        Tok::Bar => "`|`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
    }
}

/// Splits `ident` into a sequence of declared names, preferring longer names first.
fn split_ident(ident: &str, names: &[String]) -> Option<Vec<usize>> {
    if ident.is_empty() {
        return Some(Vec::new());
    }
    let mut candidates: Vec<usize> = (0..names.len()).filter(|&i| ident.starts_with(names[i].as_str())).collect();
    candidates.sort_by_key(|&i| std::cmp::Reverse(names[i].len()));
    for i in candidates {
        if let Some(mut rest) = split_ident(&ident[names[i].len()..], names) {
            rest.insert(0, i);
            return Some(rest);
        }
    }
    None
}

pub(super) fn invert(word: &[(usize, i64)]) -> Word {
    word.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Merges adjacent powers of the same generator and drops cancelled terms.
pub(super) fn normalize(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for (g, e) in word {
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

pub(super) fn parse(text: &str) -> Result<GroupPresentation> {
    let (tokens, end) = lex(text)?;
    Parser {
        tokens,
        pos: 0,
        end,
        names: Vec::new(),
    }
    .presentation()
}
