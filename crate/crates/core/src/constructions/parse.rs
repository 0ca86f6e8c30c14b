use std::str::FromStr;

use super::{Atom, GroupExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownAtom(String),
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
}

/// A parse failure at a byte offset into the input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{} at offset {offset}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::Syntax(msg) => format!("syntax error: {msg}"),
        ParseErrorKind::UnknownAtom(name) => format!("unknown group {name:?}"),
        ParseErrorKind::Arity {
            name,
            expected,
            found,
        } => format!("{name} takes {expected} argument(s), got {found}"),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            kind: ParseErrorKind::Syntax(msg.into()),
            offset: self.pos,
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.syntax(format!("expected '{c}'"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek().filter(|&c| f(c)) {
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return self.syntax("expected a group name");
        }
        let name = self.take_while(|c| c.is_ascii_alphanumeric());
        let Some(&(_, expected)) = Atom::NAMES.iter().find(|(n, _)| *n == name) else {
            return Err(ParseError {
                kind: ParseErrorKind::UnknownAtom(name.to_string()),
                offset: start,
            });
        };
        self.expect('(')?;
        let mut args = Vec::new();
        loop {
            self.skip_ws();
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return self.syntax("expected an integer");
            }
            match digits.parse::<u64>() {
                Ok(v) => args.push(v),
                Err(_) => return self.syntax("integer too large"),
            }
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return self.syntax("expected ',' or ')'"),
            }
        }
        if args.len() != expected {
            return Err(ParseError {
                kind: ParseErrorKind::Arity {
                    name: name.to_string(),
                    expected,
                    found: args.len(),
                },
                offset: start,
            });
        }
        Ok(Atom::from_parts(name, &args).expect("name and arity checked"))
    }
}

/// `atom {('x' | '×') atom}` with `atom := NAME '(' INT {',' INT} ')'`.
impl FromStr for GroupExpr {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut cursor = Cursor { text, pos: 0 };
        let mut factors = vec![cursor.atom()?];
        loop {
            cursor.skip_ws();
            match cursor.peek() {
                None => break,
                Some(c @ ('x' | '×')) => {
                    cursor.pos += c.len_utf8();
                    factors.push(cursor.atom()?);
                }
                Some(_) => return cursor.syntax("expected 'x' or end of input"),
            }
        }
        Ok(GroupExpr { factors })
    }
}
