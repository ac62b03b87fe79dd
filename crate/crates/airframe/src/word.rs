//! Word syntax shared by the command line and the file formats.
//!
//! ```text
//! word    := factor*              juxtaposition composes, rightmost first
//! factor  := primary postfix*
//! postfix := "'" | "^" int | "^" primary
//! primary := name | "1" | "(" word ")" | "[" word "," word "]"
//! ```
//!
//! `x^y` is the conjugate `y⁻¹ x y` and `[x,y]` the commutator
//! `x y x⁻¹ y⁻¹`. Names are identifiers, so letters must be separated by
//! spaces: `a b` is two letters, `ab` one unknown name.

use std::fmt;

use airframe_core::GroupWord;

use crate::error::{AirframeError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Generator(String),
    /// Composition of the factors, the last one applied first.
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
    Conjugate(Box<WordExpr>, Box<WordExpr>),
    Commutator(Box<WordExpr>, Box<WordExpr>),
}

impl WordExpr {
    pub fn identity() -> WordExpr {
        WordExpr::Product(Vec::new())
    }

    pub fn to_word(&self) -> GroupWord {
        match self {
            WordExpr::Generator(n) => GroupWord::letter(n, 1),
            WordExpr::Product(fs) => fs.iter().fold(GroupWord::new(), |w, f| w.concat(&f.to_word())),
            WordExpr::Power(x, k) => x.to_word().pow(*k),
            WordExpr::Conjugate(x, y) => x.to_word().conjugate(&y.to_word()),
            WordExpr::Commutator(x, y) => x.to_word().commutator(&y.to_word()),
        }
    }

    /// Can stand as the base of a postfix without parentheses.
    fn is_postfix_base(&self) -> bool {
        !matches!(self, WordExpr::Product(fs) if fs.len() > 1)
    }

    /// Can stand after `^` without parentheses; a bare `1` there would read
    /// as an exponent.
    fn is_primary(&self) -> bool {
        matches!(self, WordExpr::Generator(_) | WordExpr::Commutator(..))
    }

    fn fmt_as_base(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_postfix_base() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Generator(n) => write!(f, "{n}"),
            WordExpr::Product(fs) if fs.is_empty() => write!(f, "1"),
            WordExpr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    // a nested product keeps its grouping
                    if matches!(x, WordExpr::Product(g) if g.len() > 1) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            WordExpr::Power(x, k) => {
                x.fmt_as_base(f)?;
                write!(f, "^{k}")
            }
            WordExpr::Conjugate(x, y) => {
                x.fmt_as_base(f)?;
                if y.is_primary() {
                    write!(f, "^{y}")
                } else {
                    write!(f, "^({y})")
                }
            }
            WordExpr::Commutator(x, y) => write!(f, "[{x}, {y}]"),
        }
    }
}

pub fn parse_word(src: &str) -> Result<WordExpr> {
    let mut p = Parser { src, pos: 0 };
    let w = p.product()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> AirframeError {
        let found = match self.peek() {
            Some(c) => format!("{message} (found {c:?})"),
            None => format!("{message} (found end of input)"),
        };
        AirframeError::Parse { offset: self.pos, message: found }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn starts_primary(&mut self) -> bool {
        self.skip_ws();
        matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_' || c == '(' || c == '[' || c == '1')
    }

    fn product(&mut self) -> Result<WordExpr> {
        let mut fs = Vec::new();
        while self.starts_primary() {
            fs.push(self.factor()?);
        }
        Ok(if fs.len() == 1 { fs.pop().unwrap() } else { WordExpr::Product(fs) })
    }

    fn factor(&mut self) -> Result<WordExpr> {
        let mut x = self.primary()?;
        loop {
            if self.eat('\'') {
                x = WordExpr::Power(Box::new(x), -1);
            } else if self.eat('^') {
                self.skip_ws();
                match self.peek() {
                    Some(c) if c == '-' || c.is_ascii_digit() => {
                        let k = self.integer()?;
                        x = WordExpr::Power(Box::new(x), k);
                    }
                    _ => {
                        let y = self.primary()?;
                        x = WordExpr::Conjugate(Box::new(x), Box::new(y));
                    }
                }
            } else {
                return Ok(x);
            }
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer exponent")
        })
    }

    fn primary(&mut self) -> Result<WordExpr> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.product()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let x = self.product()?;
                self.expect(',')?;
                let y = self.product()?;
                self.expect(']')?;
                Ok(WordExpr::Commutator(Box::new(x), Box::new(y)))
            }
            Some('1') => {
                self.pos += 1;
                Ok(WordExpr::identity())
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek().unwrap().len_utf8();
                }
                Ok(WordExpr::Generator(self.src[start..self.pos].to_string()))
            }
            _ => Err(self.error("expected a generator, '1', '(' or '['")),
        }
    }
}

/// Parses and flattens in one step.
pub fn parse_group_word(src: &str) -> Result<GroupWord> {
    Ok(parse_word(src)?.to_word())
}
