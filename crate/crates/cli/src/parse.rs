//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := atom ("^" ["-"] int)?
//! atom   := "x+[" int "]" | "x-[" int "]" | "a[" int "]"
//!         | "K" | "gamma" | "u" | "q" | int | "(" expr ")"
//!         | name "(" arg ("," arg)* ")"
//! arg    := "+" | "-" | expr
//! ```
//!
//! Generator indices may carry a leading `-`. Whitespace is ignored between
//! tokens but not inside them, so `x+[0]` must be written without spaces.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;
use uqsl2_core::drinfeld::Sign;

/// Which family a generator atom belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    XPlus,
    XMinus,
    A,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    /// Terms with their signs (`true` for subtracted).
    Sum(Vec<(bool, Ast)>),
    Product(Vec<Ast>),
    Quotient(Box<Ast>, Box<Ast>),
    Power(Box<Ast>, i64),
    GenAtom(GenKind, i64),
    KAtom,
    GammaAtom,
    UAtom,
    QAtom,
    RationalLiteral(BigInt),
    /// A bare `+` or `-` in argument position.
    SignArg(Sign),
    Call(String, Vec<Ast>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: expected {}, found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

/// Names accepted in call position.
pub const BUILTINS: [&str; 8] = ["nf", "dcomm", "comm", "psi", "phi", "E", "c", "omega"];

pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(vec!["operator", "end of input"]));
    }
    Ok(ast)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// The byte after the next token start, without skipping whitespace.
    fn peek_at(&self, ahead: usize) -> Option<u8> {
        self.src.get(self.pos + ahead).copied()
    }

    fn found(&self) -> String {
        match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(_) => {
                let rest = String::from_utf8_lossy(&self.src[self.pos..]);
                let token: String = rest.chars().take(8).collect();
                format!("`{token}`")
            }
        }
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError { offset: self.pos, expected, found: self.found() }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(vec![what]))
        }
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut terms = Vec::new();
        let first_negative = self.eat(b'-');
        terms.push((first_negative, self.term()?));
        loop {
            let negative = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
            terms.push((negative, self.term()?));
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Ast::Sum(terms))
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.factor()?;
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(acc);
                    acc = self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let divisor = self.factor()?;
                    factors.push(acc);
                    acc = Ast::Quotient(Box::new(product(std::mem::take(&mut factors))), Box::new(divisor));
                }
                _ => break,
            }
        }
        factors.push(acc);
        Ok(product(factors))
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let parenthesized = self.eat(b'(');
        let exp = self.signed_int()?;
        if parenthesized {
            self.expect(b')', "`)`")?;
        }
        Ok(Ast::Power(Box::new(base), exp))
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let negative = self.eat(b'-');
        let digits = self.digits().ok_or_else(|| self.error(vec!["integer"]))?;
        let value: i64 = digits.parse().map_err(|_| ParseError {
            offset: start,
            expected: vec!["integer in range"],
            found: format!("`{digits}`"),
        })?;
        Ok(if negative { -value } else { value })
    }

    /// A run of ASCII digits at the current position (after whitespace).
    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn generator(&mut self, kind: GenKind, width: usize) -> Result<Ast, ParseError> {
        self.pos += width;
        let index = self.signed_int()?;
        self.expect(b']', "`]`")?;
        Ok(Ast::GenAtom(kind, index))
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        const ATOM: [&str; 6] = ["generator", "`K`", "`gamma`", "`u`", "`q`", "integer or `(`"];
        match self.peek() {
            Some(b'x') => match (self.peek_at(1), self.peek_at(2)) {
                (Some(b'+'), Some(b'[')) => self.generator(GenKind::XPlus, 3),
                (Some(b'-'), Some(b'[')) => self.generator(GenKind::XMinus, 3),
                _ => Err(self.error(vec!["`x+[`", "`x-[`"])),
            },
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')', "`)`")?;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.digits().expect("peeked a digit");
                Ok(Ast::RationalLiteral(digits.parse().expect("ascii digits")))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                if b == b'a' && self.peek_at(1) == Some(b'[') {
                    return self.generator(GenKind::A, 2);
                }
                let start = self.pos;
                let name = self.ident().expect("peeked a letter");
                match name.as_str() {
                    "K" => Ok(Ast::KAtom),
                    "gamma" => Ok(Ast::GammaAtom),
                    "u" => Ok(Ast::UAtom),
                    "q" => Ok(Ast::QAtom),
                    _ if BUILTINS.contains(&name.as_str()) => self.call(name),
                    _ => {
                        self.pos = start;
                        Err(self.error(ATOM.to_vec()))
                    }
                }
            }
            _ => Err(self.error(ATOM.to_vec())),
        }
    }

    fn call(&mut self, name: String) -> Result<Ast, ParseError> {
        self.expect(b'(', "`(`")?;
        let mut args = Vec::new();
        loop {
            args.push(self.arg()?);
            if self.eat(b',') {
                continue;
            }
            self.expect(b')', "`,` or `)`")?;
            return Ok(Ast::Call(name, args));
        }
    }

    fn arg(&mut self) -> Result<Ast, ParseError> {
        if let Some(b @ (b'+' | b'-')) = self.peek() {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b',' | b')')) {
                return Ok(Ast::SignArg(if b == b'+' { Sign::Plus } else { Sign::Minus }));
            }
            self.pos = save;
        }
        self.expr()
    }
}

fn product(mut factors: Vec<Ast>) -> Ast {
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        Ast::Product(factors)
    }
}
