//! Parser for module expressions.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := count '*' term | primary
//! count   := DIGITS | 'inf'
//! primary := 'ku' ('/' DIGITS)? | 'S' ('^' DIGITS)? '(' expr ')' | '(' expr ')' | '0'
//! ```
//!
//! Whitespace is ignored. `ku/N` needs `N ≥ 2`.

use super::{ElementaryKuModule, ExtendedNat, KuSummand};
use crate::error::{Error, Result};

pub fn parse_module(input: &str) -> Result<ElementaryKuModule> {
    let mut p = Parser { src: input.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let rest = String::from_utf8_lossy(&self.src[self.pos.min(self.src.len())..]);
        let token: String = rest.chars().take(12).collect();
        let msg = if token.is_empty() {
            format!("{msg} at end of input")
        } else {
            format!("{msg} near {token:?}")
        };
        Error::Parse { pos: self.pos, msg }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("number out of range")
        })
    }

    fn expr(&mut self) -> Result<ElementaryKuModule> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc = acc.wedge(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<ElementaryKuModule> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let k = self.number()?;
                if self.eat(b'*') {
                    Ok(self.term()?.scale(ExtendedNat::Finite(k)))
                } else if k == 0 {
                    Ok(ElementaryKuModule::zero())
                } else {
                    self.pos = start;
                    Err(self.error("a count must be followed by '*'"))
                }
            }
            Some(b'i') => {
                if !self.keyword("inf") {
                    return Err(self.error("unknown token"));
                }
                self.expect(b'*')?;
                Ok(self.term()?.scale(ExtendedNat::Omega))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<ElementaryKuModule> {
        match self.peek() {
            Some(b'k') => {
                if !self.keyword("ku") {
                    return Err(self.error("unknown token"));
                }
                if self.eat(b'/') {
                    let at = self.pos;
                    let n = self.number()?;
                    if n < 2 {
                        self.pos = at;
                        return Err(self.error("ku/N needs N >= 2"));
                    }
                    Ok(ElementaryKuModule::single(KuSummand::torsion(0, n)?, ExtendedNat::ONE))
                } else {
                    Ok(ElementaryKuModule::ku())
                }
            }
            Some(b'S') => {
                self.pos += 1;
                let by = if self.eat(b'^') {
                    let n = self.number()?;
                    u32::try_from(n).map_err(|_| self.error("suspension out of range"))?
                } else {
                    1
                };
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner.suspend(by))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            _ => Err(self.error("expected a module")),
        }
    }
}
