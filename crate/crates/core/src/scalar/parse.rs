//! A small expression language for exact scalars.
//!
//! Grammar (whitespace ignored):
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/')? factor)*        // juxtaposition multiplies
//! factor := '-' factor | atom ('^' ['-'] int)?
//! atom   := int | 'i' | '(' expr ')'
//!         | 'zeta(' int [',' int] ')'           // e^{2πi j/N}
//!         | 'z' int                             // e^{2πi/N}, as printed
//!         | 'root(' int '/' int ')'             // e^{2πi p/q}
//!         | ('cos' | 'sin') '(' angle ')'       // angle := [int ['*']] 'pi' ['/' int]
//! ```
//! Examples: `3`, `5/2`, `2cos(pi/12)`, `zeta(24) + zeta(24,23)`, `root(1/3)`, `-i`.

use super::cyclo::CycloNumber;
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
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
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let v: i64 = match text.parse() {
            Ok(v) => v,
            Err(_) => return self.err("integer too large"),
        };
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<CycloNumber> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c.is_ascii_alphanumeric())
    }

    fn term(&mut self) -> Result<CycloNumber> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                acc = match acc.checked_div(&d) {
                    Ok(v) => v,
                    Err(_) => return self.err("division by zero"),
                };
            } else if self.starts_atom() {
                acc = acc * self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<CycloNumber> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.int()?;
            return match base.pow(e) {
                Ok(v) => Ok(v),
                Err(_) => self.err("zero to a negative power"),
            };
        }
        Ok(base)
    }

    /// Parses `[a['*']]pi['/'b]` and returns (a, b) for the angle aπ/b.
    fn angle(&mut self) -> Result<(i64, i64)> {
        let a = if self.peek().is_some_and(|c| c.is_ascii_digit() || c == b'-') {
            let a = self.int()?;
            self.eat(b'*');
            a
        } else {
            1
        };
        if !self.keyword("pi") {
            return self.err("expected 'pi'");
        }
        let b = if self.eat(b'/') { self.int()? } else { 1 };
        if b <= 0 {
            return self.err("angle denominator must be positive");
        }
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<CycloNumber> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(CycloNumber::from_integer(self.int()?)),
            Some(b'z') if self.s.get(self.pos + 1).is_some_and(u8::is_ascii_digit) => {
                self.pos += 1;
                let n = self.int()?;
                if n < 1 {
                    return self.err("conductor must be positive");
                }
                Ok(CycloNumber::cyclo(n as u32, 1))
            }
            Some(_) => {
                if self.keyword("zeta") {
                    self.expect(b'(')?;
                    let n = self.int()?;
                    let j = if self.eat(b',') { self.int()? } else { 1 };
                    self.expect(b')')?;
                    if n < 1 {
                        return self.err("conductor must be positive");
                    }
                    Ok(CycloNumber::cyclo(n as u32, j))
                } else if self.keyword("root") {
                    self.expect(b'(')?;
                    let p = self.int()?;
                    self.expect(b'/')?;
                    let q = self.int()?;
                    self.expect(b')')?;
                    if q < 1 {
                        return self.err("root order must be positive");
                    }
                    Ok(CycloNumber::cyclo(q as u32, p))
                } else if self.keyword("cos") {
                    self.expect(b'(')?;
                    let (a, b) = self.angle()?;
                    self.expect(b')')?;
                    Ok(CycloNumber::cos_pi(a, b))
                } else if self.keyword("sin") {
                    self.expect(b'(')?;
                    let (a, b) = self.angle()?;
                    self.expect(b')')?;
                    Ok(CycloNumber::sin_pi(a, b))
                } else if self.keyword("i") {
                    Ok(CycloNumber::cyclo(4, 1))
                } else {
                    self.err("unknown token")
                }
            }
        }
    }
}

/// Parse an exact scalar expression.
pub fn parse_scalar(text: &str) -> Result<CycloNumber> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_forms() {
        assert_eq!(parse_scalar("3").unwrap(), CycloNumber::from_integer(3));
        assert_eq!(parse_scalar("5/2").unwrap(), CycloNumber::from_ratio(5, 2));
        let d = parse_scalar("2cos(pi/12)").unwrap();
        assert_eq!(d, CycloNumber::cyclo(24, 1) + CycloNumber::cyclo(24, -1));
        assert_eq!(parse_scalar("zeta(24) + zeta(24,23)").unwrap(), d);
        assert_eq!(parse_scalar("root(1/3)").unwrap(), CycloNumber::cyclo(3, 1));
        assert_eq!(parse_scalar("-i").unwrap(), CycloNumber::cyclo(4, 3));
        assert_eq!(parse_scalar("i^2").unwrap(), CycloNumber::from_integer(-1));
        assert_eq!(parse_scalar("2*sin(3pi/2)").unwrap(), CycloNumber::from_integer(-2));
    }

    #[test]
    fn display_roundtrips() {
        let x = CycloNumber::cyclo(24, 5) * CycloNumber::from_ratio(-3, 7) + CycloNumber::cos_pi(1, 12);
        assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn reports_columns() {
        match parse_scalar("2 + foo") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(1").is_err());
    }
}
