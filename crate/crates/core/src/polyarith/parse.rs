//! Recursive-descent parser for the polynomial grammar:
//! integers, `p/q` literals, `x`, `y`, `+ - * ^`, parentheses, unary minus.

use super::poly::BiPoly;
use super::rat::Rat;
use super::PolyError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, PolyError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<BiPoly, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a nonnegative integer exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| PolyError::Syntax {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<BiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BiPoly::y())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits();
                // A `/` directly followed by digits forms a rational literal.
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator digits"));
                    }
                    let den: num_bigint::BigInt = d.parse().expect("digits");
                    if num_traits::Zero::is_zero(&den) {
                        return Err(PolyError::Syntax {
                            pos: save,
                            msg: "zero denominator".into(),
                        });
                    }
                    let num: num_bigint::BigInt = n.parse().expect("digits");
                    return Ok(BiPoly::constant(Rat::new(num, den)));
                }
                self.pos = save;
                let num: num_bigint::BigInt = n.parse().expect("digits");
                Ok(BiPoly::constant(Rat::from_integer(num)))
            }
            Some(c) if c.is_ascii_alphabetic() => Err(PolyError::UnknownVariable {
                pos: self.pos,
                name: (c as char).to_string(),
            }),
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses and expands a polynomial expression.
pub fn parse_poly(src: &str) -> Result<BiPoly, PolyError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::poly::Monomial;
    use crate::polyarith::rat::{rat, ratio};

    #[test]
    fn expands_and_normalizes() {
        let f = parse_poly("2*x^5 - 3*x^4 + 5").unwrap();
        let items: Vec<_> = f.terms().map(|(m, c)| (*m, c.clone())).collect();
        assert_eq!(
            items,
            vec![
                (Monomial::new(0, 0), rat(5)),
                (Monomial::new(4, 0), rat(-3)),
                (Monomial::new(5, 0), rat(2)),
            ]
        );
        assert!(parse_poly("0").unwrap().is_zero());
        assert!(parse_poly("x*y - y*x").unwrap().is_zero());
    }

    #[test]
    fn precedence_and_rationals() {
        assert_eq!(
            parse_poly("-2^2 + 3/4*x").unwrap(),
            BiPoly::from_terms([(0, 0, rat(-4)), (1, 0, ratio(3, 4))])
        );
        assert_eq!(
            parse_poly("(x+1)^2").unwrap(),
            parse_poly("x^2 + 2*x + 1").unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x + z") {
            Err(PolyError::UnknownVariable { pos, name }) => {
                assert_eq!((pos, name.as_str()), (4, "z"))
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly("x +"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("(x"), Err(PolyError::Syntax { .. })));
        assert!(matches!(parse_poly("1/0"), Err(PolyError::Syntax { .. })));
    }
}
