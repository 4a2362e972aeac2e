//! Parser for the text form of multivectors.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | 'e' digit* | 'x' digits | '(' expr ')'
//! ```
//!
//! `e013` is the product e0 e1 e3 taken in the written order, so `e10`
//! parses to `-e01`. Coordinates `x0`..`x7` are accepted when the scalar
//! ring has variables. Division requires an invertible right operand.

use std::str::FromStr;

use num_bigint::BigInt;

use super::multivector::Multivector;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalars::{Polynomial, Rational, RationalFunction, Scalar, MAX_VARS};

/// Parse `text` as an element of Cl(sig).
pub fn parse_multivector<S: Scalar>(sig: Signature, text: &str) -> Result<Multivector<S>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    Ok(value)
}

/// Parse a scalar expression (no blades).
pub fn parse_scalar<S: Scalar>(text: &str) -> Result<S> {
    let sig = Signature::new(0, 0)?;
    let m: Multivector<S> = parse_multivector(sig, text)?;
    Ok(m.scalar_part())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: Signature,
}

impl<S: Scalar> Multivector<S> {
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        parse_multivector(sig, text)
    }
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn expr<S: Scalar>(&mut self) -> Result<Multivector<S>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<Multivector<S>> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let f: Multivector<S> = self.unary()?;
                    let inv = f.inverse().map_err(|e| Error::Parse {
                        pos: at,
                        msg: format!("cannot divide: {e}"),
                    })?;
                    acc = &acc * &inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<S: Scalar>(&mut self) -> Result<Multivector<S>> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary::<S>()?.negate())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power<S: Scalar>(&mut self) -> Result<Multivector<S>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected non-negative integer exponent"));
            }
            let exp: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom<S: Scalar>(&mut self) -> Result<Multivector<S>> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.error("unexpected end of input")),
        };
        let c = self.src[start];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(self.error("expected `)`"));
            }
            self.pos += 1;
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let digits = self.digits();
            let n = BigInt::from_str(digits).map_err(|_| self.error("bad integer"))?;
            let r = Rational::from_big(n, BigInt::from(1))?;
            return Ok(Multivector::scalar(self.sig, S::from_rational(r)));
        }
        if c == b'e' {
            self.pos += 1;
            let digits = self.digits().to_string();
            let mut acc = Multivector::one(self.sig);
            for (k, d) in digits.bytes().enumerate() {
                let i = (d - b'0') as usize;
                if i >= self.sig.dim() {
                    return Err(Error::Parse {
                        pos: start + 1 + k,
                        msg: format!("basis index {i} outside Cl({})", self.sig),
                    });
                }
                acc = &acc * &Multivector::basis(self.sig, i);
            }
            return Ok(acc);
        }
        if c == b'x' {
            self.pos += 1;
            let digits = self.digits();
            let i: usize = digits.parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "expected coordinate index after `x`".into(),
            })?;
            if i >= MAX_VARS {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("coordinate x{i} out of range"),
                });
            }
            let v = S::variable(i).ok_or(Error::Parse {
                pos: start,
                msg: "coordinates are not allowed for rational coefficients".into(),
            })?;
            return Ok(Multivector::scalar(self.sig, v));
        }
        Err(self.error(format!("unexpected `{}`", c as char)))
    }
}

impl FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let f: RationalFunction = parse_scalar(s)?;
        if !f.is_polynomial() {
            return Err(Error::Parse {
                pos: 0,
                msg: "expression is not a polynomial".into(),
            });
        }
        Ok(f.numerator().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mv;

    fn sta() -> Signature {
        Signature::new(1, 3).unwrap()
    }

    #[test]
    fn blades_and_signs() {
        let m: Mv = parse_multivector(sta(), "e10").unwrap();
        assert_eq!(m, -&Mv::blade(sta(), &[0, 1]));
        let m: Mv = parse_multivector(sta(), "e11").unwrap();
        assert_eq!(m, -&Mv::one(sta()));
    }

    #[test]
    fn round_trip() {
        for text in ["1 + -e0 + 3/2 * e01", "0", "-e123", "2/3 + e0123"] {
            let m: Mv = parse_multivector(sta(), text).unwrap();
            assert_eq!(m.to_string(), text);
        }
    }

    #[test]
    fn arithmetic() {
        let m: Mv = parse_multivector(sta(), "(e0 + e1)*(e0 - e1)").unwrap();
        assert_eq!(m.to_string(), "2 + -2 * e01");
        let m: Mv = parse_multivector(sta(), "(1 + e01)^2 / 2").unwrap();
        assert_eq!(m.to_string(), "1 + e01");
    }

    #[test]
    fn errors_carry_position() {
        let r: Result<Mv> = parse_multivector(sta(), "e0 + e5");
        assert!(matches!(r, Err(Error::Parse { pos: 6, .. })));
        let r: Result<Mv> = parse_multivector(sta(), "e0 + ");
        assert!(matches!(r, Err(Error::Parse { .. })));
        let r: Result<Mv> = parse_multivector(sta(), "x1 * e0");
        assert!(matches!(r, Err(Error::Parse { pos: 0, .. })));
        let r: Result<Mv> = parse_multivector(sta(), "e0 / (e0 + e1)");
        assert!(matches!(r, Err(Error::Parse { .. })));
    }

    #[test]
    fn field_coefficients() {
        let m: Multivector<RationalFunction> = parse_multivector(sta(), "2*x1/(1 - x1^2) * e1 + x0").unwrap();
        assert_eq!(m.to_string(), "x0 + (-2*x1/(x1^2 + -1)) * e1");
        let back: Multivector<RationalFunction> = parse_multivector(sta(), &m.to_string()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn polynomial_text() {
        let p: Polynomial = "2*x1*x2 + -1".parse().unwrap();
        assert_eq!(p.to_string(), "2*x1*x2 + -1");
        assert!("1/x0".parse::<Polynomial>().is_err());
    }
}
