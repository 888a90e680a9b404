//! Plain-text polynomials in `x` and `y` with rational coefficients:
//! `+ - * / ^` (also `**`), parentheses, implicit multiplication as in
//! `3x^2y`. Division is only by nonzero constants.

use crate::arith::bipoly::BiPoly;
use crate::arith::{Field, Q};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

type R = Result<BiPoly<Q>, ParseError>;

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos, msg: msg.to_string() })
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

    fn expr(&mut self) -> R {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.scale(&Q::from_integer((-1).into()))
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> R {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    let c = match d.total_degree() {
                        Some(0) => d.coeff(0, 0),
                        _ => return self.err("division by a non-constant or zero"),
                    };
                    acc = acc.scale(&Field::inv(&c).unwrap());
                }
                Some(c) if c == b'(' || c == b'x' || c == b'y' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> R {
        let base = self.atom()?;
        let caret = match self.peek() {
            Some(b'^') => {
                self.pos += 1;
                true
            }
            Some(b'*') if self.s.get(self.pos + 1) == Some(&b'*') => {
                self.pos += 2;
                true
            }
            _ => false,
        };
        if !caret {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or(ParseError { pos: start, msg: "expected exponent".into() })?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> R {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::x(&()))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(BiPoly::y(&()))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(BiPoly::constant(Q::from_integer(n)))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.scale(&Q::from_integer((-1).into())))
            }
            _ => self.err("expected a number, x, y or '('"),
        }
    }
}

pub fn parse_bipoly(text: &str) -> Result<BiPoly<Q>, ParseError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn monomial_text(c: &Q, parts: &[(char, u32)], first: bool) -> String {
    use num_traits::{One, Signed};
    let mut out = String::new();
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    let vars: Vec<String> = parts
        .iter()
        .filter(|p| p.1 > 0)
        .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if vars.is_empty() || !One::is_one(&a) {
        out.push_str(&crate::arith::rational::format_q(&a));
        if !vars.is_empty() {
            out.push('*');
        }
    }
    out.push_str(&vars.join("*"));
    out
}

/// Text form readable by [`parse_bipoly`], highest y-degree first.
pub fn format_bipoly(f: &BiPoly<Q>) -> String {
    let mut terms: Vec<(&(u32, u32), &Q)> = f.terms().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| (b.0 .1, b.0 .0).cmp(&(a.0 .1, a.0 .0)));
    let mut out = String::new();
    for (k, ((i, j), c)) in terms.into_iter().enumerate() {
        out.push_str(&monomial_text(c, &[('x', *i), ('y', *j)], k == 0));
    }
    out
}

/// Text form of a univariate polynomial in the variable `var`.
pub fn format_poly(f: &crate::arith::poly::QPoly, var: char) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in f.coeffs().iter().enumerate().rev() {
        if Field::is_zero(c) {
            continue;
        }
        out.push_str(&monomial_text(c, &[(var, k as u32)], first));
        first = false;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qi};

    #[test]
    fn implicit_products_and_powers() {
        let f = parse_bipoly("y^3 + (x^3+1)^2").unwrap();
        assert_eq!(f.coeff(0, 3), qi(1));
        assert_eq!(f.coeff(3, 0), qi(2));
        assert_eq!(f.coeff(6, 0), qi(1));
        let g = parse_bipoly("3x^2y - y/2 + 2**3").unwrap();
        assert_eq!(g.coeff(2, 1), qi(3));
        assert_eq!(g.coeff(0, 1), q(-1, 2));
        assert_eq!(g.coeff(0, 0), qi(8));
    }

    #[test]
    fn formatting_round_trips() {
        for t in ["y^3 + (x^3+1)^2", "y^3 - 24x^3y - 3y + 16x^6 + 40x^3 - 2", "-x/3 + 5/7", "0"] {
            let f = parse_bipoly(t).unwrap();
            assert_eq!(parse_bipoly(&format_bipoly(&f)).unwrap(), f, "{t}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_bipoly("y^").is_err());
        assert!(parse_bipoly("x/y").is_err());
        assert!(parse_bipoly("(x+1").is_err());
        assert!(parse_bipoly("x z").is_err());
    }
}
