//! Text form of group-ring elements.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := int | int? 't' ('^' int)?`,
//! whitespace-insensitive, exponents reduced mod n. The canonical form lists
//! terms by ascending power, omits zero terms, and prints the unit as `1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group_ring::{CyclicGroupSpec, GroupRingElement};

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let negative = match self.bytes.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[digits_start..self.pos]).expect("ascii slice");
        let mag = s
            .parse::<BigInt>()
            .map_err(|e| self.err(format!("bad integer literal: {e}")))?;
        Ok(if negative { -mag } else { mag })
    }

    /// term := int | int? 't' ('^' int)?; returns (coefficient, exponent).
    /// A sign with implicit magnitude ("-t") is accepted.
    fn term(&mut self, n: usize) -> Result<(BigInt, usize)> {
        self.skip_ws();
        let negative = match self.bytes.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let had_digits = self.pos > digits_start;
        let mag = if had_digits {
            std::str::from_utf8(&self.bytes[digits_start..self.pos])
                .expect("ascii slice")
                .parse::<BigInt>()
                .map_err(|e| self.err(format!("bad integer literal: {e}")))?
        } else {
            BigInt::one()
        };
        let coeff = if negative { -mag } else { mag };
        if self.peek() == Some(b't') {
            self.pos += 1;
            let exp = if self.peek() == Some(b'^') {
                self.pos += 1;
                let e = self.integer()?;
                let n_big = BigInt::from(n);
                let r = ((&e % &n_big) + &n_big) % &n_big;
                usize::try_from(r).expect("reduced exponent fits")
            } else {
                1 % n
            };
            Ok((coeff, exp % n))
        } else if had_digits {
            Ok((coeff, 0))
        } else {
            Err(self.err("expected a term"))
        }
    }
}

/// Parse an element of Z[Z/n] from its text form.
pub fn parse_element(text: &str, group: CyclicGroupSpec) -> Result<GroupRingElement> {
    let n = group.order();
    let mut p = Parser::new(text);
    let mut coeffs = vec![BigInt::zero(); n];

    if p.peek().is_none() {
        return Err(p.err("empty input"));
    }
    let (c, e) = p.term(n)?;
    coeffs[e] += c;
    loop {
        match p.peek() {
            None => break,
            Some(b'+') | Some(b'-') => {
                let negate = p.bytes[p.pos] == b'-';
                p.pos += 1;
                let (c, e) = p.term(n)?;
                coeffs[e] += if negate { -c } else { c };
            }
            Some(other) => {
                return Err(p.err(format!(
                    "expected '+' or '-', found {:?}",
                    other as char
                )))
            }
        }
    }
    GroupRingElement::from_coeffs(group, coeffs)
}

/// Canonical text form: ascending powers, zero terms omitted, `1` for the unit.
pub fn format_element(x: &GroupRingElement) -> String {
    let mut out = String::new();
    for (k, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && k != 0 {
            String::new()
        } else {
            mag.to_string()
        };
        out.push_str(&coeff_part);
        match k {
            0 => {}
            1 => out.push('t'),
            _ => {
                out.push_str("t^");
                out.push_str(&k.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5() -> CyclicGroupSpec {
        CyclicGroupSpec::orientable(5).unwrap()
    }

    #[test]
    fn parse_examples() {
        let sigma = parse_element("1 - t - t^4", z5()).unwrap();
        assert_eq!(
            sigma.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            ["1", "-1", "0", "0", "-1"]
        );
        let t2 = parse_element("t^7", z5()).unwrap();
        assert_eq!(t2, GroupRingElement::generator_power(z5(), 2));
        let collected = parse_element("3 + 2t^2 - t^2", z5()).unwrap();
        assert_eq!(collected, parse_element("3 + t^2", z5()).unwrap());
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        assert_eq!(
            parse_element("1-t-t^4", z5()).unwrap(),
            parse_element(" 1 -  t -   t ^ 4 ", z5()).unwrap()
        );
    }

    #[test]
    fn parse_negative_and_implicit() {
        assert_eq!(
            parse_element("-t^3", z5()).unwrap(),
            parse_element("- 1t^3", z5()).unwrap()
        );
        assert_eq!(
            parse_element("t^-1", z5()).unwrap(),
            GroupRingElement::generator_power(z5(), 4)
        );
        let five = parse_element("+5", z5()).unwrap();
        assert_eq!(five.coeffs()[0], BigInt::from(5));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_element("1 + * t", z5()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_element("", z5()).is_err());
        assert!(parse_element("t^", z5()).is_err());
        assert!(parse_element("3 3", z5()).is_err());
    }

    #[test]
    fn canonical_form_round_trips() {
        for s in [
            "1 - t - t^4",
            "3 - 2t + t^2 + t^3 - 2t^4",
            "-2 + t + 3t^2 + t^3 - 2t^4",
            "0",
            "1",
            "-1",
            "t",
            "-t^3",
            "7t^2",
        ] {
            let x = parse_element(s, z5()).unwrap();
            assert_eq!(format_element(&x), s);
            assert_eq!(parse_element(&format_element(&x), z5()).unwrap(), x);
        }
    }

    #[test]
    fn formats_unit_group() {
        let z1 = CyclicGroupSpec::trivial();
        assert_eq!(format_element(&GroupRingElement::one(z1)), "1");
        // t reduces to 1 when n = 1
        assert_eq!(parse_element("t", z1).unwrap(), GroupRingElement::one(z1));
        assert_eq!(parse_element("t^5", z1).unwrap(), GroupRingElement::one(z1));
    }
}
