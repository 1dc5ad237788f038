//! Text form of scaled elements.
//!
//! ```text
//! element     := "0" | prefix "e[" [index ("," index)*] "]"
//! prefix      := ["-"] ["i*"] ["2^" int "*"]
//! coefficient := ["-"] ( "i*2^" int | "2^" int | "i" | "1" )
//! ```
//!
//! The canonical form has no spaces, ascending indices, and omits `2^0*`.

use std::fmt;

use super::element::{Coefficient, Phase, ScaledElement};

use crate::error::{Error, Result};

pub(super) fn write_prefix(f: &mut fmt::Formatter<'_>, c: Coefficient) -> fmt::Result {
    f.write_str(match c.phase.exponent() {
        0 => "",
        1 => "i*",
        2 => "-",
        _ => "-i*",
    })?;
    if c.pow2 != 0 {
        write!(f, "2^{}*", c.pow2)?;
    }
    Ok(())
}

/// Canonical text for a bare scalar, e.g. `1`, `-i`, `2^3`, `-i*2^1`.
pub fn format_coefficient(c: Coefficient) -> String {
    let sign = if c.phase.exponent() >= 2 { "-" } else { "" };
    let imag = c.phase.exponent() % 2 == 1;
    match (imag, c.pow2) {
        (false, 0) => format!("{sign}1"),
        (true, 0) => format!("{sign}i"),
        (false, p) => format!("{sign}2^{p}"),
        (true, p) => format!("{sign}i*2^{p}"),
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn skip_spaces(&mut self) {
        while self.rest().starts_with(' ') {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn integer(&mut self, signed: bool) -> Result<(i64, usize)> {
        let start = self.pos;
        let mut end = start;
        let bytes = self.text.as_bytes();
        if signed && end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        let digits_start = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits_start {
            return Err(self.error("expected an integer"));
        }
        let value = self.text[start..end]
            .parse::<i64>()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos = end;
        Ok((value, start + 1))
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

fn pow2_from(value: i64, column: usize) -> Result<i32> {
    i32::try_from(value).map_err(|_| Error::Parse {
        column,
        message: "power of two out of range".into(),
    })
}

/// Parses an element over `ambient` generators.
pub fn parse_element(text: &str, ambient: usize) -> Result<ScaledElement> {
    let mut cur = Cursor::new(text.trim());
    if cur.text == "0" {
        return Ok(ScaledElement::zero(ambient));
    }
    let mut phase = Phase::ONE;
    if cur.eat("-") {
        phase = Phase::MINUS_ONE;
    }
    if cur.eat("i*") {
        phase = phase * Phase::I;
    }
    let mut pow2 = 0;
    if cur.eat("2^") {
        let (value, column) = cur.integer(true)?;
        pow2 = pow2_from(value, column)?;
        cur.expect("*")?;
    }
    cur.expect("e[")?;
    let mut indices: Vec<(usize, usize)> = Vec::new();
    cur.skip_spaces();
    if !cur.rest().starts_with(']') {
        loop {
            cur.skip_spaces();
            let (value, column) = cur.integer(false)?;
            indices.push((value as usize, column));
            cur.skip_spaces();
            if !cur.eat(",") {
                break;
            }
        }
    }
    cur.expect("]")?;
    cur.finish()?;

    let mut bits = 0u128;
    for &(index, column) in &indices {
        if index >= ambient || index >= super::MAX_GENERATORS {
            return Err(Error::Parse {
                column,
                message: format!("index {index} out of range for ambient {ambient}"),
            });
        }
        if bits >> index & 1 == 1 {
            return Err(Error::Parse {
                column,
                message: format!("duplicate index {index}"),
            });
        }
        bits |= 1u128 << index;
    }
    // Indices may be given in any order; the written product is reordered
    // into canonical form, picking up the matching sign.
    let written = indices.iter().fold(ScaledElement::unit(ambient), |acc, &(k, _)| {
        acc.product(&ScaledElement::generator(ambient, k).expect("range checked"))
            .expect("same ambient")
    });
    Ok(written.scaled(Coefficient::new(phase, pow2)))
}

/// Parses a bare scalar as written by [`format_coefficient`].
pub fn parse_coefficient(text: &str) -> Result<Coefficient> {
    let mut cur = Cursor::new(text.trim());
    let mut phase = Phase::ONE;
    if cur.eat("-") {
        phase = Phase::MINUS_ONE;
    }
    let coeff = if cur.eat("i*2^") {
        let (value, column) = cur.integer(true)?;
        Coefficient::new(phase * Phase::I, pow2_from(value, column)?)
    } else if cur.eat("2^") {
        let (value, column) = cur.integer(true)?;
        Coefficient::new(phase, pow2_from(value, column)?)
    } else if cur.eat("i") {
        Coefficient::new(phase * Phase::I, 0)
    } else if cur.eat("1") {
        Coefficient::new(phase, 0)
    } else {
        return Err(cur.error("expected a coefficient"));
    };
    cur.finish()?;
    Ok(coeff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::BasisLabel;

    #[test]
    fn parse_examples() {
        let e = parse_element("e[0,1]", 4).unwrap();
        assert_eq!(e.coefficient(), Some(Coefficient::ONE));
        assert_eq!(e.label(), BasisLabel::from_indices([0, 1]).unwrap());

        let e = parse_element("i*e[0,1,2]", 4).unwrap();
        assert_eq!(e.coefficient().unwrap().phase, Phase::I);
        assert_eq!(e.label().order(), 3);

        let e = parse_element("-i*2^3*e[]", 2).unwrap();
        assert_eq!(e.coefficient(), Some(Coefficient::new(Phase::MINUS_I, 3)));
        assert!(e.label().is_unit());

        assert!(parse_element("0", 4).unwrap().is_zero());
    }

    #[test]
    fn unsorted_indices_are_reordered() {
        assert_eq!(parse_element("e[1,0]", 2).unwrap().to_string(), "-e[0,1]");
        assert_eq!(parse_element("e[2, 0,1]", 4).unwrap().to_string(), "e[0,1,2]");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let err = parse_element("e[0,4]", 4).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                column: 5,
                message: "index 4 out of range for ambient 4".into()
            }
        );
        assert!(matches!(
            parse_element("e[1,1]", 4),
            Err(Error::Parse { column: 5, .. })
        ));
        assert!(matches!(parse_element("x[0]", 4), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_element("e[0", 4), Err(Error::Parse { .. })));
        assert!(matches!(parse_element("e[0]x", 4), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(
            parse_element("2^*e[0]", 4),
            Err(Error::Parse { column: 3, .. })
        ));
    }

    #[test]
    fn coefficient_text() {
        for m in 0..4 {
            for p in [-2, 0, 1, 5] {
                let c = Coefficient::new(Phase::new(m), p);
                assert_eq!(parse_coefficient(&format_coefficient(c)).unwrap(), c);
            }
        }
        assert_eq!(format_coefficient(Coefficient::new(Phase::MINUS_I, 2)), "-i*2^2");
        assert!(parse_coefficient("2").is_err());
    }
}
