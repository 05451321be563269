//! Text descriptions of the function to approximate.
//!
//! ```text
//! spec    := "zero"
//!          | "const" complex
//!          | "ratio" list "/" list
//!          | "coeffs" list
//! list    := "[" complex ("," complex)* "]"
//! complex := term (("+" | "-") term)?
//! term    := ["+" | "-"] (number ["i"] | "i")
//! ```
//!
//! Lists are polynomial or Taylor coefficients in ascending order, constant
//! term first. A complex literal has at most one real and one imaginary
//! part, as in `0.5+0.25i`, `-i` or `2e-3`.

use cpoly_core::{ComplexPolynomial, Error as CoreError, FunctionSpec, TruncatedSeries, C64};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpecError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("denominator has a zero in the closed unit disk")]
    DenominatorVanishesInDisk,
    #[error("invalid function: {0}")]
    Invalid(CoreError),
}

type Result<T> = core::result::Result<T, SpecError>;

/// Parse and validate a function description. Rational denominators are
/// certified zero-free on the closed disk here, not at construction time.
pub fn parse_spec(text: &str) -> Result<FunctionSpec> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let start = p.pos;
    let spec = match p.word() {
        "zero" => FunctionSpec::Zero,
        "const" => FunctionSpec::Constant(p.complex()?),
        "ratio" => {
            let u = p.list()?;
            p.expect(b'/')?;
            let v = p.list()?;
            let u = ComplexPolynomial::new(u).map_err(SpecError::Invalid)?;
            let v = ComplexPolynomial::new(v).map_err(SpecError::Invalid)?;
            FunctionSpec::rational(u, v).map_err(|e| match e {
                CoreError::DenominatorVanishesInDisk => SpecError::DenominatorVanishesInDisk,
                other => SpecError::Invalid(other),
            })?
        }
        "coeffs" => {
            let c = p.list()?;
            FunctionSpec::Explicit(TruncatedSeries::new(c).map_err(SpecError::Invalid)?)
        }
        _ => return Err(p.error_at(start, "expected one of zero, const, ratio, coeffs")),
    };
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error_at(&self, pos: usize, message: &str) -> SpecError {
        SpecError::Syntax {
            pos,
            message: message.to_string(),
        }
    }

    fn error(&self, message: &str) -> SpecError {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        // only ASCII letters were consumed
        core::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn list(&mut self) -> Result<Vec<C64>> {
        self.expect(b'[')?;
        let mut out = vec![self.complex()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.complex()?);
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.error("expected ',' or ']'")),
            }
        }
    }

    fn complex(&mut self) -> Result<C64> {
        self.skip_ws();
        let start = self.pos;
        let sign = self.sign();
        let (first, first_imag) = self.term(sign)?;
        self.skip_ws();
        let sign = match self.peek() {
            Some(b'+') => 1.0,
            Some(b'-') => -1.0,
            _ => {
                return Ok(if first_imag {
                    C64::new(0.0, first)
                } else {
                    C64::new(first, 0.0)
                })
            }
        };
        self.pos += 1;
        self.skip_ws();
        let (second, second_imag) = self.term(sign)?;
        match (first_imag, second_imag) {
            (false, true) => Ok(C64::new(first, second)),
            (true, false) => Ok(C64::new(second, first)),
            _ => Err(self.error_at(
                start,
                "complex literal needs one real and one imaginary part",
            )),
        }
    }

    fn sign(&mut self) -> f64 {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1.0
            }
            Some(b'+') => {
                self.pos += 1;
                1.0
            }
            _ => 1.0,
        }
    }

    /// A real number or imaginary term; returns the value and whether it
    /// carried an `i`.
    fn term(&mut self, sign: f64) -> Result<(f64, bool)> {
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok((sign, true));
        }
        let x = self.number()?;
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok((sign * x, true));
        }
        Ok((sign * x, false))
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.pos - start
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        let mut mantissa = self.digits();
        if self.peek() == Some(b'.') {
            self.pos += 1;
            mantissa += self.digits();
        }
        if mantissa == 0 {
            return Err(self.error_at(start, "expected a number"));
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if self.digits() == 0 {
                self.pos = mark;
            }
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        match text.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => Err(self.error_at(start, "number out of range")),
        }
    }
}
