//! Hand-rolled recursive-descent parsers for the text grammar:
//!
//! ```text
//! word     := '[' (int (',' int)*)? ']'
//! rational := ['-'] digits ['/' posint]
//! poly     := term (('+'|'-') term)*   with term := rational '*t^' uint
//! ratfun   := '(' poly ')' '/' '(' poly ')'
//! element  := '0' | ['-'] item (('+'|'-') item)*  with item := [scalar '*'] word
//! ```
//!
//! Errors carry the byte position of the failure. Printing (the `Display`
//! impls in the core crate) emits canonical order and reduced scalars, and
//! `parse ∘ print` is the identity on canonical forms.

use num_bigint::BigInt;
use qsh_core::{Element, Field, Poly, Rat, RatFun, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

pub struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.into() })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(|c: char| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected '{token}'"))
        }
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            self.err("expected digits")
        } else {
            Ok(&self.text[start..self.pos])
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat("-");
        let digits = self.digits()?;
        let magnitude: i64 = digits
            .parse()
            .map_err(|_| ParseError { position: self.pos, message: "integer out of range".into() })?;
        Ok(if neg { -magnitude } else { magnitude })
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat("-");
        let digits = self.digits()?;
        let magnitude: BigInt = digits.parse().expect("digits parse as BigInt");
        Ok(if neg { -magnitude } else { magnitude })
    }

    pub fn word(&mut self) -> Result<Word, ParseError> {
        self.skip_ws();
        self.expect("[")?;
        let mut letters = Vec::new();
        self.skip_ws();
        if !self.eat("]") {
            loop {
                self.skip_ws();
                letters.push(self.int()?);
                self.skip_ws();
                if self.eat("]") {
                    break;
                }
                self.expect(",")?;
            }
        }
        Ok(Word::new(letters))
    }

    pub fn rational(&mut self) -> Result<Rat, ParseError> {
        self.skip_ws();
        let numer = self.bigint()?;
        if self.eat("/") {
            let denom = self.bigint()?;
            if denom <= BigInt::from(0) {
                return self.err("denominator must be positive");
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    fn poly_term(&mut self) -> Result<(usize, Rat), ParseError> {
        let coeff = self.rational()?;
        self.expect("*t^")?;
        let power: usize = self
            .digits()?
            .parse()
            .map_err(|_| ParseError { position: self.pos, message: "exponent out of range".into() })?;
        Ok((power, coeff))
    }

    pub fn poly(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let mut terms: Vec<(usize, Rat)> = Vec::new();
        let negate_first = self.eat("-");
        let (k, c) = self.poly_term()?;
        terms.push((k, if negate_first { -c } else { c }));
        loop {
            self.skip_ws();
            let sign = if self.eat("+") {
                false
            } else if self.eat("-") {
                true
            } else {
                break;
            };
            self.skip_ws();
            let (k, c) = self.poly_term()?;
            terms.push((k, if sign { -c } else { c }));
        }
        let degree = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
        let mut coeffs = vec![<Rat as Field>::zero(); degree + 1];
        for (k, c) in terms {
            coeffs[k] = coeffs[k].clone() + c;
        }
        Ok(Poly::new(coeffs))
    }

    pub fn ratfun(&mut self) -> Result<RatFun, ParseError> {
        self.skip_ws();
        self.expect("(")?;
        let num = self.poly()?;
        self.skip_ws();
        self.expect(")")?;
        self.skip_ws();
        self.expect("/")?;
        self.skip_ws();
        self.expect("(")?;
        let den = self.poly()?;
        self.skip_ws();
        self.expect(")")?;
        if den.is_zero() {
            return self.err("zero denominator");
        }
        Ok(RatFun::new(num, den))
    }

    pub fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

/// Scalar types the CLI can parse and tag in file headers.
pub trait CliScalar: Field {
    const TAG: &'static str;
    fn parse_scalar(cursor: &mut Cursor<'_>) -> Result<Self, ParseError>;
}

impl CliScalar for Rat {
    const TAG: &'static str = "Q";
    fn parse_scalar(cursor: &mut Cursor<'_>) -> Result<Self, ParseError> {
        cursor.rational()
    }
}

impl CliScalar for RatFun {
    const TAG: &'static str = "Qt";
    fn parse_scalar(cursor: &mut Cursor<'_>) -> Result<Self, ParseError> {
        cursor.ratfun()
    }
}

pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let mut c = Cursor::new(text);
    let w = c.word()?;
    c.end()?;
    Ok(w)
}

pub fn parse_scalar<S: CliScalar>(text: &str) -> Result<S, ParseError> {
    let mut c = Cursor::new(text);
    let s = S::parse_scalar(&mut c)?;
    c.end()?;
    Ok(s)
}

/// One signed element item: optional scalar factor, then a word.
fn element_item<S: CliScalar>(c: &mut Cursor<'_>) -> Result<(Word, S), ParseError> {
    c.skip_ws();
    if c.peek() == Some('[') {
        return Ok((c.word()?, S::one()));
    }
    let scalar = S::parse_scalar(c)?;
    c.skip_ws();
    c.expect("*")?;
    Ok((c.word()?, scalar))
}

pub fn parse_element<S: CliScalar>(text: &str) -> Result<Element<S>, ParseError> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.rest() == "0" {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    let negate_first = {
        // a leading '-' belongs to the first item's scalar for Q, but for
        // ratfun scalars (which start with '(') it is a pure sign
        if c.peek() == Some('-') && {
            let mut probe = Cursor::new(c.rest());
            probe.pos = 1;
            probe.skip_ws();
            matches!(probe.peek(), Some('(') | Some('['))
        } {
            c.pos += 1;
            true
        } else {
            false
        }
    };
    let (w, s) = element_item::<S>(&mut c)?;
    out.add_term(w, if negate_first { -s } else { s });
    loop {
        c.skip_ws();
        let sign = if c.eat("+") {
            false
        } else if c.peek() == Some('-') {
            c.pos += 1;
            true
        } else {
            break;
        };
        let (w, s) = element_item::<S>(&mut c)?;
        out.add_term(w, if sign { -s } else { s });
    }
    c.end()?;
    Ok(out)
}
