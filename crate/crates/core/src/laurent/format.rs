//! Text, LaTeX and JSON forms of [`LaurentPoly`].
//!
//! Text form: `-1*t1^-1*t2^-1 + 1*t1*t2`. Terms appear in canonical order,
//! every non-constant term carries an explicit coefficient, exponent 1 is
//! omitted. The zero polynomial prints as `0`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{ExponentVec, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Default variable names `t1, …, tk`.
pub(crate) fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("t{i}")).collect()
}

fn monomial_text(e: &ExponentVec, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (name, &k) in names.iter().zip(e.as_slice()) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            k => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

impl LaurentPoly {
    /// Canonical text form with caller-supplied variable names.
    pub fn to_text(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mono = monomial_text(e, names);
            let body = if mono.is_empty() {
                c.abs().to_string()
            } else {
                format!("{}*{}", c.abs(), mono)
            };
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// LaTeX form; coefficients of `±1` are suppressed on non-constant terms.
    pub fn to_latex(&self, names: &LatexNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mut mono = String::new();
            for (v, &k) in e.as_slice().iter().enumerate() {
                let base = names.name(v + 1, self.nvars);
                match k {
                    0 => {}
                    1 => mono.push_str(&base),
                    k => mono.push_str(&format!("{base}^{{{k}}}")),
                }
            }
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag} {mono}"),
            };
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }

    /// Parses the text form using default names `t1..tk`.
    pub fn parse(text: &str, nvars: usize) -> Result<Self, ParseError> {
        Self::parse_with_names(text, &default_names(nvars))
    }

    /// Parses sums of terms such as `2*t1^-1*x - t2 + 3`. Coefficients are
    /// optional; a bare variable name has coefficient 1.
    pub fn parse_with_names(text: &str, names: &[String]) -> Result<Self, ParseError> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            names,
        }
        .parse()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars)))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.nvars, self)
    }
}

/// Variable naming for LaTeX output: `t_{i}` for colors, optionally an axis
/// variable `x` as the last index.
#[derive(Debug, Clone, Copy, Default)]
pub struct LatexNames {
    pub axis: bool,
}

impl LatexNames {
    fn name(&self, index: usize, nvars: usize) -> String {
        if self.axis && index == nvars {
            "x".to_string()
        } else {
            format!("t_{{{index}}}")
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("validated digits"))
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        match self.names.iter().position(|n| n == word) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                self.err(format!("unknown variable `{word}`"))
            }
        }
    }

    fn term(&mut self, sign: BigInt) -> Result<(ExponentVec, BigInt), ParseError> {
        let mut coeff = sign;
        let mut exps = ExponentVec::zeros(self.names.len());
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            coeff *= self.integer()?;
            if !self.eat(b'*') {
                return Ok((exps, coeff));
            }
        }
        loop {
            let v = self.variable()?;
            let k = if self.eat(b'^') {
                match i32::try_from(self.integer()?) {
                    Ok(k) => k,
                    Err(_) => return self.err("exponent out of range"),
                }
            } else {
                1
            };
            exps.0[v] += k;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((exps, coeff))
    }

    fn parse(mut self) -> Result<LaurentPoly, ParseError> {
        let mut poly = LaurentPoly::zero(self.names.len());
        let mut sign = BigInt::one();
        if self.eat(b'-') {
            sign = -sign;
        } else {
            self.eat(b'+');
        }
        if self.peek().is_none() {
            return self.err("empty input");
        }
        loop {
            let (e, c) = self.term(sign)?;
            poly.add_term(e, c);
            match self.peek() {
                None => break,
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                Some(_) => return self.err("expected `+` or `-`"),
            }
            self.pos += 1;
        }
        Ok(poly)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exp: e.as_slice().to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero(raw.nvars);
        for t in raw.terms {
            if t.exp.len() != raw.nvars {
                return Err(D::Error::custom(format!(
                    "exponent vector has length {}, expected {}",
                    t.exp.len(),
                    raw.nvars
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.coeff)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient"));
            }
            let e = ExponentVec::from(t.exp);
            if p.terms.contains_key(&e) {
                return Err(D::Error::custom("duplicate exponent vector"));
            }
            p.terms.insert(e, c);
        }
        Ok(p)
    }
}
