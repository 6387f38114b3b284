//! Canonical text, LaTeX and JSON renderings, plus a parser for the text form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl MultiPoly {
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }

    /// LaTeX rendering of the canonical text: braced exponents, subscripted z.
    pub fn to_latex(&self) -> String {
        let text = self.canonical_text();
        let mut out = String::with_capacity(text.len() + 16);
        let mut chars = text.chars().peekable();
        while let Some(ch) = chars.next() {
            match ch {
                '*' => {}
                '^' => {
                    let mut exp = String::new();
                    if chars.peek() == Some(&'-') {
                        exp.push(chars.next().unwrap());
                    }
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        exp.push(*d);
                        chars.next();
                    }
                    out.push_str(&format!("^{{{exp}}}"));
                }
                'z' => {
                    let mut idx = String::new();
                    while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                        idx.push(*d);
                        chars.next();
                    }
                    out.push_str(&format!("z_{{{idx}}}"));
                }
                c => out.push(c),
            }
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                x: m.x_exp(),
                y: m.y_exp(),
                q: m.q_exp(),
                z: m.z_exps().iter().map(|&(i, e)| [i, e]).collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coefficient {:?}", t.coeff),
            })?;
            let mono = Monomial::from_parts(t.x, t.y, t.q, t.z.iter().map(|&[i, e]| (i, e)));
            p.add_term(mono, c);
        }
        Ok(p)
    }
}

/// One term of the JSON rendering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub x: u32,
    pub y: u32,
    pub q: i32,
    pub z: Vec<[u32; 2]>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        MultiPoly::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let v: i64 = self.digits()?.parse().map_err(|_| Error::Parse {
            pos: self.pos,
            msg: "exponent out of range".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'0'..=b'9') => {
                    let d = self.digits()?;
                    coeff *= d.parse::<BigInt>().unwrap();
                }
                Some(c @ (b'x' | b'y' | b'q')) => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    let factor = match c {
                        b'q' => Monomial::q_pow(e as i32),
                        _ if e < 0 => return self.err("only q may have a negative exponent"),
                        b'x' => Monomial::x_pow(e as u32),
                        _ => Monomial::y_pow(e as u32),
                    };
                    mono = mono.mul(&factor);
                }
                Some(b'z') => {
                    self.pos += 1;
                    let idx: u32 = self.digits()?.parse().map_err(|_| Error::Parse {
                        pos: self.pos,
                        msg: "z index out of range".into(),
                    })?;
                    let e = self.exponent()?;
                    if e < 0 || idx == 0 {
                        return self.err("z needs a positive index and nonnegative exponent");
                    }
                    mono = mono.mul(&Monomial::z_pow(idx, e as u32));
                }
                _ => return self.err("expected a factor"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let mut out = MultiPoly::zero();
        let mut sign = match p.peek() {
            Some(b'-') => {
                p.pos += 1;
                -1
            }
            Some(b'+') => {
                p.pos += 1;
                1
            }
            None => return p.err("empty input"),
            _ => 1,
        };
        loop {
            let (m, c) = p.term()?;
            out.add_term(m, c * sign);
            match p.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return p.err("expected + or -"),
            }
            p.pos += 1;
        }
    }
}
