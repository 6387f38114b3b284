//! Words over `{S, D}`: block structures of layered matchings, Morse
//! sequences (dot = `S`, dash = `D`), their weights, and the interleave
//! transform that exposes cycle structure.

mod prefix;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permstats::{perm_from_word, Orientation, Permutation};
use crate::polyring::{Monomial, MultiPoly};

pub use prefix::{classify_prefix, decompose_cycles, PrefixClass, PrefixKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// singleton block, length 1
    S,
    /// doubleton block, length 2
    D,
}

impl Letter {
    pub fn length(self) -> usize {
        match self {
            Letter::S => 1,
            Letter::D => 2,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::S => 'S',
            Letter::D => 'D',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'S' | 's' | '.' | '•' => Some(Letter::S),
            'D' | 'd' | '-' | '−' => Some(Letter::D),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockWord(Vec<Letter>);

impl BlockWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BlockWord(letters)
    }

    pub fn empty() -> Self {
        BlockWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters (not the word length).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `#S + 2 #D`
    pub fn word_length(&self) -> usize {
        self.0.iter().map(|l| l.length()).sum()
    }

    pub fn num_singletons(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::S).count()
    }

    pub fn num_doubletons(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::D).count()
    }

    fn xy(&self) -> Monomial {
        Monomial::new(self.num_singletons() as u32, self.num_doubletons() as u32, 0)
    }

    fn with_q(&self, e: usize) -> MultiPoly {
        MultiPoly::monomial(self.xy().mul(&Monomial::q_pow(e as i32)))
    }

    /// q-exponent of [`weight_inv`](Self::weight_inv): `S` scores the length to
    /// its right, `D` twice that.
    pub fn inv_exponent(&self) -> usize {
        let mut right = 0;
        let mut e = 0;
        for &l in self.0.iter().rev() {
            e += match l {
                Letter::S => right,
                Letter::D => 2 * right,
            };
            right += l.length();
        }
        e
    }

    /// q-exponent shared by [`weight_maj`](Self::weight_maj) and
    /// [`weight_rb`](Self::weight_rb): each letter scores the length to its left.
    pub fn left_length_exponent(&self) -> usize {
        let mut left = 0;
        let mut e = 0;
        for &l in &self.0 {
            e += left;
            left += l.length();
        }
        e
    }

    pub fn weight_inv(&self) -> MultiPoly {
        self.with_q(self.inv_exponent())
    }

    pub fn weight_maj(&self) -> MultiPoly {
        self.with_q(self.left_length_exponent())
    }

    pub fn weight_rb(&self) -> MultiPoly {
        self.with_q(self.left_length_exponent())
    }

    /// Cigler's weight: every dash scores one more than the length before it.
    pub fn morse_weight(&self) -> usize {
        let mut before = 0;
        let mut w = 0;
        for &l in &self.0 {
            if l == Letter::D {
                w += before + 1;
            }
            before += l.length();
        }
        w
    }

    /// The layered matching with this block structure.
    pub fn morse_to_perm(&self) -> Permutation {
        perm_from_word(self, Orientation::Layered)
    }

    /// Dot/dash rendering, e.g. `..--.-`.
    pub fn to_morse(&self) -> String {
        self.0
            .iter()
            .map(|l| match l {
                Letter::S => '.',
                Letter::D => '-',
            })
            .collect()
    }

    /// Reads `a_1, a_k, a_2, a_{k-1}, ...`.
    pub fn interleave(&self) -> BlockWord {
        BlockWord(interleave_order(self.len()).map(|i| self.0[i]).collect())
    }

    /// Inverse of [`interleave`](Self::interleave).
    pub fn deinterleave(&self) -> BlockWord {
        let mut out = vec![Letter::S; self.len()];
        for (src, dst) in interleave_order(self.len()).enumerate() {
            out[dst] = self.0[src];
        }
        BlockWord(out)
    }
}

/// Positions of a `k`-letter word in interleaved reading order.
pub(crate) fn interleave_order(k: usize) -> impl Iterator<Item = usize> {
    (0..k).map(move |t| if t % 2 == 0 { t / 2 } else { k - 1 - t / 2 })
}

/// All words of length `n`, in lexicographic order with `S < D`. There are `F_n`.
pub fn enumerate_words(n: usize) -> Vec<BlockWord> {
    // words[m] holds A_m; built bottom-up since A_m = S A_{m-1} + D A_{m-2}
    let mut words: Vec<Vec<BlockWord>> = vec![vec![BlockWord::empty()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for (letter, rest) in [(Letter::S, m - 1), (Letter::D, m.wrapping_sub(2))] {
            if let Some(tails) = words.get(rest) {
                for t in tails {
                    let mut v = Vec::with_capacity(t.len() + 1);
                    v.push(letter);
                    v.extend_from_slice(&t.0);
                    level.push(BlockWord(v));
                }
            }
        }
        words.push(level);
        if m >= 2 {
            // only the last two levels are needed from here on
            words[m - 2] = Vec::new();
        }
    }
    words.swap_remove(n)
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BlockWord {
    type Err = Error;

    /// Accepts `S`/`D` in either case, or Morse dots and dashes.
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::InvalidWord(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(BlockWord)
    }
}

impl Serialize for BlockWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BlockWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BlockWord {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(w("DSDSS").word_length(), 7);
        assert_eq!(w("").word_length(), 0);
        assert_eq!(w("DD").word_length(), 4);
        assert_eq!(w("dsdss"), w("DSDSS"));
        assert_eq!(w("..--.-"), w("SSDDSD"));
        assert_eq!(w("••−−•−"), w("SSDDSD"));
        assert!("SDX".parse::<BlockWord>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let fib = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
        for (n, &f) in fib.iter().enumerate() {
            let ws = enumerate_words(n);
            assert_eq!(ws.len(), f, "n={n}");
            assert!(ws.iter().all(|v| v.word_length() == n));
            assert!(ws.windows(2).all(|p| p[0] < p[1]));
        }
        assert_eq!(enumerate_words(2), vec![w("SS"), w("D")]);
        assert_eq!(enumerate_words(0), vec![w("")]);
    }

    #[test]
    fn worked_weights() {
        assert_eq!(w("DSDSS").weight_inv(), poly("x^3*y^2*q^19"));
        assert_eq!(w("DSDSS").weight_maj(), poly("x^3*y^2*q^16"));
        assert_eq!(w("DSSDD").weight_rb(), poly("x^2*y^3*q^15"));
        assert_eq!(w("").weight_inv(), MultiPoly::one());
        assert_eq!(w("SS").weight_inv(), poly("x^2*q"));
        assert_eq!(w("SD").weight_maj(), poly("x*y*q"));
    }

    #[test]
    fn morse() {
        assert_eq!(w("SSDDSD").morse_weight(), 16);
        assert_eq!(w("SSSS").morse_weight(), 0);
        assert_eq!(w("D").morse_weight(), 1);
        let p = w("SSDDSD").morse_to_perm();
        assert_eq!(p.to_string(), "124365798");
        assert_eq!(p.maj(), 16);
        assert_eq!(w("D").morse_to_perm().to_string(), "21");
        assert_eq!(w("SSDDSD").to_morse(), "..--.-");
    }

    #[test]
    fn interleaving() {
        assert_eq!(w("SDSDSD").interleave(), w("SDDSSD"));
        assert_eq!(w("SDDSSD").deinterleave(), w("SDSDSD"));
        assert_eq!(w("D").interleave(), w("D"));
        assert_eq!(w("SS").interleave(), w("SS"));
        assert_eq!(w("SSDSD").interleave(), w("SDSSD"));
    }

    #[test]
    fn serde_as_string() {
        assert_eq!(serde_json::to_string(&w("DSDSS")).unwrap(), "\"DSDSS\"");
        let back: BlockWord = serde_json::from_str("\"dsd\"").unwrap();
        assert_eq!(back, w("DSD"));
    }
}
