//! Permutations in one-line notation and the statistics used throughout:
//! inversions, descents, major index, reversal and cycle structure.
//!
//! Positions are 1-based, so `descent_set` and `maj` agree with the usual
//! definition `maj = sum of i with p_i > p_{i+1}`.

mod cycles;
mod layered;
mod pattern;
mod west;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::CycleDecomposition;
pub use layered::{perm_from_word, LayeredKind, Orientation};
pub use pattern::{enumerate_avoiders, enumerate_avoiders_bounded, FILTER_BOUND};
pub use west::{west_children, west_class, west_class_bounded, WestClass, WEST_BOUND};

/// A rearrangement of `1..=n`, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{entries:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    /// Caller guarantees the entries form a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok(), "{entries:?}");
        Permutation(entries)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Image of `i` (1-based) under `i -> p_i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inv(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&b| b < p[i]).count())
            .sum()
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    pub fn reversal(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        CycleDecomposition::of(self)
    }

    /// True iff some subsequence is order isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        pattern::contains(&self.0, &pattern.0)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9`, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { " " };
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let entries: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::new(v).map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated pattern list such as `"123,132,213"`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<Permutation>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}
