use std::fmt;
use std::str::FromStr;

use super::{parse_pattern_list, Permutation};
use crate::error::{Error, Result};

/// Three classes avoiding a pattern of length 3 and one of length 4, each
/// counted by every other Fibonacci number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WestClass {
    /// `S_n(123, 2143)`
    W1,
    /// `S_n(132, 3241)`
    W2,
    /// `S_n(132, 3412)`
    W3,
}

impl WestClass {
    pub const ALL: [WestClass; 3] = [WestClass::W1, WestClass::W2, WestClass::W3];

    pub fn pattern_text(self) -> &'static str {
        match self {
            WestClass::W1 => "123,2143",
            WestClass::W2 => "132,3241",
            WestClass::W3 => "132,3412",
        }
    }

    pub fn patterns(self) -> Vec<Permutation> {
        parse_pattern_list(self.pattern_text()).expect("literal patterns")
    }

    pub fn name(self) -> &'static str {
        match self {
            WestClass::W1 => "W1",
            WestClass::W2 => "W2",
            WestClass::W3 => "W3",
        }
    }

    /// May the new maximum go into gap `k` (before `p_k`, or at the end when
    /// `k = n`)? Only occurrences through the new maximum can appear.
    fn gap_is_legal(self, p: &[usize], k: usize) -> bool {
        let (prefix, suffix) = p.split_at(k - 1);
        let suffix_max = suffix.iter().copied().max().unwrap_or(0);
        let prefix_min = prefix.iter().copied().min().unwrap_or(usize::MAX);
        match self {
            // 123 needs an ascent before the maximum; 2143 needs a descent
            // before it and something larger than the descent's top after it
            WestClass::W1 => {
                prefix.windows(2).all(|w| w[0] > w[1])
                    && (prefix.len() < 2 || suffix_max < prefix[prefix.len() - 2])
            }
            WestClass::W2 => {
                prefix.is_empty()
                    || suffix.is_empty()
                    || (prefix.windows(2).all(|w| w[0] < w[1]) && prefix_min > suffix_max)
            }
            WestClass::W3 => {
                prefix.is_empty()
                    || suffix.is_empty()
                    || (prefix_min > suffix_max && suffix.windows(2).all(|w| w[0] > w[1]))
            }
        }
    }
}

impl fmt::Display for WestClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WestClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "W1" => Ok(WestClass::W1),
            "W2" => Ok(WestClass::W2),
            "W3" => Ok(WestClass::W3),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

fn insert_max(p: &[usize], k: usize) -> Permutation {
    let mut v = Vec::with_capacity(p.len() + 1);
    v.extend_from_slice(&p[..k - 1]);
    v.push(p.len() + 1);
    v.extend_from_slice(&p[k - 1..]);
    Permutation::from_vec_unchecked(v)
}

/// Class members of size `n + 1` obtained by inserting `n + 1` into a gap of
/// `sigma`, which must itself be in the class.
pub fn west_children(sigma: &Permutation, class: WestClass) -> Vec<Permutation> {
    let p = sigma.entries();
    debug_assert!(sigma.avoids_all(&class.patterns()), "{sigma} not in {class}");
    let mut out = Vec::new();
    for k in 1..=p.len() + 1 {
        let legal = class.gap_is_legal(p, k);
        if cfg!(debug_assertions) {
            let child = insert_max(p, k);
            assert_eq!(legal, child.avoids_all(&class.patterns()), "{class} gap {k} of {sigma}");
        }
        if legal {
            out.push(insert_max(p, k));
        }
    }
    out
}

/// Largest size [`west_class`] builds by default.
pub const WEST_BOUND: usize = 12;

/// All of the class at size `n`, lexicographically sorted, grown from `1` by
/// repeated gap insertion.
pub fn west_class(n: usize, class: WestClass) -> Result<Vec<Permutation>> {
    west_class_bounded(n, class, WEST_BOUND)
}

pub fn west_class_bounded(n: usize, class: WestClass, bound: usize) -> Result<Vec<Permutation>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "gap-insertion generation of a West class",
            n,
            bound,
            hint: "the class has F_{2n-2} members; lower n",
        });
    }
    if n == 0 {
        return Ok(vec![Permutation::empty()]);
    }
    let mut level = vec![Permutation::identity(1)];
    for _ in 1..n {
        level = level.iter().flat_map(|s| west_children(s, class)).collect();
    }
    level.sort();
    Ok(level)
}
