//! Reading cycle lengths of a reverse layered matching off its interleaved
//! word.
//!
//! Undo the interleave to get the block word `a_1..a_k`. The outermost cycle
//! comes from the shortest *shell*: a front run `a_1..a_i` and a back run
//! `a_{k-j+1}..a_k` of equal length `m` with `i + j <= k`. That shell is a
//! single `2m`-cycle, except a lone `D` at each end, which gives two
//! 2-cycles. The letters strictly inside the shell form an independent word
//! (the remainder), whose interleave is classified the same way. A word with
//! no shell is a center: `S`, `D`, `S D^j` or `D^j S`.

use std::fmt;

use super::{interleave_order, BlockWord, Letter};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrefixKind {
    SS,
    DD,
    /// `D S * S`, where `*` is the first letter of the remainder (or absent).
    DsStarS,
    DSSD,
    /// `S D^l S`, `l >= 1`
    SDlS(usize),
    /// `D S D^l S`, `l >= 2` even; a `*` may sit before the final `S`
    DSDlS(usize),
    Residual,
}

impl PrefixKind {
    /// Cycle lengths the named kinds are known to produce.
    pub fn named_cycles(self) -> Option<Vec<usize>> {
        match self {
            PrefixKind::SS => Some(vec![2]),
            PrefixKind::DD => Some(vec![2, 2]),
            PrefixKind::DsStarS => Some(vec![4]),
            PrefixKind::DSSD => Some(vec![6]),
            PrefixKind::SDlS(l) => Some(vec![2 * l + 2]),
            PrefixKind::DSDlS(l) => Some(vec![2 * l + 4]),
            PrefixKind::Residual => None,
        }
    }
}

impl fmt::Display for PrefixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefixKind::SS => f.write_str("SS"),
            PrefixKind::DD => f.write_str("DD"),
            PrefixKind::DsStarS => f.write_str("DS*S"),
            PrefixKind::DSSD => f.write_str("DSSD"),
            PrefixKind::SDlS(l) => write!(f, "SD^{l}S"),
            PrefixKind::DSDlS(l) => write!(f, "DSD^{l}S"),
            PrefixKind::Residual => f.write_str("RESIDUAL"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixClass {
    pub kind: PrefixKind,
    /// Letters of the interleaved word used by the leading cycle(s).
    pub consumed: usize,
    /// Cycle lengths produced by the consumed letters, largest first.
    pub predicted_cycles: Vec<usize>,
    /// Interleaved word still to be classified.
    pub remainder: BlockWord,
    /// The letter standing in the `*` slot, if any.
    pub star: Option<Letter>,
}

/// `(i, j, m)` for the shortest shell of `a`.
fn shell(a: &[Letter]) -> Option<(usize, usize, usize)> {
    let k = a.len();
    let mut front = Vec::with_capacity(k);
    let mut s = 0;
    for l in a {
        s += l.length();
        front.push(s);
    }
    let mut back = 0;
    for j in 1..=k {
        back += a[k - j].length();
        if let Ok(i) = front.binary_search(&back) {
            if i + 1 + j <= k {
                return Some((i + 1, j, back));
            }
        }
    }
    None
}

fn center_cycles(a: &[Letter]) -> Option<Vec<usize>> {
    use Letter::*;
    match a {
        [] => Some(vec![]),
        [S] => Some(vec![1]),
        [D] => Some(vec![1, 1]),
        [S, rest @ ..] | [rest @ .., S] if rest.iter().all(|&l| l == D) => {
            Some(vec![2 * rest.len() + 1])
        }
        _ => None,
    }
}

fn name(pattern: &[Option<Letter>]) -> PrefixKind {
    use Letter::*;
    let letters: Vec<Letter> = pattern.iter().flatten().copied().collect();
    let has_star = pattern.contains(&None);
    match (letters.as_slice(), has_star) {
        ([S, S], false) => PrefixKind::SS,
        ([D, D], false) => PrefixKind::DD,
        ([D, S, S], _) => PrefixKind::DsStarS,
        ([D, S, S, D], false) => PrefixKind::DSSD,
        ([S, mid @ .., S], false) if !mid.is_empty() && mid.iter().all(|&l| l == D) => {
            PrefixKind::SDlS(mid.len())
        }
        ([D, S, mid @ .., S], _)
            if mid.len() >= 2 && mid.len() % 2 == 0 && mid.iter().all(|&l| l == D) =>
        {
            PrefixKind::DSDlS(mid.len())
        }
        _ => PrefixKind::Residual,
    }
}

/// Classifies the leading cycle(s) of an interleaved word.
pub fn classify_prefix(w: &BlockWord) -> Result<PrefixClass> {
    if w.is_empty() {
        return Err(Error::InvalidWord("empty word has no prefix".into()));
    }
    let a = w.deinterleave();
    let a = a.letters();
    let k = a.len();
    let Some((i, j, m)) = shell(a) else {
        let predicted_cycles = center_cycles(a).expect("every shell-free word is a center");
        return Ok(PrefixClass {
            kind: PrefixKind::Residual,
            consumed: k,
            predicted_cycles,
            remainder: BlockWord::empty(),
            star: None,
        });
    };
    let in_shell = |p: usize| p < i || p >= k - j;
    let mut pattern = Vec::new();
    let mut left = i + j;
    for p in interleave_order(k) {
        if left == 0 {
            break;
        }
        if in_shell(p) {
            pattern.push(Some(a[p]));
            left -= 1;
        } else {
            pattern.push(None);
        }
    }
    let star = pattern.contains(&None).then(|| a[i]);
    let kind = name(&pattern);
    let predicted_cycles = if i == 1 && j == 1 && a[0] == Letter::D {
        vec![2, 2]
    } else {
        vec![2 * m]
    };
    debug_assert!(kind.named_cycles().is_none_or(|c| c == predicted_cycles), "{kind}");
    Ok(PrefixClass {
        kind,
        consumed: i + j,
        predicted_cycles,
        remainder: BlockWord::new(a[i..k - j].to_vec()).interleave(),
        star,
    })
}

/// Cycle type (largest first) of the reverse layered matching whose block
/// word interleaves to `w`, by repeated prefix classification.
pub fn decompose_cycles(w: &BlockWord) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while !cur.is_empty() {
        let c = classify_prefix(&cur).expect("nonempty");
        out.extend(c.predicted_cycles);
        cur = c.remainder;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
