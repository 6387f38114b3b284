//! Set partitions of `[n]` in standard order, partition patterns, the right
//! bigger statistic `rb`, and the map from reverse layered matchings to
//! layered matching partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blockwords::{enumerate_words, BlockWord, Letter};
use crate::error::{Error, Result};
use crate::permstats::{Orientation, Permutation};

/// Largest `n` for which [`enumerate_partitions_avoiding`] scans every partition.
pub const PARTITION_FILTER_BOUND: usize = 9;

/// Blocks ordered by increasing minimum, each block ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes `blocks` into standard order; they must be nonempty,
    /// disjoint and cover `1..=n`.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |b: &Vec<Vec<usize>>| Error::InvalidPartition(format!("{b:?}"));
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(bad(&blocks));
            }
            for &v in b {
                if v == 0 || v > n || seen[v] {
                    return Err(bad(&blocks));
                }
                seen[v] = true;
            }
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn empty() -> Self {
        SetPartition { blocks: Vec::new() }
    }

    /// Restricted growth string: `rgs[i]` is the block index of `i + 1`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(i + 1);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Size of the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn num_singletons(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    pub fn num_doubletons(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 2).count()
    }

    /// Block index of each element, 0-based, indexed by element.
    fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    /// Block word if every block is an interval of size at most 2.
    pub fn block_word(&self) -> Result<BlockWord> {
        let mut next = 1;
        let mut letters = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let expected: Vec<usize> = (next..next + b.len()).collect();
            if *b != expected || b.len() > 2 {
                return Err(Error::NotAMatching(self.to_string()));
            }
            letters.push(if b.len() == 1 { Letter::S } else { Letter::D });
            next += b.len();
        }
        Ok(BlockWord::new(letters))
    }

    /// Pairs `(b, B_j)` with `b` in an earlier block and `max B_j > b`.
    pub fn rb(&self) -> usize {
        let mut total = 0;
        for (j, later) in self.blocks.iter().enumerate() {
            let top = *later.last().expect("blocks are nonempty");
            total += self.blocks[..j].iter().flatten().filter(|&&b| b < top).count();
        }
        total
    }

    /// Literal containment: distinct blocks of `self` hold the given sets
    /// as subsets.
    pub fn holds_blocks(&self, sets: &[Vec<usize>]) -> bool {
        let owner = self.block_of();
        let n = self.size();
        let mut used = vec![false; self.blocks.len()];
        for a in sets {
            let Some(&first) = a.first() else { continue };
            if first > n || a.iter().any(|&v| v == 0 || v > n || owner[v] != owner[first]) {
                return false;
            }
            if std::mem::replace(&mut used[owner[first]], true) {
                return false;
            }
        }
        true
    }

    /// True iff some sub-partition of `self` is order isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &SetPartition) -> bool {
        let beta = self.block_of();
        let alpha = pattern.block_of();
        let mut chosen = Vec::with_capacity(pattern.size());
        embed(&beta[1..], &alpha[1..], 0, &mut chosen)
    }

    pub fn avoids_all(&self, patterns: &[SetPartition]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }
}

// Pick positions of `beta` left to right for the elements of `alpha`; two
// picks must share a block in `beta` exactly when they share one in `alpha`.
fn embed(beta: &[usize], alpha: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == alpha.len() {
        return true;
    }
    let need = alpha.len() - t;
    if beta.len() < need {
        return false;
    }
    for i in start..=beta.len() - need {
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(s, &c)| (beta[c] == beta[i]) == (alpha[s] == alpha[t]));
        if fits {
            chosen.push(i);
            if embed(beta, alpha, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Free-function form of [`SetPartition::contains_pattern`].
pub fn partition_contains(beta: &SetPartition, alpha: &SetPartition) -> bool {
    beta.contains_pattern(alpha)
}

/// `alpha ⊆ beta`: the sets of `alpha` sit inside distinct blocks of `beta`.
pub fn is_subpartition(alpha: &[Vec<usize>], beta: &SetPartition) -> bool {
    beta.holds_blocks(alpha)
}

/// All partitions of `[n]` avoiding every pattern, in restricted growth
/// string order.
pub fn enumerate_partitions_avoiding(n: usize, patterns: &[SetPartition]) -> Result<Vec<SetPartition>> {
    if n > PARTITION_FILTER_BOUND {
        return Err(Error::BoundExceeded {
            what: "filter enumeration of set partitions",
            n,
            bound: PARTITION_FILTER_BOUND,
            hint: "use enumerate_layered_matchings instead",
        });
    }
    let mut out = Vec::new();
    if patterns.iter().any(|p| p.size() == 0) {
        return Ok(out);
    }
    let mut rgs = Vec::with_capacity(n);
    grow(n, patterns, &mut rgs, 0, &mut out);
    Ok(out)
}

// Restricting to [k] gives a sub-partition, so a prefix that contains a
// pattern can be cut.
fn grow(n: usize, patterns: &[SetPartition], rgs: &mut Vec<usize>, blocks: usize, out: &mut Vec<SetPartition>) {
    if rgs.len() == n {
        out.push(SetPartition::from_rgs(rgs));
        return;
    }
    for b in 0..=blocks {
        rgs.push(b);
        if SetPartition::from_rgs(rgs).avoids_all(patterns) {
            grow(n, patterns, rgs, blocks.max(b + 1), out);
        }
        rgs.pop();
    }
}

/// The layered matching partition with block word `w`.
pub fn partition_from_word(w: &BlockWord) -> SetPartition {
    let mut next = 1;
    let mut blocks = Vec::with_capacity(w.len());
    for l in w.letters() {
        blocks.push((next..next + l.length()).collect());
        next += l.length();
    }
    SetPartition { blocks }
}

/// All layered matchings of `[n]`, generated from block words.
pub fn enumerate_layered_matchings(n: usize) -> Vec<SetPartition> {
    enumerate_words(n).iter().map(partition_from_word).collect()
}

/// Sends a reverse layered matching to the layered matching partition with
/// the same block word.
pub fn eta(sigma: &Permutation) -> Result<SetPartition> {
    sigma
        .block_structure_as(Orientation::ReverseLayered)
        .map(|w| partition_from_word(&w))
}

impl fmt::Display for SetPartition {
    /// Slash notation; elements within a block are comma separated once
    /// `n > 9`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() <= 9 { "" } else { "," };
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect();
        f.write_str(&parts.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition::empty());
        }
        let bad = || Error::InvalidPartition(s.to_string());
        let blocks = s
            .split('/')
            .map(|b| {
                let b = b.trim();
                if b.contains(',') {
                    b.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
                } else {
                    b.chars()
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        SetPartition::new(blocks)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SetPartition::new(Vec::<Vec<usize>>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated list of slash-notation patterns, e.g. `"13/2, 123"`.
pub fn parse_partition_list(s: &str) -> Result<Vec<SetPartition>> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> BlockWord {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_normalizes() {
        assert_eq!(a("45/1/632").to_string(), "1/236/45");
        assert!("12/2".parse::<SetPartition>().is_err());
        assert!("13".parse::<SetPartition>().is_err());
        let big = a("1,10/2,3,4,5,6,7,8,9");
        assert_eq!(big.to_string(), "1,10/2,3,4,5,6,7,8,9");
        assert_eq!(a("").size(), 0);
    }

    #[test]
    fn containment() {
        let beta = a("1/236/45");
        assert!(beta.contains_pattern(&a("13/2")));
        assert!(beta.contains_pattern(&SetPartition::empty()));
        // 1, 2, 4 lie in three different blocks
        assert!(beta.contains_pattern(&a("1/2/3")));
        assert!(!a("123/45").contains_pattern(&a("1/2/3")));
        assert!(!a("12/34").contains_pattern(&a("13/2")));
    }

    #[test]
    fn literal_subpartition() {
        let beta = a("1/236/45");
        assert!(is_subpartition(&[vec![2, 6], vec![4]], &beta));
        assert!(!is_subpartition(&[vec![1], vec![2], vec![3]], &beta));
        assert!(!is_subpartition(&[vec![2, 4]], &beta));
        assert!(is_subpartition(&[], &beta));
    }

    #[test]
    fn avoiders() {
        let pats = parse_partition_list("13/2, 123").unwrap();
        assert_eq!(enumerate_partitions_avoiding(4, &pats).unwrap().len(), 5);
        assert_eq!(enumerate_partitions_avoiding(0, &pats).unwrap(), vec![SetPartition::empty()]);
        assert_eq!(enumerate_partitions_avoiding(3, &[]).unwrap().len(), 5);
        assert_eq!(enumerate_partitions_avoiding(6, &[]).unwrap().len(), 203);
        assert!(enumerate_partitions_avoiding(10, &[]).is_err());
        for n in 0..=8 {
            let mut filtered = enumerate_partitions_avoiding(n, &pats).unwrap();
            let mut built = enumerate_layered_matchings(n);
            filtered.sort();
            built.sort();
            assert_eq!(filtered, built, "n={n}");
        }
    }

    #[test]
    fn layered_matchings() {
        assert_eq!(enumerate_layered_matchings(2), vec![a("1/2"), a("12")]);
        assert_eq!(enumerate_layered_matchings(7).len(), 21);
        assert_eq!(partition_from_word(&w("DSSDD")), a("12/3/4/56/78"));
        assert_eq!(a("12/3/4/56/78").block_word().unwrap(), w("DSSDD"));
        assert!(a("13/2").block_word().is_err());
    }

    #[test]
    fn rb_values() {
        assert_eq!(a("12/3/4/56/78").rb(), 15);
        assert_eq!(a("1/2/3/4/5").rb(), 10);
        assert_eq!(a("1/236/45").rb(), 4);
        for p in enumerate_layered_matchings(9) {
            let by_min: usize = p.blocks().iter().map(|b| b[0] - 1).sum();
            assert_eq!(p.rb(), by_min, "{p}");
        }
    }

    #[test]
    fn eta_examples() {
        let p: Permutation = "6753421".parse().unwrap();
        let e = eta(&p).unwrap();
        assert_eq!(e, a("12/3/45/6/7"));
        assert_eq!(e.rb(), 16);
        assert_eq!(p.maj(), 16);
        assert_eq!(eta(&Permutation::empty()).unwrap(), SetPartition::empty());
        // 21 is the reverse layered matching of SS; D belongs to 12
        let p21: Permutation = "21".parse().unwrap();
        assert_eq!(eta(&p21).unwrap(), a("1/2"));
        assert_eq!(eta(&p21).unwrap().rb(), p21.maj());
        let p12: Permutation = "12".parse().unwrap();
        assert_eq!(eta(&p12).unwrap(), a("12"));
        assert_eq!(eta(&p12).unwrap().rb(), p12.maj());
        assert!(eta(&"2413".parse().unwrap()).is_err());
    }

    #[test]
    fn json_is_nested_arrays() {
        let s = serde_json::to_string(&a("1/236/45")).unwrap();
        assert_eq!(s, "[[1],[2,3,6],[4,5]]");
        let back: SetPartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a("1/236/45"));
        assert!(serde_json::from_str::<SetPartition>("[[1],[1]]").is_err());
    }
}
