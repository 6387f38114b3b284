use super::Permutation;
use crate::blockwords::{BlockWord, Letter};
use crate::error::{Error, Result};

/// Which way the layers of a matching run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Increasing layers, each decreasing: `S_n(231,312,321)`.
    Layered,
    /// Reversal of a layered permutation: `S_n(123,132,213)`.
    ReverseLayered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayeredKind {
    LayeredMatching,
    ReverseLayeredMatching,
    Both,
    Neither,
}

/// Layer sizes if `p` is layered. A layer ends at position `j` exactly when
/// `max(p_1..p_j) = j`; each layer must then read `j, j-1, ..., start`.
fn layer_sizes(p: &[usize]) -> Option<Vec<usize>> {
    let mut sizes = Vec::new();
    let mut start = 0;
    let mut max = 0;
    for (j, &v) in p.iter().enumerate() {
        max = max.max(v);
        if max == j + 1 {
            let layer = &p[start..=j];
            if layer.iter().copied().ne((start + 1..=j + 1).rev()) {
                return None;
            }
            sizes.push(j + 1 - start);
            start = j + 1;
        }
    }
    Some(sizes)
}

fn matching_word(sizes: &[usize]) -> Option<BlockWord> {
    sizes
        .iter()
        .map(|&s| match s {
            1 => Some(Letter::S),
            2 => Some(Letter::D),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(BlockWord::new)
}

impl Permutation {
    pub fn layered_classify(&self) -> LayeredKind {
        let layered = self.block_structure_as(Orientation::Layered).is_ok();
        let reverse = self.block_structure_as(Orientation::ReverseLayered).is_ok();
        match (layered, reverse) {
            (true, true) => LayeredKind::Both,
            (true, false) => LayeredKind::LayeredMatching,
            (false, true) => LayeredKind::ReverseLayeredMatching,
            (false, false) => LayeredKind::Neither,
        }
    }

    /// Block word of a (reverse) layered matching read in the given orientation.
    pub fn block_structure_as(&self, orientation: Orientation) -> Result<BlockWord> {
        let not = || Error::NotAMatching(self.to_string());
        match orientation {
            Orientation::Layered => {
                layer_sizes(self.entries()).and_then(|s| matching_word(&s)).ok_or_else(not)
            }
            Orientation::ReverseLayered => {
                let rev = self.reversal();
                let mut sizes = layer_sizes(rev.entries()).ok_or_else(not)?;
                sizes.reverse();
                matching_word(&sizes).ok_or_else(not)
            }
        }
    }

    /// Block word, reading `self` as a reverse layered matching when it is one
    /// and as a layered matching otherwise. Only `n <= 2` is readable both ways.
    pub fn block_structure(&self) -> Result<BlockWord> {
        self.block_structure_as(Orientation::ReverseLayered)
            .or_else(|_| self.block_structure_as(Orientation::Layered))
    }

    /// The unique matching of the given orientation with block word `w`.
    pub fn from_word(w: &BlockWord, orientation: Orientation) -> Permutation {
        let n = w.word_length();
        let mut out = Vec::with_capacity(n);
        match orientation {
            Orientation::Layered => {
                let mut next = 1;
                for l in w.letters() {
                    match l {
                        Letter::S => out.push(next),
                        Letter::D => out.extend([next + 1, next]),
                    }
                    next += l.length();
                }
            }
            Orientation::ReverseLayered => {
                let mut top = n;
                for l in w.letters() {
                    match l {
                        Letter::S => out.push(top),
                        Letter::D => out.extend([top - 1, top]),
                    }
                    top -= l.length();
                }
            }
        }
        Permutation::from_vec_unchecked(out)
    }
}

/// The unique matching of the given orientation with block word `w`.
pub fn perm_from_word(w: &BlockWord, orientation: Orientation) -> Permutation {
    Permutation::from_word(w, orientation)
}
