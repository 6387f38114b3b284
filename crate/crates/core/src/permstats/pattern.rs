use super::Permutation;
use crate::error::{Error, Result};

/// Largest `n` for which [`enumerate_avoiders`] scans all of `S_n`.
pub const FILTER_BOUND: usize = 9;

/// Subsequence search with pruning: positions are chosen left to right and a
/// candidate is kept only if it is order-consistent with everything chosen so far.
pub(crate) fn contains(seq: &[usize], pat: &[usize]) -> bool {
    if pat.len() > seq.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    embed(seq, pat, 0, None, &mut chosen)
}

/// Like [`contains`], but the occurrence must use the last entry of `seq` as
/// the last entry of the pattern.
fn contains_ending_at_last(seq: &[usize], pat: &[usize]) -> bool {
    let Some((&last, head)) = seq.split_last() else {
        return pat.is_empty();
    };
    let Some((&pat_last, pat_head)) = pat.split_last() else {
        return true;
    };
    if pat_head.len() > head.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    embed(head, pat_head, 0, Some((last, pat_last)), &mut chosen)
}

fn embed(
    seq: &[usize],
    pat: &[usize],
    start: usize,
    fixed: Option<(usize, usize)>,
    chosen: &mut Vec<usize>,
) -> bool {
    let j = chosen.len();
    if j == pat.len() {
        return true;
    }
    let need = pat.len() - j;
    for i in start..=seq.len() - need {
        let v = seq[i];
        let fits = chosen
            .iter()
            .zip(&pat[..j])
            .all(|(&c, &pc)| (c < v) == (pc < pat[j]))
            && fixed.is_none_or(|(lv, lp)| (v < lv) == (pat[j] < lp));
        if fits {
            chosen.push(v);
            if embed(seq, pat, i + 1, fixed, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// All of `S_n(patterns)` in lexicographic order, by filtering `S_n`.
pub fn enumerate_avoiders(n: usize, patterns: &[Permutation]) -> Result<Vec<Permutation>> {
    enumerate_avoiders_bounded(n, patterns, FILTER_BOUND)
}

pub fn enumerate_avoiders_bounded(
    n: usize,
    patterns: &[Permutation],
    bound: usize,
) -> Result<Vec<Permutation>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "filter enumeration of S_n",
            n,
            bound,
            hint: "use the structural generators (perm_from_word, west_class) instead",
        });
    }
    let mut out = Vec::new();
    if patterns.iter().any(Permutation::is_empty) {
        // every permutation contains the empty pattern
        return Ok(out);
    }
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend(n, patterns, &mut prefix, &mut used, &mut out);
    Ok(out)
}

// Avoidance is inherited by prefixes, so a prefix containing a pattern is
// cut immediately; only occurrences through the newest entry need checking.
fn extend(
    n: usize,
    patterns: &[Permutation],
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n {
        out.push(Permutation::from_vec_unchecked(prefix.clone()));
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if patterns.iter().all(|p| !contains_ending_at_last(prefix, p.entries())) {
            used[v] = true;
            extend(n, patterns, prefix, used, out);
            used[v] = false;
        }
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstats::parse_pattern_list;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(p("564312").contains_pattern(&p("321")));
        assert!(!p("564312").contains_pattern(&p("123")));
        assert!(p("564312").contains_pattern(&Permutation::empty()));
        assert!(Permutation::empty().contains_pattern(&Permutation::empty()));
        assert!(!p("12").contains_pattern(&p("123")));
        assert!(p("3142").contains_pattern(&p("3142")));
        assert!(!p("3142").contains_pattern(&p("2143")));
    }

    #[test]
    fn anchored_search_agrees_with_plain_search() {
        let pats = parse_pattern_list("132,2143,3412,1").unwrap();
        for sigma in enumerate_avoiders(6, &[]).unwrap() {
            for pat in &pats {
                let full = contains(sigma.entries(), pat.entries());
                let e = sigma.entries();
                let via_last = (1..=e.len()).any(|k| contains_ending_at_last(&e[..k], pat.entries()));
                assert_eq!(full, via_last, "{sigma} {pat}");
            }
        }
    }

    #[test]
    fn fibonacci_class_at_four() {
        let pats = parse_pattern_list("123,132,213").unwrap();
        let got = enumerate_avoiders(4, &pats).unwrap();
        let want: Vec<Permutation> = ["3412", "3421", "4231", "4312", "4321"].iter().map(|s| p(s)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn empty_and_mixed_lengths() {
        assert_eq!(enumerate_avoiders(0, &[p("12")]).unwrap(), vec![Permutation::empty()]);
        let got = enumerate_avoiders(3, &parse_pattern_list("132,3241").unwrap()).unwrap();
        let want: Vec<Permutation> = ["123", "213", "231", "312", "321"].iter().map(|s| p(s)).collect();
        assert_eq!(got, want);
        assert_eq!(enumerate_avoiders(5, &[]).unwrap().len(), 120);
        assert!(enumerate_avoiders(0, &[Permutation::empty()]).unwrap().is_empty());
    }

    #[test]
    fn bound_is_enforced() {
        let err = enumerate_avoiders(10, &[]).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { n: 10, bound: 9, .. }));
        assert!(err.to_string().contains("structural"));
    }
}
