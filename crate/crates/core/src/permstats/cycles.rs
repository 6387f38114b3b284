use std::collections::BTreeMap;
use std::fmt;

use super::Permutation;

/// Disjoint cycles of `i -> p_i`, each listed from its smallest element,
/// cycles ordered by that smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn of(sigma: &Permutation) -> Self {
        let n = sigma.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = sigma.apply(i);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { n, cycles }
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// c(sigma)
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// c_i(sigma)
    pub fn count_of_length(&self, len: usize) -> usize {
        self.cycles.iter().filter(|c| c.len() == len).count()
    }

    pub fn length_counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for c in &self.cycles {
            *m.entry(c.len()).or_default() += 1;
        }
        m
    }

    /// Cycle lengths as a multiset, largest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut p = vec![0; self.n];
        for c in &self.cycles {
            for (k, &i) in c.iter().enumerate() {
                p[i - 1] = c[(k + 1) % c.len()];
            }
        }
        Permutation::from_vec_unchecked(p)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { " " };
        for c in &self.cycles {
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let d = p("978645312").cycle_decomposition();
        assert_eq!(d.cycles(), &[vec![1, 9, 2, 7, 3, 8], vec![4, 6, 5]]);
        assert_eq!(d.to_string(), "(192738)(465)");
        assert_eq!(d.count(), 2);
        assert_eq!(d.count_of_length(6), 1);
        assert_eq!(d.count_of_length(3), 1);
        assert_eq!(d.to_permutation(), p("978645312"));
    }

    #[test]
    fn identity_is_all_fixed_points() {
        let d = Permutation::identity(7).cycle_decomposition();
        assert_eq!(d.count(), 7);
        assert_eq!(d.count_of_length(1), 7);
        assert_eq!(Permutation::empty().cycle_decomposition().count(), 0);
    }

    #[test]
    fn two_transpositions() {
        let d = p("3412").cycle_decomposition();
        assert_eq!(d.cycles(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(d.count_of_length(2), 2);
        assert_eq!(d.cycle_type(), vec![2, 2]);
    }
}
