use std::collections::BTreeSet;

use qfib::blockwords::{enumerate_words, BlockWord};
use qfib::partitions::{enumerate_layered_matchings, enumerate_partitions_avoiding, eta, parse_partition_list, SetPartition};
use qfib::permstats::{enumerate_avoiders, parse_pattern_list, perm_from_word, Orientation, Permutation};
use qfib::qfib::{closed_form_i, complement_transform, qfib_oracle, qfib_recursive, Family};
use qfib::MultiPoly;

fn rl(w: &BlockWord) -> Permutation {
    perm_from_word(w, Orientation::ReverseLayered)
}

#[test]
fn word_weights_match_permutation_statistics() {
    for n in 0..=12 {
        for w in enumerate_words(n) {
            let sigma = rl(&w);
            let k = w.num_doubletons();
            assert_eq!(w.inv_exponent(), sigma.inv(), "{w}");
            assert_eq!(w.left_length_exponent(), sigma.maj(), "{w}");
            assert_eq!(sigma.inv(), n * n.saturating_sub(1) / 2 - k);
            assert_eq!(sigma.reversal().inv(), k);
            let layered = perm_from_word(&w, Orientation::Layered);
            let mut descents: Vec<usize> = sigma.descent_set();
            descents.extend(layered.descent_set());
            descents.sort_unstable();
            assert_eq!(descents, (1..n).collect::<Vec<_>>(), "{w}");
        }
    }
}

#[test]
fn words_and_matchings_round_trip() {
    for n in 0..=10 {
        for w in enumerate_words(n) {
            for o in [Orientation::Layered, Orientation::ReverseLayered] {
                assert_eq!(perm_from_word(&w, o).block_structure_as(o).unwrap(), w);
            }
        }
    }
}

#[test]
fn morse_weight_is_maj_of_layered_matching() {
    for n in 0..=14 {
        for w in enumerate_words(n) {
            assert_eq!(w.morse_weight(), w.morse_to_perm().maj(), "{w}");
        }
    }
}

#[test]
fn rb_weight_matches_eta_image() {
    for n in 0..=9 {
        for w in enumerate_words(n) {
            let sigma = rl(&w);
            let part = eta(&sigma).unwrap();
            assert_eq!(part.block_word().unwrap(), w);
            assert_eq!(w.left_length_exponent(), part.rb());
            assert_eq!(sigma.maj(), part.rb(), "{sigma}");
        }
    }
}

#[test]
fn interleave_is_invertible_on_all_short_words() {
    for n in 0..=14 {
        for w in enumerate_words(n) {
            assert_eq!(w.interleave().deinterleave(), w);
        }
    }
}

#[test]
fn filters_match_structural_generators() {
    let rev = parse_pattern_list("123,132,213").unwrap();
    let lay = parse_pattern_list("231,312,321").unwrap();
    for n in 0..=9 {
        let words = enumerate_words(n);
        let a: BTreeSet<_> = enumerate_avoiders(n, &rev).unwrap().into_iter().collect();
        let b: BTreeSet<_> = words.iter().map(rl).collect();
        assert_eq!(a, b, "n={n}");
        let a: BTreeSet<_> = enumerate_avoiders(n, &lay).unwrap().into_iter().collect();
        let b: BTreeSet<_> = words.iter().map(|w| perm_from_word(w, Orientation::Layered)).collect();
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn partition_avoidance_is_inherited_by_subpartitions() {
    let pats = parse_partition_list("13/2,123,1/2/3").unwrap();
    for n in 0..=7 {
        for beta in enumerate_partitions_avoiding(n, &[]).unwrap() {
            for pat in &pats {
                if beta.contains_pattern(pat) {
                    continue;
                }
                // restricting to any initial segment or dropping an element keeps avoidance
                for drop in 1..=n {
                    let sub: Vec<Vec<usize>> = beta
                        .blocks()
                        .iter()
                        .map(|b| b.iter().filter(|&&v| v != drop).map(|&v| if v > drop { v - 1 } else { v }).collect::<Vec<_>>())
                        .filter(|b: &Vec<usize>| !b.is_empty())
                        .collect();
                    let sub = SetPartition::new(sub).unwrap();
                    assert!(!sub.contains_pattern(pat), "{beta} drop {drop} {pat}");
                }
            }
        }
    }
}

#[test]
fn layered_matchings_equal_the_partition_filter() {
    let pats = parse_partition_list("13/2,123").unwrap();
    for n in 0..=9 {
        let a: BTreeSet<_> = enumerate_partitions_avoiding(n, &pats).unwrap().into_iter().collect();
        let b: BTreeSet<_> = enumerate_layered_matchings(n).into_iter().collect();
        assert_eq!(a, b, "n={n}");
    }
}

#[test]
fn recursions_agree_with_oracle() {
    for n in 0..=12 {
        for f in [Family::I, Family::M, Family::C, Family::IPrime, Family::MPrime] {
            assert_eq!(qfib_recursive(f, n).unwrap(), qfib_oracle(f, n).unwrap(), "{f} n={n}");
        }
        assert_eq!(closed_form_i(n), qfib_oracle(Family::I, n).unwrap());
    }
}

#[test]
fn transforms_are_involutions() {
    for n in 0..=10 {
        let i = qfib_oracle(Family::I, n).unwrap();
        let back = complement_transform(&complement_transform(&i, n).unwrap(), n).unwrap();
        assert_eq!(back, i);
    }
}

#[test]
fn cycle_markers_collapse_to_cycle_count() {
    use qfib::polyring::{Monomial, Substitution};
    for n in 0..=12 {
        let dp = qfib_oracle(Family::DPrime, n).unwrap();
        let collapsed = dp.substitute(&Substitution::new().all_z(Monomial::q_pow(1))).unwrap();
        assert_eq!(collapsed, qfib_oracle(Family::D, n).unwrap(), "n={n}");
    }
}

#[test]
fn equidistributions() {
    for n in 0..=9 {
        assert_eq!(qfib_oracle(Family::M, n).unwrap(), qfib_oracle(Family::RB, n).unwrap());
    }
    for n in 0..=12 {
        assert_eq!(qfib_oracle(Family::MPrime, n).unwrap(), qfib_oracle(Family::C, n).unwrap());
    }
    assert_ne!(qfib_oracle(Family::I, 3).unwrap(), MultiPoly::zero());
}
