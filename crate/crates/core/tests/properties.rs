use num_bigint::BigInt;
use proptest::prelude::*;

use qfib::blockwords::BlockWord;
use qfib::permstats::Permutation;
use qfib::polyring::{Image, Monomial, MultiPoly, Substitution};

fn monomial() -> impl Strategy<Value = Monomial> {
    (0u32..4, 0u32..4, -4i32..5, prop::collection::vec((1u32..5, 0u32..3), 0..3))
        .prop_map(|(x, y, q, z)| Monomial::from_parts(x, y, q, z))
}

fn coeff() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        4 => (-20i64..21).prop_map(BigInt::from),
        1 => any::<i64>().prop_map(|v| BigInt::from(v) * BigInt::from(v)),
    ]
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), coeff()), 0..6).prop_map(MultiPoly::from_terms)
}

fn image(allow_x: bool) -> impl Strategy<Value = Image> {
    let sign = prop_oneof![Just(1i64), Just(-1i64), Just(2i64)];
    (sign, 0u32..3, 0u32..3, -2i32..3).prop_map(move |(c, a, b, e)| {
        let (a, b) = if allow_x { (a, b) } else { (0, 0) };
        Image::new(c, Monomial::new(a, b, e))
    })
}

fn q_image() -> impl Strategy<Value = Image> {
    (prop_oneof![Just(1i64), Just(-1i64)], -2i32..3).prop_map(|(c, e)| Image::new(c, Monomial::q_pow(e)))
}

fn substitution() -> impl Strategy<Value = Substitution> {
    (image(true), image(true), q_image(), image(true))
        .prop_map(|(x, y, q, z)| Substitution::new().x(x).y(y).q(q).z(2, z))
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn word() -> impl Strategy<Value = BlockWord> {
    "[SD]{0,12}".prop_map(|s| s.parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn addition_is_associative_and_commutative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &MultiPoly::zero(), a.clone());
        prop_assert!((&a + &(&MultiPoly::zero() - &a)).is_zero());
    }

    #[test]
    fn multiplication_is_associative_commutative_distributive(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert!((&a * &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in poly(), b in poly(), s in substitution()) {
        let sa = a.substitute(&s);
        let sb = b.substitute(&s);
        if let (Ok(sa), Ok(sb)) = (sa, sb) {
            prop_assert_eq!((&a * &b).substitute(&s).unwrap(), &sa * &sb);
            prop_assert_eq!((&a + &b).substitute(&s).unwrap(), &sa + &sb);
        }
    }

    #[test]
    fn q_inversion_is_an_involution(a in poly()) {
        let inv = Substitution::invert_q();
        prop_assert_eq!(a.substitute(&inv).unwrap().substitute(&inv).unwrap(), a);
    }

    #[test]
    fn text_and_json_round_trip(a in poly()) {
        let text = a.canonical_text();
        prop_assert_eq!(text.parse::<MultiPoly>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiPoly>(&json).unwrap(), a);
    }

    #[test]
    fn inversions_of_reversal_complement(p in permutation(10)) {
        let n = p.len();
        prop_assert_eq!(p.inv() + p.reversal().inv(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(p.reversal().reversal(), p);
    }

    #[test]
    fn cycles_cover_and_rebuild(p in permutation(12)) {
        let d = p.cycle_decomposition();
        let covered: usize = d.length_counts().iter().map(|(len, c)| len * c).sum();
        prop_assert_eq!(covered, p.len());
        prop_assert_eq!(d.to_permutation(), p);
    }

    #[test]
    fn interleave_inverts(w in word()) {
        prop_assert_eq!(w.interleave().deinterleave(), w.clone());
        prop_assert_eq!(w.interleave().word_length(), w.word_length());
    }

    #[test]
    fn permutation_text_round_trip(p in permutation(14)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }
}
