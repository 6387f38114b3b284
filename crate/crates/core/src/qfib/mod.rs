//! q-Fibonacci polynomials: exact statistic distributions over the
//! Fibonacci-counted classes (the oracle), the recursions claimed for them,
//! and a catalog of identities checked against the oracle.
//!
//! For the West families `W1..W3` the size argument `n` is the permutation
//! size; the corresponding polynomial index is `2n - 2`.

mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::blockwords::{enumerate_words, BlockWord};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_layered_matchings, enumerate_partitions_avoiding, parse_partition_list, SetPartition, PARTITION_FILTER_BOUND};
use crate::permstats::{perm_from_word, west_class_bounded, Orientation, Permutation, WestClass};
use crate::polyring::{Monomial, MultiPoly, Substitution};

pub use identities::{
    identity_catalog, Arity, Counterexample, IdentityInfo, IdentityReport, Instance, ReadingSummary, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// inv over reverse layered matchings
    I,
    /// inv over layered matchings
    IPrime,
    /// maj over reverse layered matchings
    M,
    /// maj over layered matchings
    MPrime,
    /// rb over layered matching partitions
    RB,
    /// Cigler's Morse-sequence weight
    C,
    /// number of cycles of reverse layered matchings
    D,
    /// cycle type of reverse layered matchings, marked by `z_i`
    DPrime,
    W1,
    W2,
    W3,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::I,
        Family::IPrime,
        Family::M,
        Family::MPrime,
        Family::RB,
        Family::C,
        Family::D,
        Family::DPrime,
        Family::W1,
        Family::W2,
        Family::W3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::I => "I",
            Family::IPrime => "I'",
            Family::M => "M",
            Family::MPrime => "M'",
            Family::RB => "RB",
            Family::C => "C",
            Family::D => "D",
            Family::DPrime => "D'",
            Family::W1 => "W1",
            Family::W2 => "W2",
            Family::W3 => "W3",
        }
    }

    pub fn west_class(self) -> Option<WestClass> {
        match self {
            Family::W1 => Some(WestClass::W1),
            Family::W2 => Some(WestClass::W2),
            Family::W3 => Some(WestClass::W3),
            _ => None,
        }
    }

    pub fn has_recursion(self) -> bool {
        self != Family::RB
    }

    /// Number of class members at size `n`: `F_n`, or `F_{2n-2}` for West
    /// families.
    pub fn class_size(self, n: usize) -> u128 {
        match self.west_class() {
            Some(_) if n == 0 => 1,
            Some(_) => fibonacci(2 * n - 2),
            None => fibonacci(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace(['′', '’'], "'").to_ascii_uppercase();
        let t = t.strip_suffix("PRIME").map(|b| format!("{b}'")).unwrap_or(t);
        Family::ALL
            .into_iter()
            .find(|f| f.name() == t)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// `F_n` with `F_0 = F_1 = 1`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn binom2(n: usize) -> i32 {
    (n * n.saturating_sub(1) / 2) as i32
}

fn xyq(x: u32, y: u32, q: i64) -> Monomial {
    Monomial::new(x, y, q as i32)
}

fn term(c: i64, x: u32, y: u32, q: i64) -> MultiPoly {
    MultiPoly::term(c, xyq(x, y, q))
}

fn mono_poly(counts: BTreeMap<Monomial, u64>) -> MultiPoly {
    MultiPoly::from_terms(counts.into_iter().map(|(m, c)| (m, BigInt::from(c))))
}

fn xy_of(w: &BlockWord) -> (u32, u32) {
    (w.num_singletons() as u32, w.num_doubletons() as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Recursion,
    ClosedForm,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Recursion => "recursion",
            Method::ClosedForm => "closed-form",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "recursion" | "recursive" => Ok(Method::Recursion),
            "closed-form" | "closed" => Ok(Method::ClosedForm),
            _ => Err(Error::UnknownFamily(format!("method {s}"))),
        }
    }
}

/// Size limits for the brute-force oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Classes generated from block words.
    pub structural: usize,
    /// West classes, by gap insertion.
    pub west: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { structural: 26, west: crate::permstats::WEST_BOUND }
    }
}

/// Computes and memoizes q-Fibonacci polynomials. Safe to share across
/// threads; a value computed twice is the same value, so racing inserts are
/// harmless.
#[derive(Debug, Default)]
pub struct Engine {
    bounds: Bounds,
    memo: RwLock<HashMap<(Family, Method, usize), MultiPoly>>,
}

impl Engine {
    pub fn new(bounds: Bounds) -> Self {
        Engine { bounds, memo: RwLock::default() }
    }

    /// Process-wide engine with default bounds.
    pub fn shared() -> &'static Engine {
        static SHARED: OnceLock<Engine> = OnceLock::new();
        SHARED.get_or_init(Engine::default)
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    fn cached(&self, key: (Family, Method, usize), f: impl FnOnce() -> Result<MultiPoly>) -> Result<MultiPoly> {
        if let Some(p) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(p.clone());
        }
        let p = f()?;
        self.memo.write().expect("memo lock").entry(key).or_insert_with(|| p.clone());
        Ok(p)
    }

    pub fn compute(&self, family: Family, n: usize, method: Method) -> Result<MultiPoly> {
        match method {
            Method::Oracle => self.oracle(family, n),
            Method::Recursion => self.recursive(family, n),
            Method::ClosedForm if family == Family::I => Ok(closed_form_i(n)),
            Method::ClosedForm => Err(Error::NoRecursion("closed form exists only for I")),
        }
    }

    fn check_bound(&self, family: Family, n: usize) -> Result<()> {
        let (bound, what, hint) = match family.west_class() {
            Some(_) => (self.bounds.west, "West-class oracle", "West classes grow like F_{2n-2}; lower n"),
            None => (
                self.bounds.structural,
                "structural oracle",
                "the oracle enumerates all F_n class members; lower n or use --method recursion",
            ),
        };
        if n > bound {
            return Err(Error::BoundExceeded { what, n, bound, hint });
        }
        if family.west_class().is_some() && n == 0 {
            return Err(Error::OutOfDomain { what: "West families (sizes start at 1)", n });
        }
        Ok(())
    }

    /// The distribution polynomial computed from the statistic itself on
    /// every class member.
    pub fn oracle(&self, family: Family, n: usize) -> Result<MultiPoly> {
        self.check_bound(family, n)?;
        self.cached((family, Method::Oracle, n), || Ok(self.oracle_uncached(family, n)))
    }

    fn oracle_uncached(&self, family: Family, n: usize) -> MultiPoly {
        if let Some(class) = family.west_class() {
            let members = west_class_bounded(n, class, self.bounds.west).expect("bound checked");
            let mut counts = BTreeMap::new();
            for sigma in members {
                *counts.entry(Monomial::q_pow(sigma.inv() as i32)).or_insert(0u64) += 1;
            }
            return mono_poly(counts);
        }
        if family == Family::RB {
            let partitions = if n <= PARTITION_FILTER_BOUND {
                let pats = parse_partition_list("13/2,123").expect("literal patterns");
                enumerate_partitions_avoiding(n, &pats).expect("within filter bound")
            } else {
                enumerate_layered_matchings(n)
            };
            return rb_distribution(&partitions);
        }
        let mut counts: BTreeMap<Monomial, u64> = BTreeMap::new();
        for w in enumerate_words(n) {
            let (s, d) = xy_of(&w);
            let m = match family {
                Family::C => xyq(s, d, w.morse_weight() as i64),
                _ => {
                    let orientation = match family {
                        Family::IPrime | Family::MPrime => Orientation::Layered,
                        _ => Orientation::ReverseLayered,
                    };
                    let sigma = perm_from_word(&w, orientation);
                    statistic_monomial(family, s, d, &sigma)
                }
            };
            *counts.entry(m).or_insert(0) += 1;
        }
        mono_poly(counts)
    }

    /// The polynomial produced by the claimed recursion, exactly as stated.
    /// `I'` and `M'` come from `I` and `M` through the reversal and
    /// complement transforms.
    pub fn recursive(&self, family: Family, n: usize) -> Result<MultiPoly> {
        if !family.has_recursion() {
            return Err(Error::NoRecursion("RB (it shares the recursion of M)"));
        }
        if family.west_class().is_some() && n == 0 {
            return Err(Error::OutOfDomain { what: "West families (sizes start at 1)", n });
        }
        self.cached((family, Method::Recursion, n), || self.recursive_uncached(family, n))
    }

    fn rec(&self, family: Family, n: isize) -> Result<MultiPoly> {
        if n < 0 {
            Ok(MultiPoly::zero())
        } else {
            self.recursive(family, n as usize)
        }
    }

    /// West recursion value at polynomial index `2k - 2`, where `k` is a
    /// size; sizes below 1 are zero.
    fn west_rec(&self, family: Family, size: isize) -> Result<MultiPoly> {
        if size < 1 {
            Ok(MultiPoly::zero())
        } else {
            self.recursive(family, size as usize)
        }
    }

    fn recursive_uncached(&self, family: Family, n: usize) -> Result<MultiPoly> {
        let ni = n as i64;
        let x = || MultiPoly::x();
        Ok(match family {
            Family::I | Family::M | Family::C => match n {
                0 => MultiPoly::one(),
                1 => x(),
                _ => {
                    let (a, b) = match family {
                        Family::I => (term(1, 1, 0, ni - 1), term(1, 0, 1, 2 * (ni - 2))),
                        Family::M => (term(1, 1, 0, ni - 1), term(1, 0, 1, ni - 2)),
                        _ => (term(1, 1, 0, 0), term(1, 0, 1, ni - 1)),
                    };
                    let p1 = self.recursive(family, n - 1)?;
                    let p2 = self.recursive(family, n - 2)?;
                    &(&a * &p1) + &(&b * &p2)
                }
            },
            Family::IPrime | Family::MPrime => {
                let base = if family == Family::IPrime { Family::I } else { Family::M };
                complement_transform(&self.recursive(base, n)?, n)?
            }
            Family::D | Family::DPrime => match n {
                0 => MultiPoly::one(),
                1 if family == Family::D => term(1, 1, 0, 1),
                1 => MultiPoly::monomial(Monomial::from_parts(1, 0, 0, [(1, 1)])),
                _ => {
                    let m = n as isize - 2;
                    let cyc = |len: u32| -> MultiPoly {
                        if family == Family::D {
                            MultiPoly::q()
                        } else {
                            MultiPoly::z(len)
                        }
                    };
                    let mut out = &(&term(1, 2, 0, 0) * &cyc(2)) * &self.rec(family, m)?;
                    let dd = if family == Family::D {
                        term(1, 0, 2, 2)
                    } else {
                        &term(1, 0, 2, 0) * &MultiPoly::z(2).pow(2)
                    };
                    let mid = &dd + &(&term(2, 2, 1, 0) * &cyc(4));
                    out += &mid * &self.rec(family, m - 2)?;
                    for k in 3..=(m.max(0) as usize / 2) {
                        let t = &term(2, 2, k as u32 - 1, 0) * &cyc(2 * k as u32);
                        out += &t * &self.rec(family, m - 2 * k as isize)?;
                    }
                    out
                }
            },
            Family::W1 => {
                // sizes n <-> index 2N with N = n - 1; the operative base is size 1
                if n == 1 {
                    return Ok(MultiPoly::one());
                }
                let big_n = ni - 1;
                let mut out = &term(1, 0, 0, big_n - 1) * &self.west_rec(family, big_n as isize)?;
                for k in 2..=big_n {
                    let e = (big_n - 1) * (k - 1) + k * (k - 1) / 2;
                    out += &term(1, 0, 0, e) * &self.west_rec(family, (big_n - k + 1) as isize)?;
                }
                out
            }
            Family::W2 | Family::W3 => {
                if n == 1 {
                    return Ok(MultiPoly::one());
                }
                let first = &term(1, 0, 0, ni - 1) + &MultiPoly::one();
                let mut out = &first * &self.west_rec(Family::W2, n as isize - 1)?;
                for k in 1..=(ni - 2) {
                    if family == Family::W2 {
                        // F_{2n-2k-4} is size n - k - 1
                        out += &term(1, 0, 0, k * (ni - k)) * &self.west_rec(family, (ni - k - 1) as isize)?;
                    } else {
                        // F_{2k-4} is size k - 1
                        let e = k * (ni - k) + (ni - k) * (ni - k - 1) / 2;
                        out += &term(1, 0, 0, e) * &self.west_rec(family, (k - 1) as isize)?;
                    }
                }
                out
            }
            Family::RB => unreachable!("no recursion"),
        })
    }
}

fn statistic_monomial(family: Family, s: u32, d: u32, sigma: &Permutation) -> Monomial {
    match family {
        Family::I | Family::IPrime => xyq(s, d, sigma.inv() as i64),
        Family::M | Family::MPrime => xyq(s, d, sigma.maj() as i64),
        Family::D => xyq(s, d, sigma.cycle_decomposition().count() as i64),
        Family::DPrime => {
            let counts = sigma.cycle_decomposition().length_counts();
            Monomial::from_parts(s, d, 0, counts.into_iter().map(|(len, c)| (len as u32, c as u32)))
        }
        _ => unreachable!("not a permutation statistic family"),
    }
}

fn rb_distribution(partitions: &[SetPartition]) -> MultiPoly {
    let mut counts = BTreeMap::new();
    for p in partitions {
        let m = xyq(p.num_singletons() as u32, p.num_doubletons() as u32, p.rb() as i64);
        *counts.entry(m).or_insert(0u64) += 1;
    }
    mono_poly(counts)
}

/// `q^{C(n,2)} P(x, y, 1/q)`: moves between a class and its reversal (for
/// inv) or its same-word partner (for maj). It is an involution.
pub fn complement_transform(p: &MultiPoly, n: usize) -> Result<MultiPoly> {
    Ok(p.substitute(&Substitution::invert_q())?.shift(&Monomial::q_pow(binom2(n))))
}

/// `sum over 2k <= n of C(n-k, k) x^{n-2k} y^k q^{C(n,2)-k}`.
pub fn closed_form_i(n: usize) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for k in 0..=n / 2 {
        let c = binomial(n - k, k);
        out.add_term(xyq((n - 2 * k) as u32, k as u32, binom2(n) as i64 - k as i64), c);
    }
    out
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1u8);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn qfib_oracle(family: Family, n: usize) -> Result<MultiPoly> {
    Engine::shared().oracle(family, n)
}

pub fn qfib_recursive(family: Family, n: usize) -> Result<MultiPoly> {
    Engine::shared().recursive(family, n)
}

/// Checks one identity over its index range against the oracle.
pub fn verify_identity(id: &str, max_n: Option<usize>, max_m: Option<usize>) -> Result<IdentityReport> {
    identities::verify(Engine::shared(), id, max_n, max_m)
}

/// Every catalog identity at its default range, in catalog order.
pub fn verify_all(max_n: Option<usize>) -> Result<Vec<IdentityReport>> {
    identities::verify_all(Engine::shared(), max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Point;
    use num_traits::ToPrimitive;

    fn poly(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(qfib_oracle(Family::I, 4).unwrap(), poly("x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4"));
        assert_eq!(qfib_oracle(Family::I, 0).unwrap(), MultiPoly::one());
        assert_eq!(qfib_oracle(Family::D, 3).unwrap(), poly("x^3*q^2 + 2*x*y*q"));
        assert_eq!(qfib_oracle(Family::M, 3).unwrap(), poly("x^3*q^3 + x*y*q^2 + x*y*q"));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(qfib_recursive(Family::I, 2).unwrap(), poly("x^2*q + y"));
        assert_eq!(qfib_recursive(Family::M, 3).unwrap(), poly("x^3*q^3 + x*y*q^2 + x*y*q"));
        assert_eq!(qfib_recursive(Family::C, 1).unwrap(), poly("x"));
        assert!(qfib_recursive(Family::RB, 3).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_i(4), poly("x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4"));
        assert_eq!(closed_form_i(0), MultiPoly::one());
        assert_eq!(closed_form_i(1), poly("x"));
    }

    #[test]
    fn counts_at_one() {
        for f in Family::ALL {
            let top = if f.west_class().is_some() { 7 } else { 10 };
            let start = if f.west_class().is_some() { 1 } else { 0 };
            for n in start..=top {
                let v = qfib_oracle(f, n).unwrap().evaluate(&Point::ones()).unwrap();
                assert_eq!(v.to_integer().to_u128().unwrap(), f.class_size(n), "{f} n={n}");
            }
        }
    }

    #[test]
    fn bounds_and_domains() {
        assert!(matches!(qfib_oracle(Family::I, 40), Err(Error::BoundExceeded { .. })));
        assert!(matches!(qfib_oracle(Family::W1, 13), Err(Error::BoundExceeded { .. })));
        assert!(matches!(qfib_oracle(Family::W1, 0), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("I′".parse::<Family>().unwrap(), Family::IPrime);
        assert_eq!("dprime".parse::<Family>().unwrap(), Family::DPrime);
        assert!("X".parse::<Family>().is_err());
    }

    #[test]
    fn fibonacci_convention() {
        assert_eq!((0..8).map(fibonacci).collect::<Vec<_>>(), vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }
}
