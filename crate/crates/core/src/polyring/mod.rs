//! Exact sparse polynomials in `x`, `y`, `q` (Laurent in `q`) and an indexed
//! family `z_1, z_2, ...`, with arbitrary-precision integer coefficients.
//!
//! Every distribution computed by this crate is a [`MultiPoly`]. Values are
//! kept in canonical form: no zero coefficients and one entry per monomial,
//! so structural equality is polynomial equality.

mod eval;
mod monomial;
mod subst;
mod text;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use eval::Point;
pub use monomial::Monomial;
pub use subst::{Image, Substitution};
pub use text::TermJson;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn x() -> Self {
        Self::monomial(Monomial::x_pow(1))
    }

    pub fn y() -> Self {
        Self::monomial(Monomial::y_pow(1))
    }

    pub fn q() -> Self {
        Self::monomial(Monomial::q_pow(1))
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Monomial::q_pow(e))
    }

    pub fn z(index: u32) -> Self {
        Self::monomial(Monomial::z_pow(index, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies every term by `c * m`.
    pub fn scale(&self, c: &BigInt, m: &Monomial) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), d * c))
                .collect(),
        }
    }

    /// Multiplies by a monomial with unit coefficient.
    pub fn shift(&self, m: &Monomial) -> MultiPoly {
        self.scale(&BigInt::one(), m)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `x = y = q = z_i = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Smallest and largest q-exponent, `None` for the zero polynomial.
    pub fn q_range(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.q_exp());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn has_negative_q(&self) -> bool {
        self.terms.keys().any(|m| m.q_exp() < 0)
    }

    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

impl From<Monomial> for MultiPoly {
    fn from(m: Monomial) -> Self {
        MultiPoly::monomial(m)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, p| acc + p)
    }
}
