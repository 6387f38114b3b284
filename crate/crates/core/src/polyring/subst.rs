use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};

/// Coefficient, `[x, y, q]` exponents and `z` exponents before validation.
type RawTerm = (BigInt, [i64; 3], Vec<(u32, i64)>);

/// The image of one variable under a substitution: a single signed monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub coeff: BigInt,
    pub mono: Monomial,
}

impl Image {
    pub fn new(coeff: impl Into<BigInt>, mono: Monomial) -> Self {
        Image { coeff: coeff.into(), mono }
    }

    pub fn one() -> Self {
        Image::new(1, Monomial::one())
    }

    /// Accepts a polynomial only if it is a single term.
    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        if p.num_terms() != 1 {
            return Err(Error::ImageNotMonomial(p.num_terms()));
        }
        let (m, c) = p.terms().next().expect("one term");
        Ok(Image::new(c.clone(), m.clone()))
    }

    /// `(c * m)^e`; negative `e` needs an invertible image (`±q^k`).
    fn pow(&self, e: i64) -> Result<RawTerm> {
        if e < 0 && !(self.mono.is_q_power() && self.coeff.abs().is_one()) {
            return Err(Error::NonInvertibleImage);
        }
        let coeff = if e >= 0 {
            num_traits::pow(self.coeff.clone(), e as usize)
        } else if self.coeff.is_negative() && e % 2 != 0 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let m = &self.mono;
        let exps = [m.x_exp() as i64 * e, m.y_exp() as i64 * e, m.q_exp() as i64 * e];
        let z = m.z_exps().iter().map(|&(i, f)| (i, f as i64 * e)).collect();
        Ok((coeff, exps, z))
    }
}

impl From<Monomial> for Image {
    fn from(m: Monomial) -> Self {
        Image::new(1, m)
    }
}

/// A ring homomorphism given by the images of the generators. Variables that
/// are not mapped stay fixed.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    x: Option<Image>,
    y: Option<Image>,
    q: Option<Image>,
    z: BTreeMap<u32, Image>,
    z_default: Option<Image>,
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn x(mut self, img: impl Into<Image>) -> Self {
        self.x = Some(img.into());
        self
    }

    pub fn y(mut self, img: impl Into<Image>) -> Self {
        self.y = Some(img.into());
        self
    }

    pub fn q(mut self, img: impl Into<Image>) -> Self {
        self.q = Some(img.into());
        self
    }

    pub fn z(mut self, index: u32, img: impl Into<Image>) -> Self {
        self.z.insert(index, img.into());
        self
    }

    /// Image for every z-index without an explicit entry.
    pub fn all_z(mut self, img: impl Into<Image>) -> Self {
        self.z_default = Some(img.into());
        self
    }

    /// `q -> q^{-1}`.
    pub fn invert_q() -> Self {
        Self::new().q(Monomial::q_pow(-1))
    }

    /// `x -> x q^a`, `y -> y q^b`.
    pub fn shift_xy(a: i32, b: i32) -> Self {
        Self::new()
            .x(Monomial::new(1, 0, a))
            .y(Monomial::new(0, 1, b))
    }

    fn z_image(&self, index: u32) -> Option<&Image> {
        self.z.get(&index).or(self.z_default.as_ref())
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in p.terms() {
            let mut coeff = c.clone();
            let mut exps = [0i64; 3];
            let mut z: BTreeMap<u32, i64> = BTreeMap::new();
            let mut fold = |img: Option<&Image>, fixed: Monomial, e: i64| -> Result<()> {
                if e == 0 {
                    return Ok(());
                }
                let owned;
                let img = match img {
                    Some(i) => i,
                    None => {
                        owned = Image::from(fixed);
                        &owned
                    }
                };
                let (k, ex, zs) = img.pow(e)?;
                coeff *= k;
                for (acc, v) in exps.iter_mut().zip(ex) {
                    *acc += v;
                }
                for (i, f) in zs {
                    *z.entry(i).or_default() += f;
                }
                Ok(())
            };
            fold(self.x.as_ref(), Monomial::x_pow(1), m.x_exp() as i64)?;
            fold(self.y.as_ref(), Monomial::y_pow(1), m.y_exp() as i64)?;
            fold(self.q.as_ref(), Monomial::q_pow(1), m.q_exp() as i64)?;
            for &(i, f) in m.z_exps() {
                fold(self.z_image(i), Monomial::z_pow(i, 1), f as i64)?;
            }
            let nonneg = |v: i64, name: &'static str| -> Result<u32> {
                u32::try_from(v).map_err(|_| Error::NegativeExponent(name))
            };
            let mut zs = Vec::with_capacity(z.len());
            for (i, f) in z {
                zs.push((i, nonneg(f, "z")?));
            }
            let mono = Monomial::from_parts(
                nonneg(exps[0], "x")?,
                nonneg(exps[1], "y")?,
                i32::try_from(exps[2]).map_err(|_| Error::NegativeExponent("q"))?,
                zs,
            );
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl MultiPoly {
    pub fn substitute(&self, s: &Substitution) -> Result<MultiPoly> {
        s.apply(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn invert_q() {
        let r = p("q^2 + q").substitute(&Substitution::invert_q()).unwrap();
        assert_eq!(r, p("q^-1 + q^-2"));
    }

    #[test]
    fn shift_instance() {
        let base = p("x^2*q + y");
        let r = base.substitute(&Substitution::shift_xy(1, 2)).unwrap();
        assert_eq!(r, p("x^2*q^3 + y*q^2"));
        assert_eq!(r, base.shift(&Monomial::q_pow(2)));
    }

    #[test]
    fn identity_map() {
        let a = p("3*x^2*y*q^-4*z2 - 7*z5^3 + 1");
        assert_eq!(a.substitute(&Substitution::new()).unwrap(), a);
    }

    #[test]
    fn rejects_sums() {
        assert_eq!(Image::from_poly(&p("x + q")), Err(Error::ImageNotMonomial(2)));
        assert_eq!(Image::from_poly(&MultiPoly::zero()), Err(Error::ImageNotMonomial(0)));
        assert!(Image::from_poly(&p("-2*x*q^3")).is_ok());
    }

    #[test]
    fn non_invertible_q_image() {
        let a = p("q^-1");
        let s = Substitution::new().q(Monomial::x_pow(1));
        assert_eq!(a.substitute(&s), Err(Error::NonInvertibleImage));
        let s = Substitution::new().q(Image::new(2, Monomial::q_pow(1)));
        assert_eq!(a.substitute(&s), Err(Error::NonInvertibleImage));
        // -q is a unit
        let s = Substitution::new().q(Image::new(-1, Monomial::q_pow(1)));
        assert_eq!(p("q^-3").substitute(&s).unwrap(), p("-q^-3"));
    }

    #[test]
    fn negative_x_exponent_is_rejected() {
        let s = Substitution::new().q(Monomial::new(1, 0, 1));
        assert!(p("x").substitute(&s).is_ok());
        let s = Substitution::new().x(Monomial::q_pow(-1)).q(Monomial::x_pow(1));
        assert_eq!(p("x*q^-1").substitute(&s), Err(Error::NonInvertibleImage));
    }

    #[test]
    fn z_to_q() {
        let a = p("x^2*z2 + y*z1*z3^2");
        let r = a.substitute(&Substitution::new().all_z(Monomial::q_pow(1))).unwrap();
        assert_eq!(r, p("x^2*q + y*q^3"));
        let r = a
            .substitute(&Substitution::new().z(2, Image::one()).all_z(Monomial::q_pow(1)))
            .unwrap();
        assert_eq!(r, p("y*q^3 + x^2"));
    }

    #[test]
    fn q_to_one_and_y_over_q() {
        // F(x, y/q, 1)
        let s = Substitution::new().y(Monomial::new(0, 1, -1)).q(Image::one());
        let r = p("x^2*q + y").substitute(&s).unwrap();
        assert_eq!(r, p("x^2 + y*q^-1"));
    }
}
