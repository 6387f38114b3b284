use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MultiPoly;
use crate::error::{Error, Result};

/// A numeric point: integer x, y, z_i and a rational q.
#[derive(Clone, Debug)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
    pub q: BigRational,
    pub z: BTreeMap<u32, BigInt>,
    /// Value of every z_i not listed in `z`.
    pub z_default: BigInt,
}

impl Point {
    pub fn ones() -> Self {
        Point {
            x: BigInt::one(),
            y: BigInt::one(),
            q: BigRational::one(),
            z: BTreeMap::new(),
            z_default: BigInt::one(),
        }
    }

    pub fn new(x: i64, y: i64, q: BigRational) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
            q,
            ..Point::ones()
        }
    }
}

impl MultiPoly {
    pub fn evaluate(&self, at: &Point) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in self.terms() {
            let mut v = BigRational::from_integer(c.clone());
            v *= BigRational::from_integer(num_traits::pow(at.x.clone(), m.x_exp() as usize));
            v *= BigRational::from_integer(num_traits::pow(at.y.clone(), m.y_exp() as usize));
            let e = m.q_exp();
            if e < 0 && at.q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            v *= num_traits::Pow::pow(&at.q, e);
            for &(i, f) in m.z_exps() {
                let zi = at.z.get(&i).unwrap_or(&at.z_default);
                v *= BigRational::from_integer(num_traits::pow(zi.clone(), f as usize));
            }
            acc += v;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn coefficient_sum_at_ones() {
        let p: MultiPoly = "x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4".parse().unwrap();
        assert_eq!(p.evaluate(&Point::ones()).unwrap(), r(5, 1));
    }

    #[test]
    fn laurent_at_two() {
        let p: MultiPoly = "q^-1 + q".parse().unwrap();
        assert_eq!(p.evaluate(&Point::new(1, 1, r(2, 1))).unwrap(), r(5, 2));
    }

    #[test]
    fn zero_everywhere() {
        assert_eq!(MultiPoly::zero().evaluate(&Point::new(7, -3, r(5, 9))).unwrap(), r(0, 1));
    }

    #[test]
    fn q_zero() {
        let p: MultiPoly = "q^-1 + 1".parse().unwrap();
        assert_eq!(p.evaluate(&Point::new(1, 1, r(0, 1))), Err(Error::DivisionByZero));
        let p: MultiPoly = "q^2 + 1".parse().unwrap();
        assert_eq!(p.evaluate(&Point::new(1, 1, r(0, 1))).unwrap(), r(1, 1));
    }

    #[test]
    fn z_values() {
        let p: MultiPoly = "z1^2*z3 + x".parse().unwrap();
        let mut at = Point::new(2, 1, r(1, 1));
        at.z.insert(1, 3.into());
        at.z_default = 5.into();
        assert_eq!(p.evaluate(&at).unwrap(), r(9 * 5 + 2, 1));
    }
}
