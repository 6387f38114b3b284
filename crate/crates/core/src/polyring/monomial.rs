use std::cmp::Ordering;
use std::fmt;

/// A power product `x^a y^b q^e z_{i1}^{f1} z_{i2}^{f2} ...`.
///
/// Only `q` may carry a negative exponent. The z-family is kept sparse, sorted
/// by index, with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    x: u32,
    y: u32,
    q: i32,
    z: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(x: u32, y: u32, q: i32) -> Self {
        Monomial { x, y, q, z: Vec::new() }
    }

    pub fn x_pow(a: u32) -> Self {
        Self::new(a, 0, 0)
    }

    pub fn y_pow(b: u32) -> Self {
        Self::new(0, b, 0)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::new(0, 0, e)
    }

    pub fn z_pow(index: u32, exp: u32) -> Self {
        let mut m = Self::one();
        m.set_z(index, exp);
        m
    }

    /// Builds a monomial from raw parts, normalizing the z list.
    pub fn from_parts(x: u32, y: u32, q: i32, z: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut m = Self::new(x, y, q);
        for (i, f) in z {
            let cur = m.z_exp(i);
            m.set_z(i, cur + f);
        }
        m
    }

    pub fn x_exp(&self) -> u32 {
        self.x
    }

    pub fn y_exp(&self) -> u32 {
        self.y
    }

    pub fn q_exp(&self) -> i32 {
        self.q
    }

    pub fn z_exps(&self) -> &[(u32, u32)] {
        &self.z
    }

    pub fn z_exp(&self, index: u32) -> u32 {
        match self.z.binary_search_by_key(&index, |&(i, _)| i) {
            Ok(pos) => self.z[pos].1,
            Err(_) => 0,
        }
    }

    fn set_z(&mut self, index: u32, exp: u32) {
        match self.z.binary_search_by_key(&index, |&(i, _)| i) {
            Ok(pos) if exp == 0 => {
                self.z.remove(pos);
            }
            Ok(pos) => self.z[pos].1 = exp,
            Err(_) if exp == 0 => {}
            Err(pos) => self.z.insert(pos, (index, exp)),
        }
    }

    pub fn is_one(&self) -> bool {
        self.x == 0 && self.y == 0 && self.q == 0 && self.z.is_empty()
    }

    /// True when the monomial is a pure power of `q` (a unit of the Laurent ring).
    pub fn is_q_power(&self) -> bool {
        self.x == 0 && self.y == 0 && self.z.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut z = Vec::with_capacity(self.z.len() + other.z.len());
        let (mut i, mut j) = (0, 0);
        while i < self.z.len() || j < other.z.len() {
            match (self.z.get(i), other.z.get(j)) {
                (Some(&(a, fa)), Some(&(b, fb))) if a == b => {
                    z.push((a, fa + fb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, fa)), Some(&(b, _))) if a < b => {
                    z.push((a, fa));
                    i += 1;
                }
                (Some(_), Some(&(b, fb))) => {
                    z.push((b, fb));
                    j += 1;
                }
                (Some(&(a, fa)), None) => {
                    z.push((a, fa));
                    i += 1;
                }
                (None, Some(&(b, fb))) => {
                    z.push((b, fb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial {
            x: self.x + other.x,
            y: self.y + other.y,
            q: self.q + other.q,
            z,
        }
    }
}

/// Canonical term order: q-exponent descending, then x, y, and the z list,
/// each descending. `Less` means "printed first".
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .q
            .cmp(&self.q)
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| other.y.cmp(&self.y))
            .then_with(|| other.z.cmp(&self.z))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders the power product alone (`x^2*q`, `z3^2`); the unit monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: &str, e: i64| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        };
        factor(f, "x", self.x as i64)?;
        factor(f, "y", self.y as i64)?;
        factor(f, "q", self.q as i64)?;
        for &(i, e) in &self.z {
            factor(f, &format!("z{i}"), e as i64)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_family_stays_sparse() {
        let m = Monomial::from_parts(0, 0, 0, [(3, 1), (1, 2), (3, 1)]);
        assert_eq!(m.z_exps(), &[(1, 2), (3, 2)]);
        assert_eq!(m.z_exp(2), 0);
        let p = m.mul(&Monomial::z_pow(2, 1));
        assert_eq!(p.z_exps(), &[(1, 2), (2, 1), (3, 2)]);
    }

    #[test]
    fn order_puts_high_q_first() {
        let a = Monomial::new(0, 0, 0);
        let b = Monomial::new(0, 0, -2);
        let c = Monomial::new(2, 0, 1);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(2, 0, 1).to_string(), "x^2*q");
        assert_eq!(Monomial::q_pow(-2).to_string(), "q^-2");
        assert_eq!(Monomial::from_parts(1, 1, 0, [(4, 1), (2, 3)]).to_string(), "x*y*z2^3*z4");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
