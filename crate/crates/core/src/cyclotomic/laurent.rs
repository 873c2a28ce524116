use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// A Laurent polynomial in v with exact coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Ring> Laurent<T> {
    pub fn monomial(c: T, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Laurent { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }

    /// The variable v.
    pub fn v() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn v_pow(e: i64) -> Self {
        Self::monomial(T::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let mut out = Laurent { coeffs: BTreeMap::new() };
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(e, s);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    pub fn coeff(&self, e: i64) -> T {
        self.coeffs.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// The bar involution v ↦ v^{-1}.
    pub fn bar(&self) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplication by v^k.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution v ↦ v^k for k ≠ 0.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution v -> v^0 is not injective on exponents");
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (*e, c.clone() * s.clone())))
    }

    /// Value at v = 1.
    pub fn eval_one(&self) -> T {
        self.coeffs.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Exact quotient `self / d`; fails unless the remainder is zero.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (dmin, dmax) = match (d.min_exp(), d.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InexactDivision),
        };
        let lead = d.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = Laurent { coeffs: BTreeMap::new() };
        let floor = match self.min_exp() {
            Some(m) => m - dmin,
            None => return Ok(quot),
        };
        while let Some(top) = rem.max_exp() {
            let e = top - dmax;
            if e < floor {
                return Err(Error::InexactDivision);
            }
            let c = rem.coeff(top);
            if !(c.clone() % lead.clone()).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = c / lead.clone();
            rem = &rem - &(d.scale(&c).shift(e));
            quot.add_term(e, c);
        }
        Ok(quot)
    }
}

impl<T: Ring> Zero for Laurent<T> {
    fn zero() -> Self {
        Laurent { coeffs: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Laurent<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Default for Laurent<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> AddAssign<&Laurent<T>> for Laurent<T> {
    fn add_assign(&mut self, rhs: &Laurent<T>) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl<T: Ring> SubAssign<&Laurent<T>> for Laurent<T> {
    fn sub_assign(&mut self, rhs: &Laurent<T>) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<T: Ring> Add<&Laurent<T>> for &Laurent<T> {
    type Output = Laurent<T>;

    fn add(self, rhs: &Laurent<T>) -> Laurent<T> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<T: Ring> Sub<&Laurent<T>> for &Laurent<T> {
    type Output = Laurent<T>;

    fn sub(self, rhs: &Laurent<T>) -> Laurent<T> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<T: Ring> Mul<&Laurent<T>> for &Laurent<T> {
    type Output = Laurent<T>;

    fn mul(self, rhs: &Laurent<T>) -> Laurent<T> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Ring> Neg for &Laurent<T> {
    type Output = Laurent<T>;

    fn neg(self) -> Laurent<T> {
        Laurent { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr<Laurent<T>> for Laurent<T> {
            type Output = Laurent<T>;

            fn $m(self, rhs: Laurent<T>) -> Laurent<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Ring> Neg for Laurent<T> {
    type Output = Laurent<T>;

    fn neg(self) -> Laurent<T> {
        -&self
    }
}

impl<T: Ring> fmt::Display for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let zero = T::zero();
        let one = T::one();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = *c < zero;
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let var = match *e {
                0 => String::new(),
                1 => "v".to_string(),
                e => format!("v^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == one {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        Ok(())
    }
}
