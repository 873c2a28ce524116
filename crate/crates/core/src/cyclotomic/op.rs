use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::{Laurent, Ring};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// An element of O_p = Z[q^{±1}]/(Ψ_p(q²)) in the Z-basis 1, q, …, q^{2p−3}.
///
/// The representation is canonical, so equality is coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    p: Prime,
    coeffs: Vec<T>,
}

impl<T: Ring> Cyclotomic<T> {
    pub fn zero(p: Prime) -> Self {
        Cyclotomic { p, coeffs: vec![T::zero(); Self::rank(p)] }
    }

    pub fn one(p: Prime) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: Prime, n: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = T::from_i64(n);
        out
    }

    /// q^k for any integer k.
    pub fn q_pow(p: Prime, k: i64) -> Self {
        Self::from_exponents(p, [(k, T::one())])
    }

    /// Rank of O_p over Z.
    pub fn rank(p: Prime) -> usize {
        2 * (p.get() as usize - 1)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Canonical form of Σ c·q^e: exponents are first taken modulo 2p, then
    /// q^{2p−2} and q^{2p−1} are rewritten through Ψ_p(q²) = 0.
    pub fn from_exponents<I: IntoIterator<Item = (i64, T)>>(p: Prime, terms: I) -> Self {
        let two_p = 2 * p.get() as i64;
        let mut raw = vec![T::zero(); two_p as usize];
        for (e, c) in terms {
            let slot = e.rem_euclid(two_p) as usize;
            raw[slot] = raw[slot].clone() + c;
        }
        let rank = Self::rank(p);
        let mut coeffs: Vec<T> = raw[..rank].to_vec();
        for (top, parity) in [(rank, 0usize), (rank + 1, 1usize)] {
            let c = raw[top].clone();
            if c.is_zero() {
                continue;
            }
            for slot in (parity..rank).step_by(2) {
                coeffs[slot] = coeffs[slot].clone() - c.clone();
            }
        }
        Cyclotomic { p, coeffs }
    }

    /// Re-reduces an already canonical element; the result is unchanged.
    pub fn reduce(&self) -> Self {
        Self::from_exponents(
            self.p,
            self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())),
        )
    }

    pub fn from_laurent(f: &Laurent<T>, p: Prime) -> Self {
        Self::from_exponents(p, f.terms().map(|(e, c)| (e, c.clone())))
    }

    pub fn to_laurent(&self) -> Laurent<T> {
        Laurent::from_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    pub fn scale(&self, s: &T) -> Self {
        Cyclotomic { p: self.p, coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        check_prime(self.p, rhs.p)?;
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    terms.push(((i + j) as i64, a.clone() * b.clone()));
                }
            }
        }
        Ok(Self::from_exponents(self.p, terms))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        check_prime(self.p, rhs.p)?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Cyclotomic { p: self.p, coeffs })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&-rhs)
    }
}

fn check_prime(a: Prime, b: Prime) -> Result<()> {
    if a != b {
        return Err(Error::PrimeMismatch { left: a.get(), right: b.get() });
    }
    Ok(())
}

impl<T: Ring> Add<&Cyclotomic<T>> for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn add(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
        self.try_add(rhs).expect("O_p addition across different primes")
    }
}

impl<T: Ring> Sub<&Cyclotomic<T>> for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn sub(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
        self.try_sub(rhs).expect("O_p subtraction across different primes")
    }
}

impl<T: Ring> Mul<&Cyclotomic<T>> for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn mul(self, rhs: &Cyclotomic<T>) -> Cyclotomic<T> {
        self.try_mul(rhs).expect("O_p multiplication across different primes")
    }
}

impl<T: Ring> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic { p: self.p, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Ring> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let zero = T::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < zero;
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}q")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The two further base changes out of O_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarrhoTarget {
    /// Z[v]/(Ψ_{2p}(v)), in which q^p = −1.
    TwoP,
    /// Z[v]/(Ψ_p(v)), in which q^p = 1.
    P,
}

/// An element of Z[v]/(m(v)) for a monic modulus m, in the basis
/// 1, v, …, v^{deg m − 1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicQuotient<T> {
    pub modulus: Vec<i64>,
    pub coeffs: Vec<T>,
}

impl<T: Ring> CyclotomicQuotient<T> {
    /// Reduces a polynomial (coefficients in increasing degree) modulo a
    /// monic modulus.
    pub fn reduce(modulus: Vec<i64>, poly: &[T]) -> Self {
        let deg = modulus.len() - 1;
        let mut work: Vec<T> = poly.to_vec();
        if work.len() < deg {
            work.resize(deg, T::zero());
        }
        for top in (deg..work.len()).rev() {
            let c = work[top].clone();
            if c.is_zero() {
                continue;
            }
            for (i, m) in modulus.iter().enumerate().take(deg) {
                let slot = top - deg + i;
                work[slot] = work[slot].clone() - c.clone() * T::from_i64(*m);
            }
            work[top] = T::zero();
        }
        work.truncate(deg);
        CyclotomicQuotient { modulus, coeffs: work }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }
}

fn cyclotomic_modulus(p: Prime, target: VarrhoTarget) -> Result<Vec<i64>> {
    let p = p.get() as usize;
    match (target, p) {
        (VarrhoTarget::TwoP, 2) => Ok(vec![1, 0, 1]),
        (VarrhoTarget::TwoP, _) => Ok((0..p).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect()),
        (VarrhoTarget::P, 2) => Err(Error::NotAHomomorphism(
            "Ψ_2(v) does not divide Ψ_2(v²) = v² + 1, so q ↦ v is not defined on O_2".into(),
        )),
        (VarrhoTarget::P, _) => Ok(vec![1; p]),
    }
}

/// Image of x under the quotient O_p → Z[v]/(Φ) by one cyclotomic factor Φ
/// of Ψ_p(v²), sending q ↦ v.
pub fn varrho<T: Ring>(x: &Cyclotomic<T>, target: VarrhoTarget) -> Result<CyclotomicQuotient<T>> {
    let modulus = cyclotomic_modulus(x.prime(), target)?;
    Ok(CyclotomicQuotient::reduce(modulus, x.coeffs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cyclotomic<i64>;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn q_is_invertible() {
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            for k in -20..20 {
                assert_eq!(&C::q_pow(p, k) * &C::q_pow(p, -k), C::one(p));
            }
            assert_eq!(C::q_pow(p, 2 * p.get() as i64), C::one(p));
        }
    }

    #[test]
    fn psi_vanishes() {
        for p in [2, 3, 5] {
            let p = pr(p);
            let psi = C::from_exponents(p, (0..p.get() as i64).map(|i| (2 * i, 1)));
            assert!(psi.is_zero());
        }
    }

    #[test]
    fn varrho_examples() {
        for p in [2, 3, 5, 7] {
            let p = pr(p);
            let qp = C::q_pow(p, p.get() as i64);
            let minus_one = CyclotomicQuotient::reduce(cyclotomic_modulus(p, VarrhoTarget::TwoP).unwrap(), &[-1i64]);
            assert_eq!(varrho(&qp, VarrhoTarget::TwoP).unwrap(), minus_one);
            if p.get() > 2 {
                assert!(varrho(&qp, VarrhoTarget::P).unwrap().is_one());
                assert!(varrho(&C::one(p), VarrhoTarget::P).unwrap().is_one());
            }
        }
        assert!(varrho(&C::one(pr(2)), VarrhoTarget::P).is_err());
    }

    #[test]
    fn varrho_is_multiplicative() {
        for p in [3u32, 5] {
            let p = pr(p);
            for t in [VarrhoTarget::TwoP, VarrhoTarget::P] {
                for i in 0..(2 * p.get() as i64) {
                    for j in 0..(2 * p.get() as i64) {
                        let a = C::from_exponents(p, [(i, 2), (1, -1)]);
                        let b = C::from_exponents(p, [(j, 1), (3, 3)]);
                        let lhs = varrho(&(&a * &b), t).unwrap();
                        let (ra, rb) = (varrho(&a, t).unwrap(), varrho(&b, t).unwrap());
                        let prod: Vec<i64> = {
                            let mut out = vec![0; ra.coeffs.len() + rb.coeffs.len()];
                            for (x, cx) in ra.coeffs.iter().enumerate() {
                                for (y, cy) in rb.coeffs.iter().enumerate() {
                                    out[x + y] += cx * cy;
                                }
                            }
                            out
                        };
                        assert_eq!(lhs, CyclotomicQuotient::reduce(ra.modulus.clone(), &prod));
                    }
                }
            }
        }
    }
}
