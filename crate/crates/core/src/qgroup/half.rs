//! The positive half U^+ with divided powers θ^{(a)}.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{same_ring, Op, Rho, Scalars};
use crate::cyclotomic::qbinom;
use crate::error::Result;
use crate::LaurentPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct HalfElem<S: Scalars> {
    ring: S,
    terms: BTreeMap<u64, S::Elem>,
}

impl<S: Scalars> HalfElem<S> {
    pub fn zero(ring: S) -> Self {
        HalfElem { ring, terms: BTreeMap::new() }
    }

    /// θ^{(a)}.
    pub fn divided_power(a: u64, ring: S) -> Self {
        let one = ring.one();
        let mut out = Self::zero(ring);
        out.add_term(a, one);
        out
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<u64, S::Elem> {
        &self.terms
    }

    pub fn coeff(&self, a: u64) -> S::Elem {
        self.terms.get(&a).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: u64, c: S::Elem) {
        let sum = match self.terms.remove(&a) {
            Some(x) => self.ring.add(&x, &c),
            None => c,
        };
        if !self.ring.is_zero(&sum) {
            self.terms.insert(a, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(*a, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (a, x) in &self.terms {
            out.add_term(*a, self.ring.mul(x, c));
        }
        out
    }
}

/// θ^{(a)}θ^{(b)} = [a+b choose a] θ^{(a+b)}, extended bilinearly.
pub fn half_mult<S: Scalars>(x: &HalfElem<S>, y: &HalfElem<S>) -> Result<HalfElem<S>> {
    same_ring(&x.ring, &y.ring)?;
    let ring = &x.ring;
    let mut out = HalfElem::zero(ring.clone());
    for (a, c1) in &x.terms {
        for (b, c2) in &y.terms {
            let binom = ring.embed(&qbinom((a + b) as i64, *a as i64)?);
            out.add_term(a + b, ring.mul(&ring.mul(c1, c2), &binom));
        }
    }
    Ok(out)
}

/// r(θ^{(a)}) = Σ_k v^{k(k−a)} θ^{(k)} ⊗ θ^{(a−k)}.
pub fn half_comult<S: Scalars>(x: &HalfElem<S>) -> BTreeMap<(u64, u64), S::Elem> {
    let ring = &x.ring;
    let mut out: BTreeMap<(u64, u64), S::Elem> = BTreeMap::new();
    for (a, c) in &x.terms {
        for k in 0..=*a {
            let e = k as i64 * (k as i64 - *a as i64);
            let term = ring.mul(c, &ring.embed(&LaurentPoly::v_pow(e)));
            let key = (k, a - k);
            let sum = match out.remove(&key) {
                Some(s) => ring.add(&s, &term),
                None => term,
            };
            if !ring.is_zero(&sum) {
                out.insert(key, sum);
            }
        }
    }
    out
}

/// E^{(a)} ↦ 𝖤^{(a/p)} when p | a, and 0 otherwise.
pub fn half_frobenius(x: &HalfElem<Op>) -> HalfElem<Rho> {
    let p = x.ring.0;
    let mut out = HalfElem::zero(Rho(p));
    for (a, c) in &x.terms {
        if a % p.get() as u64 == 0 {
            out.add_term(a / p.get() as u64, c.clone());
        }
    }
    out
}

impl<S: Scalars> fmt::Display for HalfElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, c)| format!("({c})*E({a})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
