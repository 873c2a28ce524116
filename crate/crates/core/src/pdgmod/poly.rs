//! Pol_n = F_p[x_1, …, x_n] with deg x_i = 2 and ∂(x_i) = x_i².

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::Prime;

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolElem {
    n: usize,
    p: Prime,
    terms: BTreeMap<Monomial, u32>,
}

impl PolElem {
    pub fn zero(n: usize, p: Prime) -> Self {
        PolElem { n, p, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, p: Prime) -> Self {
        Self::monomial(vec![0; n], 1, p)
    }

    pub fn monomial(exps: Monomial, c: u32, p: Prime) -> Self {
        let mut out = Self::zero(exps.len(), p);
        out.add_term(exps, c);
        out
    }

    /// x_i, 1-based.
    pub fn var(i: usize, n: usize, p: Prime) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(e, 1, p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(n: usize, p: Prime, terms: I) -> Self {
        let mut out = Self::zero(n, p);
        for (m, c) in terms {
            out.add_term(m, p.reduce(c));
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        assert_eq!(m.len(), self.n, "monomial length");
        let c = c % self.p.get();
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert(0);
        *e = self.p.add(*e, c);
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Internal degree 2·(total exponent) if homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| 2 * m.iter().sum::<u32>() as i64);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| 2 * m.iter().sum::<u32>() as i64).max()
    }

    pub fn add(&self, other: &PolElem) -> PolElem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &PolElem) -> PolElem {
        self.add(&other.scale(self.p.neg(1)))
    }

    pub fn scale(&self, c: u32) -> PolElem {
        let mut out = Self::zero(self.n, self.p);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), self.p.mul(*x, c % self.p.get()));
        }
        out
    }

    pub fn mul(&self, other: &PolElem) -> PolElem {
        let mut out = Self::zero(self.n, self.p);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, self.p.mul(*c1, *c2));
            }
        }
        out
    }

    /// The p-differential, a derivation with ∂(x_i) = x_i².
    pub fn diff(&self) -> PolElem {
        let mut out = Self::zero(self.n, self.p);
        for (m, c) in &self.terms {
            for i in 0..self.n {
                if m[i] > 0 {
                    let mut m2 = m.clone();
                    m2[i] += 1;
                    out.add_term(m2, self.p.mul(*c, self.p.reduce(m[i] as i64)));
                }
            }
        }
        out
    }

    /// f with x_i and x_{i+1} exchanged, 1-based.
    pub fn swap(&self, i: usize) -> PolElem {
        let mut out = Self::zero(self.n, self.p);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.swap(i - 1, i);
            out.add_term(m2, *c);
        }
        out
    }

    pub fn is_symmetric_in(&self, vars: std::ops::Range<usize>) -> bool {
        vars.clone().skip(1).all(|i| self.swap(i) == *self)
    }
}

/// The divided difference (f − s_i f)/(x_i − x_{i+1}), computed monomialwise.
pub fn demazure(i: usize, f: &PolElem) -> Result<PolElem> {
    if i == 0 || i >= f.n {
        return Err(Error::InvalidParameter(format!("demazure index {i} with {} variables", f.n)));
    }
    let (a_idx, b_idx) = (i - 1, i);
    let mut out = PolElem::zero(f.n, f.p);
    for (m, c) in &f.terms {
        let (a, b) = (m[a_idx], m[b_idx]);
        let (lo, hi, sign) = if a > b { (b, a, *c) } else { (a, b, f.p.neg(*c)) };
        for j in 0..hi - lo {
            let mut m2 = m.clone();
            m2[a_idx] = hi - 1 - j;
            m2[b_idx] = lo + j;
            if a < b {
                m2.swap(a_idx, b_idx);
            }
            out.add_term(m2, sign);
        }
    }
    Ok(out)
}

/// Applies ∂_{i_1}, then ∂_{i_2}, … in the given order.
pub fn demazure_word(word: &[usize], f: &PolElem) -> Result<PolElem> {
    word.iter().try_fold(f.clone(), |g, &i| demazure(i, &g))
}

/// Application order of divided differences realizing the block swap of
/// x_1..x_a past x_{a+1}..x_{a+b}, each x-variable moved right in turn.
pub fn staircase_word(a: usize, b: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(a * b);
    for i in (1..=a).rev() {
        w.extend(i..i + b);
    }
    w
}

/// A second reduced word for the same permutation, moving each x'-variable left.
pub fn staircase_word_transposed(a: usize, b: usize) -> Vec<usize> {
    let mut w = Vec::with_capacity(a * b);
    for j in 1..=b {
        w.extend((j..a + j).rev());
    }
    w
}

/// All monomials in n variables of total exponent e.
pub fn monomials(n: usize, e: u32) -> Vec<Monomial> {
    fn go(n: usize, e: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(e);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=e).rev() {
            cur.push(k);
            go(n, e - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if e == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, e, &mut Vec::with_capacity(n), &mut out);
    out
}

impl fmt::Display for PolElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| if *e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            match (vars.is_empty(), *c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", vars.join("*"))?,
                (false, c) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
