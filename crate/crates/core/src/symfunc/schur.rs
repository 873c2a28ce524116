use std::collections::BTreeMap;
use std::fmt;

use super::lr::lr_product;
use super::Partition;
use crate::error::{Error, Result};
use crate::fp::Prime;

/// An element of Sym_n over F_p in the Schur basis; `n = None` means an
/// unbounded number of variables. The degree of π_λ is 2|λ|.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurPoly {
    n: Option<usize>,
    p: Prime,
    terms: BTreeMap<Partition, u32>,
}

impl SchurPoly {
    pub fn zero(n: Option<usize>, p: Prime) -> Self {
        SchurPoly { n, p, terms: BTreeMap::new() }
    }

    pub fn one(n: Option<usize>, p: Prime) -> Self {
        Self::basis(Partition::empty(), n, p)
    }

    /// π_λ, or zero if λ has more than n rows.
    pub fn basis(lambda: Partition, n: Option<usize>, p: Prime) -> Self {
        Self::from_terms(n, p, [(lambda, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, i64)>>(n: Option<usize>, p: Prime, terms: I) -> Self {
        let mut out = Self::zero(n, p);
        for (lambda, c) in terms {
            out.add_term(lambda, p.reduce(c));
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: u32) {
        if c.is_multiple_of(self.p.get()) || self.n.is_some_and(|n| lambda.rows() > n) {
            return;
        }
        let c = c % self.p.get();
        let entry = self.terms.entry(lambda.clone()).or_insert(0);
        *entry = self.p.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&lambda);
        }
    }

    pub fn vars(&self) -> Option<usize> {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u32> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> u32 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same element viewed with a different variable count (terms
    /// exceeding the new bound are dropped).
    pub fn with_vars(&self, n: Option<usize>) -> Self {
        Self::from_terms(n, self.p, self.terms.iter().map(|(l, c)| (l.clone(), *c as i64)))
    }

    /// Degree 2|λ| if all terms share it.
    pub fn degree(&self) -> Option<i64> {
        let mut sizes = self.terms.keys().map(|l| l.size());
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(2 * first as i64)
    }

    fn check(&self, other: &SchurPoly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p.get(), right: other.p.get() });
        }
        if self.n != other.n {
            return Err(Error::VariableMismatch { left: format!("{:?}", self.n), right: format!("{:?}", other.n) });
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurPoly) -> Result<SchurPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurPoly) -> Result<SchurPoly> {
        self.add(&other.scale(self.p.neg(1)))
    }

    pub fn scale(&self, c: u32) -> SchurPoly {
        let c = c % self.p.get();
        let mut out = Self::zero(self.n, self.p);
        if c != 0 {
            for (l, x) in &self.terms {
                out.terms.insert(l.clone(), self.p.mul(*x, c));
            }
        }
        out
    }

    /// Product by the Littlewood–Richardson rule with row truncation.
    pub fn mult(&self, other: &SchurPoly) -> Result<SchurPoly> {
        self.check(other)?;
        let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
        let p = self.p.get() as u64;
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let w = (*c1 as u64 * *c2 as u64) % p;
                for (nu, c) in lr_product(l1, l2, self.n) {
                    let e = acc.entry(nu).or_insert(0);
                    *e = (*e + w * (c % p)) % p;
                }
            }
        }
        Ok(SchurPoly { n: self.n, p: self.p, terms: acc.into_iter().filter(|(_, c)| *c != 0).map(|(l, c)| (l, c as u32)).collect() })
    }

    pub fn pow(&self, e: u32) -> Result<SchurPoly> {
        let mut out = Self::one(self.n, self.p);
        for _ in 0..e {
            out = out.mult(self)?;
        }
        Ok(out)
    }

    /// e_r = π_{(1^r)}, zero if r exceeds the number of variables.
    pub fn elementary(r: usize, n: Option<usize>, p: Prime) -> Self {
        Self::basis(Partition::column(r), n, p)
    }

    /// h_r = π_{(r)}.
    pub fn complete(r: usize, n: Option<usize>, p: Prime) -> Self {
        Self::basis(Partition::row(r as u16), n, p)
    }

    /// Linear extension of π_λ ↦ Σ_{μ = λ+□} (C(□) + shift)·π_μ, where a
    /// box may open a new row only while rows < n, and boxes whose column
    /// exceeds `max_part` are discarded.
    pub fn box_diff(&self, shift: u32, max_part: Option<usize>) -> SchurPoly {
        let mut out = Self::zero(self.n, self.p);
        for (lambda, c) in &self.terms {
            for (mu, k) in box_moves(lambda, self.p, shift, self.n, max_part) {
                out.add_term(mu, self.p.mul(*c, k));
            }
        }
        out
    }

    /// The differential π_λ ↦ Σ C(□) π_{λ+□}.
    pub fn diff(&self) -> SchurPoly {
        self.box_diff(0, None)
    }

    /// ∂(f v_a) = ∂(f) v_a + a e_1 f v_a.
    pub fn twisted_diff(&self, a: u32) -> SchurPoly {
        self.box_diff(a % self.p.get(), None)
    }

    /// The involution π_λ ↦ (−1)^{|λ|} π_{λ^t}.
    pub fn omega(&self) -> SchurPoly {
        let mut out = Self::zero(self.n, self.p);
        for (lambda, c) in &self.terms {
            let c = if lambda.size() % 2 == 1 { self.p.neg(*c) } else { *c };
            out.add_term(lambda.transpose(), c);
        }
        out
    }
}

/// Box-adding moves of the differential with coefficient C(□) + shift.
pub fn box_moves(
    lambda: &Partition,
    p: Prime,
    shift: u32,
    max_rows: Option<usize>,
    max_part: Option<usize>,
) -> Vec<(Partition, u32)> {
    lambda
        .addable()
        .into_iter()
        .filter(|&(r, c)| max_rows.is_none_or(|n| r < n) && max_part.is_none_or(|m| c < m))
        .filter_map(|(r, c)| {
            let k = p.add(p.reduce(c as i64 - r as i64), shift % p.get());
            (k != 0).then(|| (lambda.with_box(r), k))
        })
        .collect()
}

impl fmt::Display for SchurPoly {
    /// Terms `coef*s[λ1,λ2,...]` joined by `+`, coefficients in 1..p.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*s{l}")?;
        }
        Ok(())
    }
}

impl SchurPoly {
    /// Parses the text form produced by `Display`.
    pub fn parse(s: &str, n: Option<usize>, p: Prime) -> Result<SchurPoly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(n, p));
        }
        let mut out = Self::zero(n, p);
        let mut rest = s;
        while !rest.is_empty() {
            let end = rest.find(']').ok_or_else(|| Error::Parse(format!("unterminated term in {s:?}")))?;
            let term = &rest[..=end];
            rest = rest[end + 1..].trim_start();
            rest = rest.strip_prefix('+').unwrap_or(rest).trim_start();
            let (coef, part) =
                term.split_once("*s").ok_or_else(|| Error::Parse(format!("term {term:?} lacks '*s'")))?;
            let c: i64 = coef.trim().parse().map_err(|e| Error::Parse(format!("{coef:?}: {e}")))?;
            let lambda: Partition = part.parse()?;
            out.add_term(lambda, p.reduce(c));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let p = pr(3);
        let f = SchurPoly::from_terms(None, p, [(Partition::empty(), 1), (Partition::new(vec![2, 1]).unwrap(), -1)]);
        let s = f.to_string();
        assert_eq!(s, "1*s[]+2*s[2,1]");
        assert_eq!(SchurPoly::parse(&s, None, p).unwrap(), f);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = pr(2);
        let e1 = SchurPoly::elementary(1, None, p);
        assert!(e1.add(&e1).unwrap().is_zero());
    }
}
