use std::collections::BTreeMap;
use std::fmt;

use super::lr::skew_lr;
use super::{Partition, SchurComplex, SchurPoly};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// An element of Sym_a ⊗ Sym_b in the basis π_μ ⊗ π_ν.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurTensor {
    pub a: usize,
    pub b: usize,
    pub p: Prime,
    pub terms: BTreeMap<(Partition, Partition), u32>,
}

impl SchurTensor {
    pub fn zero(a: usize, b: usize, p: Prime) -> Self {
        SchurTensor { a, b, p, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, mu: Partition, nu: Partition, c: u32) {
        let c = c % self.p.get();
        if c == 0 || mu.rows() > self.a || nu.rows() > self.b {
            return;
        }
        let key = (mu, nu);
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e = self.p.add(*e, c);
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    /// f ⊗ g.
    pub fn pure(f: &SchurPoly, g: &SchurPoly, a: usize, b: usize) -> Self {
        let mut out = Self::zero(a, b, f.prime());
        for (mu, c1) in f.terms() {
            for (nu, c2) in g.terms() {
                out.add_term(mu.clone(), nu.clone(), f.prime().mul(*c1, *c2));
            }
        }
        out
    }

    pub fn sub(&self, other: &SchurTensor) -> Result<SchurTensor> {
        if (self.a, self.b, self.p) != (other.a, other.b, other.p) {
            return Err(Error::VariableMismatch {
                left: format!("({}, {})", self.a, self.b),
                right: format!("({}, {})", other.a, other.b),
            });
        }
        let mut out = self.clone();
        for ((mu, nu), c) in &other.terms {
            out.add_term(mu.clone(), nu.clone(), self.p.neg(*c));
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SchurTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((mu, nu), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}*s{mu}@s{nu}")?;
        }
        Ok(())
    }
}

/// The variable-splitting inclusion Sym_{a+b} → Sym_a ⊗ Sym_b, via the
/// coproduct π_λ ↦ Σ c^λ_{μν} π_μ ⊗ π_ν with row truncation.
pub fn split_vars(f: &SchurPoly, a: usize, b: usize) -> Result<SchurTensor> {
    if let Some(n) = f.vars() {
        if n < a + b {
            return Err(Error::VariableMismatch { left: format!("Sym_{n}"), right: format!("Sym_{}", a + b) });
        }
    }
    let p = f.prime();
    let mut out = SchurTensor::zero(a, b, p);
    for (lambda, c) in f.terms() {
        if lambda.rows() > a + b {
            continue;
        }
        let max = lambda.size();
        for m in 0..=max {
            for mu in Partition::all_of(m, Some(a), None) {
                if !lambda.contains(&mu) {
                    continue;
                }
                for (nu, k) in skew_lr(lambda, &mu, b) {
                    out.add_term(mu.clone(), nu, p.mul(*c, (k % p.get() as u64) as u32));
                }
            }
        }
    }
    Ok(out)
}

/// Whether a homogeneous element of Sym_a ⊗ Sym_b lies in Im ∂^{p−1} of the
/// tensor p-complex, i.e. vanishes in H_{/0}.
pub fn is_slash_coboundary(t: &SchurTensor) -> Result<bool> {
    let Some(((mu, nu), _)) = t.terms.iter().next() else { return Ok(true) };
    let d = 2 * (mu.size() + nu.size()) as i64;
    if t.terms.keys().any(|(m, n)| 2 * (m.size() + n.size()) as i64 != d) {
        return Err(Error::InvalidParameter("element is not homogeneous".into()));
    }
    let cap = d.max(4 * (t.p.get() as i64 - 1));
    let left = SchurComplex::Sym { n: Some(t.a) }.build(t.p, Some(cap))?;
    let right = SchurComplex::Sym { n: Some(t.b) }.build(t.p, Some(cap))?;
    let tensor = left.tensor(&right)?;
    let terms: Vec<((Partition, Partition), u32)> = t.terms.iter().map(|(k, c)| (k.clone(), *c)).collect();
    let v = tensor
        .coordinates(d, &terms)
        .ok_or_else(|| Error::Internal("tensor term missing from the complex".into()))?;
    Ok(tensor.in_image_of_power(d, t.p.get() as usize - 1, &v))
}
