//! Square matrices over Sym_N acting on a free module with graded basis.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::symfunc::SchurPoly;

/// An endomorphism T(B_j) = Σ_i T_ij B_i of a free Sym_N-module whose basis
/// B_i sits in degree `degrees[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDGMatrix {
    n: usize,
    p: Prime,
    degrees: Vec<i64>,
    entries: BTreeMap<(usize, usize), SchurPoly>,
}

impl PDGMatrix {
    pub fn zero(n: usize, degrees: Vec<i64>, p: Prime) -> Self {
        PDGMatrix { n, p, degrees, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize, degrees: Vec<i64>, p: Prime) -> Self {
        let mut m = Self::zero(n, degrees, p);
        for i in 0..m.size() {
            m.set(i, i, SchurPoly::one(Some(n), p));
        }
        m
    }

    /// The matrix unit E_ij.
    pub fn unit(i: usize, j: usize, n: usize, degrees: Vec<i64>, p: Prime) -> Self {
        let mut m = Self::zero(n, degrees, p);
        m.set(i, j, SchurPoly::one(Some(n), p));
        m
    }

    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), SchurPoly> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&SchurPoly> {
        self.entries.get(&(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, f: SchurPoly) {
        if f.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), f.with_vars(Some(self.n)));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check(&self, other: &PDGMatrix) -> Result<()> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p.get(), right: other.p.get() });
        }
        if self.n != other.n || self.degrees != other.degrees {
            return Err(Error::InvalidParameter("matrices over different modules".into()));
        }
        Ok(())
    }

    fn accumulate(&mut self, i: usize, j: usize, f: &SchurPoly) {
        let cur = self.entries.remove(&(i, j)).unwrap_or_else(|| SchurPoly::zero(Some(self.n), self.p));
        let sum = cur.add(f).expect("entries share one base ring");
        self.set(i, j, sum);
    }

    pub fn add(&self, other: &PDGMatrix) -> Result<PDGMatrix> {
        self.check(other)?;
        let mut out = self.clone();
        for ((i, j), f) in &other.entries {
            out.accumulate(*i, *j, f);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PDGMatrix) -> Result<PDGMatrix> {
        self.add(&other.scale(self.p.neg(1)))
    }

    pub fn scale(&self, c: u32) -> PDGMatrix {
        let mut out = Self::zero(self.n, self.degrees.clone(), self.p);
        for ((i, j), f) in &self.entries {
            out.set(*i, *j, f.scale(c));
        }
        out
    }

    /// Matrix product, i.e. composition self ∘ other.
    pub fn mul(&self, other: &PDGMatrix) -> Result<PDGMatrix> {
        self.check(other)?;
        let mut rows: BTreeMap<usize, Vec<(usize, &SchurPoly)>> = BTreeMap::new();
        for ((k, j), g) in &other.entries {
            rows.entry(*k).or_default().push((*j, g));
        }
        let mut out = Self::zero(self.n, self.degrees.clone(), self.p);
        for ((i, k), f) in &self.entries {
            for (j, g) in rows.get(k).into_iter().flatten() {
                out.accumulate(*i, *j, &f.mult(g)?);
            }
        }
        Ok(out)
    }

    /// Entrywise ∂ on Sym_N.
    pub fn entrywise_diff(&self) -> PDGMatrix {
        let mut out = Self::zero(self.n, self.degrees.clone(), self.p);
        for ((i, j), f) in &self.entries {
            out.set(*i, *j, f.diff());
        }
        out
    }

    /// ∂(T) = entrywise ∂(T) + D·T − T·D for the module differential D.
    pub fn diff(&self, d: &PDGMatrix) -> Result<PDGMatrix> {
        self.entrywise_diff().add(&d.mul(self)?)?.sub(&self.mul(d)?)
    }

    /// The common degree 2|λ| + deg B_i − deg B_j of all terms, if homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.entries.iter().flat_map(|((i, j), f)| {
            let shift = self.degrees[*i] - self.degrees[*j];
            f.terms().keys().map(move |l| 2 * l.size() as i64 + shift)
        });
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// True when every entry lies in F_p ⊂ Sym_N.
    pub fn is_scalar(&self) -> bool {
        self.entries.values().all(|f| f.terms().keys().all(|l| l.is_empty()))
    }
}

impl fmt::Display for PDGMatrix {
    /// One `(i,j): entry` line per nonzero entry, row-major.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), e) in &self.entries {
            writeln!(f, "({i},{j}): {e}")?;
        }
        Ok(())
    }
}
