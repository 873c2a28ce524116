use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use rayon::prelude::*;

use super::Window;
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::linalg::{from_entries, Echelon, SparseMat, SparseVec};

/// Basis labels of a p-complex.
pub trait Label: Clone + Eq + Hash + Debug + Send + Sync {}

impl<T: Clone + Eq + Hash + Debug + Send + Sync> Label for T {}

/// A graded F_p-vector space with a homogeneous degree-2 differential,
/// stored degreewise on a window.
#[derive(Clone, Debug)]
pub struct PComplex<L> {
    p: Prime,
    window: Window,
    basis: BTreeMap<i64, Vec<L>>,
    diff: BTreeMap<i64, SparseMat>,
}

impl<L: Label> PComplex<L> {
    /// Assembles a complex from its graded basis and the differential of each
    /// basis vector. Targets above a truncated upper end are dropped.
    pub fn build<F>(p: Prime, window: Window, basis: BTreeMap<i64, Vec<L>>, diff_fn: F) -> Result<Self>
    where
        F: Fn(&L) -> Vec<(L, u32)> + Sync,
    {
        let basis: BTreeMap<i64, Vec<L>> =
            basis.into_iter().filter(|(d, b)| window.contains(*d) && !b.is_empty()).collect();
        let mut index: HashMap<&L, (i64, u32)> = HashMap::new();
        for (d, labels) in &basis {
            for (i, l) in labels.iter().enumerate() {
                if index.insert(l, (*d, i as u32)).is_some() {
                    return Err(Error::InvalidParameter(format!("duplicate basis label {l:?}")));
                }
            }
        }
        let degrees: Vec<i64> = basis.keys().copied().collect();
        let mats: Vec<Result<(i64, SparseMat)>> = degrees
            .par_iter()
            .map(|&d| {
                let rows = basis.get(&(d + 2)).map_or(0, |b| b.len());
                let mut cols = Vec::with_capacity(basis[&d].len());
                for l in &basis[&d] {
                    let mut entries = Vec::new();
                    for (t, c) in diff_fn(l) {
                        if c % p.get() == 0 {
                            continue;
                        }
                        match index.get(&t) {
                            Some(&(dt, i)) if dt == d + 2 => entries.push((i, c)),
                            Some(_) => return Err(Error::Inhomogeneous(format!("{l:?}"))),
                            None if !window.hi_complete && d + 2 > window.hi => {}
                            None => {
                                return Err(Error::InvalidParameter(format!(
                                    "differential of {l:?} leaves the basis at {t:?}"
                                )))
                            }
                        }
                    }
                    cols.push(from_entries(p, entries));
                }
                Ok((d, SparseMat { rows, cols }))
            })
            .collect();
        let mut diff = BTreeMap::new();
        for m in mats {
            let (d, m) = m?;
            diff.insert(d, m);
        }
        Ok(PComplex { p, window, basis, diff })
    }

    /// Assembles a complex from explicit matrices U_d → U_{d+2}.
    pub fn from_matrices(
        p: Prime,
        window: Window,
        basis: BTreeMap<i64, Vec<L>>,
        mut mats: BTreeMap<i64, SparseMat>,
    ) -> Result<Self> {
        let basis: BTreeMap<i64, Vec<L>> = basis.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        let mut diff = BTreeMap::new();
        for (d, labels) in &basis {
            if !window.contains(*d) {
                return Err(Error::InvalidParameter(format!("degree {d} outside the window")));
            }
            let rows = basis.get(&(d + 2)).map_or(0, |b| b.len());
            let m = mats.remove(d).unwrap_or_else(|| SparseMat::zero(rows, labels.len()));
            if m.ncols() != labels.len() || m.rows != rows {
                return Err(Error::InvalidParameter(format!("matrix at degree {d} has the wrong shape")));
            }
            let reduced = SparseMat {
                rows,
                cols: m.cols.iter().map(|c| from_entries(p, c.iter().copied())).collect(),
            };
            if reduced.cols.iter().flatten().any(|&(i, _)| i as usize >= rows) {
                return Err(Error::Inhomogeneous(format!("degree {d}")));
            }
            diff.insert(*d, reduced);
        }
        if let Some(d) = mats.into_iter().find(|(_, m)| !m.is_zero()).map(|(d, _)| d) {
            return Err(Error::Inhomogeneous(format!("matrix at degree {d} has no source")));
        }
        Ok(PComplex { p, window, basis, diff })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.basis.keys().copied()
    }

    pub fn basis(&self, d: i64) -> &[L] {
        self.basis.get(&d).map_or(&[], |b| b.as_slice())
    }

    pub fn dim(&self, d: i64) -> usize {
        self.basis(d).len()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(|b| b.len()).sum()
    }

    /// Matrix of ∂: U_d → U_{d+2}.
    pub fn diff_at(&self, d: i64) -> Option<&SparseMat> {
        self.diff.get(&d)
    }

    /// ∂ applied to a vector of degree d.
    pub fn apply(&self, d: i64, v: &SparseVec) -> SparseVec {
        match self.diff.get(&d) {
            Some(m) => m.apply(self.p, v),
            None => Vec::new(),
        }
    }

    /// ∂^j applied to a vector of degree d.
    pub fn apply_power(&self, d: i64, j: usize, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for step in 0..j {
            if out.is_empty() {
                break;
            }
            out = self.apply(d + 2 * step as i64, &out);
        }
        out
    }

    /// Checks ∂^p = 0 on every degree where the window allows it. The error
    /// names the first offending basis vector.
    pub fn validate(&self) -> Result<()> {
        let p = self.p.get() as usize;
        for (&d, labels) in &self.basis {
            if !self.window.hi_complete && d + 2 * p as i64 > self.window.hi {
                continue;
            }
            for (i, l) in labels.iter().enumerate() {
                if !self.apply_power(d, p, &vec![(i as u32, 1)]).is_empty() {
                    return Err(Error::NotNilpotent(format!("{l:?} in degree {d}")));
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// r[j] = rank of ∂^j out of degree d, for j = 0..=p (r[0] = dim).
    pub fn ranks_at(&self, d: i64) -> Vec<usize> {
        let p = self.p.get() as usize;
        let n = self.dim(d);
        let mut out = vec![n];
        let mut images: Vec<SparseVec> = (0..n as u32).map(|i| vec![(i, 1)]).collect();
        for j in 1..=p {
            let src = d + 2 * (j as i64 - 1);
            images = images.iter().map(|v| self.apply(src, v)).collect();
            let mut ech = Echelon::new(self.p);
            let r = images.iter().filter(|v| ech.insert(v)).count();
            out.push(r);
            if r == 0 {
                out.resize(p + 1, 0);
                break;
            }
        }
        out
    }

    /// Ranks for every stored degree, computed in parallel.
    pub fn all_ranks(&self) -> BTreeMap<i64, Vec<usize>> {
        let degrees: Vec<i64> = self.degrees().collect();
        degrees.par_iter().map(|&d| (d, self.ranks_at(d))).collect()
    }

    /// The dual complex: degrees negated and ∂* = −∂^T.
    pub fn dual(&self) -> PComplex<L> {
        let p = self.p;
        let mut basis = BTreeMap::new();
        let mut diff = BTreeMap::new();
        for (&d, labels) in &self.basis {
            basis.insert(-d, labels.clone());
        }
        for (&d, labels) in &self.basis {
            let src = d + 2;
            let Some(m) = self.diff.get(&d) else { continue };
            let nsrc = self.dim(src);
            if nsrc == 0 {
                continue;
            }
            let mut cols: Vec<Vec<(u32, u32)>> = vec![Vec::new(); nsrc];
            for (j, col) in m.cols.iter().enumerate() {
                for &(i, c) in col {
                    cols[i as usize].push((j as u32, p.neg(c)));
                }
            }
            let cols = cols.into_iter().map(|c| from_entries(p, c)).collect();
            diff.insert(-src, SparseMat { rows: labels.len(), cols });
        }
        PComplex { p, window: self.window.dual(), basis, diff }
    }

    /// Tensor product with the Leibniz differential and no signs.
    pub fn tensor<M: Label>(&self, other: &PComplex<M>) -> Result<PComplex<(L, M)>> {
        if self.p != other.p {
            return Err(Error::PrimeMismatch { left: self.p.get(), right: other.p.get() });
        }
        let p = self.p;
        let window = self.window.tensor(&other.window)?;
        let mut basis: BTreeMap<i64, Vec<(L, M)>> = BTreeMap::new();
        let mut position: HashMap<(i64, u32, i64, u32), u32> = HashMap::new();
        for (&da, la) in &self.basis {
            for (&db, lb) in &other.basis {
                let d = da + db;
                if !window.contains(d) {
                    continue;
                }
                let slot = basis.entry(d).or_default();
                for (i, x) in la.iter().enumerate() {
                    for (j, y) in lb.iter().enumerate() {
                        position.insert((da, i as u32, db, j as u32), slot.len() as u32);
                        slot.push((x.clone(), y.clone()));
                    }
                }
            }
        }
        let mut diff = BTreeMap::new();
        for (&d, labels) in &basis {
            let rows = basis.get(&(d + 2)).map_or(0, |b| b.len());
            let mut cols = vec![Vec::new(); labels.len()];
            for (&da, la) in &self.basis {
                let db = d - da;
                let nb = other.dim(db);
                if nb == 0 {
                    continue;
                }
                for i in 0..la.len() as u32 {
                    for j in 0..nb as u32 {
                        let col = position[&(da, i, db, j)] as usize;
                        let mut entries = Vec::new();
                        if let Some(m) = self.diff.get(&da) {
                            for &(t, c) in &m.cols[i as usize] {
                                if let Some(&r) = position.get(&(da + 2, t, db, j)) {
                                    entries.push((r, c));
                                }
                            }
                        }
                        if let Some(m) = other.diff.get(&db) {
                            for &(t, c) in &m.cols[j as usize] {
                                if let Some(&r) = position.get(&(da, i, db + 2, t)) {
                                    entries.push((r, c));
                                }
                            }
                        }
                        cols[col] = from_entries(p, entries);
                    }
                }
            }
            diff.insert(d, SparseMat { rows, cols });
        }
        Ok(PComplex { p, window, basis, diff })
    }

    /// Coordinates of Σ c·label in the degree-d basis; `None` if some label
    /// is not a basis vector of that degree.
    pub fn coordinates(&self, d: i64, terms: &[(L, u32)]) -> Option<SparseVec> {
        let index: HashMap<&L, u32> = self.basis(d).iter().enumerate().map(|(i, l)| (l, i as u32)).collect();
        let mut entries = Vec::with_capacity(terms.len());
        for (l, c) in terms {
            entries.push((*index.get(l)?, *c));
        }
        Some(from_entries(self.p, entries))
    }

    /// Whether v (of degree d) lies in Im ∂^j.
    pub fn in_image_of_power(&self, d: i64, j: usize, v: &SparseVec) -> bool {
        let src = d - 2 * j as i64;
        let mut ech = Echelon::new(self.p);
        for i in 0..self.dim(src) as u32 {
            ech.insert(&self.apply_power(src, j, &vec![(i, 1)]));
        }
        ech.contains(v)
    }

    /// Whether the vectors (all of degree d) are linearly independent modulo
    /// Im ∂^j.
    pub fn independent_modulo_image(&self, d: i64, j: usize, vs: &[SparseVec]) -> bool {
        let src = d - 2 * j as i64;
        let mut ech = Echelon::new(self.p);
        for i in 0..self.dim(src) as u32 {
            ech.insert(&self.apply_power(src, j, &vec![(i, 1)]));
        }
        vs.iter().all(|v| ech.insert(v))
    }

    /// Relabels basis vectors; the map must be injective.
    pub fn map_labels<M: Label>(&self, f: impl Fn(&L) -> M) -> PComplex<M> {
        PComplex {
            p: self.p,
            window: self.window,
            basis: self.basis.iter().map(|(d, b)| (*d, b.iter().map(&f).collect())).collect(),
            diff: self.diff.clone(),
        }
    }
}
