//! Sparse exact linear algebra over F_p.

use std::collections::HashMap;

use crate::fp::Prime;

/// A sparse vector: (index, nonzero value) pairs sorted by index.
pub type SparseVec = Vec<(u32, u32)>;

/// out = a + c·b
pub fn axpy(p: Prime, a: &SparseVec, c: u32, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = p.mul(c, b[j].1);
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = p.add(a[i].1, p.mul(c, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(p: Prime, c: u32, v: &SparseVec) -> SparseVec {
    if c == 0 {
        return Vec::new();
    }
    v.iter().map(|&(i, x)| (i, p.mul(c, x))).collect()
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn from_entries<I: IntoIterator<Item = (u32, u32)>>(p: Prime, entries: I) -> SparseVec {
    let mut acc: HashMap<u32, u32> = HashMap::new();
    for (i, v) in entries {
        let slot = acc.entry(i).or_insert(0);
        *slot = p.add(*slot, v % p.get());
    }
    let mut out: SparseVec = acc.into_iter().filter(|&(_, v)| v != 0).collect();
    out.sort_unstable();
    out
}

/// A sparse matrix stored by columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMat {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMat { rows, cols: vec![Vec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, p: Prime, v: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for &(j, c) in v {
            out = axpy(p, &out, c, &self.cols[j as usize]);
        }
        out
    }

    /// The product self ∘ rhs.
    pub fn compose(&self, p: Prime, rhs: &SparseMat) -> SparseMat {
        SparseMat { rows: self.rows, cols: rhs.cols.iter().map(|c| self.apply(p, c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn rank(&self, p: Prime) -> usize {
        let mut ech = Echelon::new(p);
        self.cols.iter().filter(|c| ech.insert(c)).count()
    }
}

/// An incrementally built row-echelon basis of a subspace. Pivots are the
/// lowest index of each stored vector, and stored vectors are normalized to
/// have leading coefficient 1.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: Prime,
    pivots: HashMap<u32, usize>,
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(p: Prime) -> Self {
        Echelon { p, pivots: HashMap::new(), rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of v after reduction against the stored basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut done: SparseVec = Vec::new();
        let mut rest = v.clone();
        while let Some(&(lead, c)) = rest.first() {
            match self.pivots.get(&lead) {
                Some(&r) => rest = axpy(self.p, &rest, self.p.neg(c), &self.rows[r]),
                None => {
                    done.push((lead, c));
                    rest.remove(0);
                }
            }
        }
        done
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_leading(v).is_empty()
    }

    fn reduce_leading(&self, v: &SparseVec) -> SparseVec {
        let mut rest = v.clone();
        while let Some(&(lead, c)) = rest.first() {
            match self.pivots.get(&lead) {
                Some(&r) => rest = axpy(self.p, &rest, self.p.neg(c), &self.rows[r]),
                None => return rest,
            }
        }
        rest
    }

    /// Adds v to the span; returns true if it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let rest = self.reduce_leading(v);
        match rest.first() {
            None => false,
            Some(&(lead, c)) => {
                let row = scale(self.p, self.p.inv(c), &rest);
                self.pivots.insert(lead, self.rows.len());
                self.rows.push(row);
                true
            }
        }
    }
}

/// Echelon form that also records how each stored vector was built from the
/// inserted ones, so that membership comes with a certificate.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    p: Prime,
    pivots: HashMap<u32, usize>,
    rows: Vec<(SparseVec, SparseVec)>,
    inserted: u32,
}

impl TrackedEchelon {
    pub fn new(p: Prime) -> Self {
        TrackedEchelon { p, pivots: HashMap::new(), rows: Vec::new(), inserted: 0 }
    }

    fn reduce_leading(&self, v: &SparseVec, combo: SparseVec) -> (SparseVec, SparseVec) {
        let (mut rest, mut combo) = (v.clone(), combo);
        while let Some(&(lead, c)) = rest.first() {
            match self.pivots.get(&lead) {
                Some(&r) => {
                    let k = self.p.neg(c);
                    rest = axpy(self.p, &rest, k, &self.rows[r].0);
                    combo = axpy(self.p, &combo, k, &self.rows[r].1);
                }
                None => break,
            }
        }
        (rest, combo)
    }

    /// Inserts the next vector (numbered consecutively from 0). Returns the
    /// kernel relation among inserted vectors if v was dependent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let (rest, combo) = self.reduce_leading(v, vec![(id, 1)]);
        match rest.first() {
            None => Some(combo),
            Some(&(lead, c)) => {
                let inv = self.p.inv(c);
                self.pivots.insert(lead, self.rows.len());
                self.rows.push((scale(self.p, inv, &rest), scale(self.p, inv, &combo)));
                None
            }
        }
    }

    /// Coefficients x with Σ x_i·(inserted_i) = v, if v lies in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rest, combo) = self.reduce_leading(v, Vec::new());
        if rest.is_empty() {
            Some(scale(self.p, self.p.neg(1), &combo))
        } else {
            None
        }
    }
}

/// Basis of the kernel of a column-stored matrix.
pub fn kernel(p: Prime, m: &SparseMat) -> Vec<SparseVec> {
    let mut ech = TrackedEchelon::new(p);
    m.cols.iter().filter_map(|c| ech.insert(c)).collect()
}
