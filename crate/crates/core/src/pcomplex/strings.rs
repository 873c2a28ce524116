use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use super::{GradedDims, Label, PComplex, SlashDims, Window};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::linalg::{kernel, Echelon, SparseMat, SparseVec};

/// One Jordan string x, ∂x, …, ∂^{ℓ−1}x with x in degree `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanString {
    pub start: i64,
    pub vectors: Vec<SparseVec>,
}

impl JordanString {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Multiplicities of strings by (start degree, length).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringCounts {
    pub p: Prime,
    pub window: Window,
    pub counts: BTreeMap<(i64, usize), usize>,
}

impl<L: Label> PComplex<L> {
    /// Matrix of ∂^j out of degree d.
    fn power_matrix(&self, d: i64, j: usize) -> SparseMat {
        let rows = self.dim(d + 2 * j as i64);
        let cols = (0..self.dim(d) as u32).map(|i| self.apply_power(d, j, &vec![(i, 1)])).collect();
        SparseMat { rows, cols }
    }

    fn kernel_of_power(&self, d: i64, j: usize) -> Vec<SparseVec> {
        if j == 0 {
            return Vec::new();
        }
        kernel(self.prime(), &self.power_matrix(d, j))
    }

    /// An explicit homogeneous Jordan basis of ∂. Strings of length p are the
    /// contractible part; strings touching a truncated end of the window
    /// describe the truncated complex only.
    pub fn string_decompose(&self) -> Result<Vec<JordanString>> {
        self.validate()?;
        let p = self.prime();
        let pu = p.get() as usize;
        let mut out = Vec::new();
        for d in self.degrees().collect::<Vec<_>>() {
            for len in (1..=pu).rev() {
                let mut taken = Echelon::new(p);
                for v in self.kernel_of_power(d, len - 1) {
                    taken.insert(&v);
                }
                for v in self.kernel_of_power(d - 2, len + 1) {
                    taken.insert(&self.apply(d - 2, &v));
                }
                for v in self.kernel_of_power(d, len) {
                    if taken.insert(&v) {
                        let mut vectors = vec![v];
                        for i in 1..len {
                            let next = self.apply(d + 2 * (i as i64 - 1), &vectors[i - 1]);
                            vectors.push(next);
                        }
                        out.push(JordanString { start: d, vectors });
                    }
                }
            }
        }
        let mut per_degree: HashMap<i64, Echelon> = HashMap::new();
        for s in &out {
            for (i, v) in s.vectors.iter().enumerate() {
                let e = per_degree.entry(s.start + 2 * i as i64).or_insert_with(|| Echelon::new(p));
                if !e.insert(v) {
                    return Err(Error::Internal("string vectors are dependent".into()));
                }
            }
        }
        if per_degree.values().map(|e| e.rank()).sum::<usize>() != self.total_dim() {
            return Err(Error::Internal("strings do not span the complex".into()));
        }
        Ok(out)
    }

    /// String multiplicities from ranks alone: the number of strings on
    /// [s, t] is c(s,t) − c(s−2,t) − c(s,t+2) + c(s−2,t+2), where c(s,t) is
    /// the rank of ∂^{(t−s)/2} from degree s.
    pub fn string_counts(&self) -> StringCounts {
        let pu = self.prime().get() as usize;
        let ranks = self.all_ranks();
        let c = |s: i64, j: usize| ranks.get(&s).map_or(0, |r| r.get(j).copied().unwrap_or(0));
        let mut counts = BTreeMap::new();
        for s in self.degrees() {
            for len in 1..=pu {
                let j = len - 1;
                let n = c(s, j) as i64 - c(s - 2, j + 1) as i64 - c(s, j + 1) as i64 + c(s - 2, j + 2) as i64;
                if n > 0 {
                    counts.insert((s, len), n as usize);
                }
            }
        }
        StringCounts { p: self.prime(), window: self.window(), counts }
    }
}

fn standard_string(p: Prime, len: usize) -> PComplex<usize> {
    let basis = (0..len).map(|i| (2 * i as i64, vec![i])).collect();
    PComplex::build(p, Window::complete(0, 2 * (len as i64 - 1)), basis, |&i| {
        if i + 1 < len {
            vec![(i + 1, 1)]
        } else {
            vec![]
        }
    })
    .expect("standard string")
}

type Table = BTreeMap<i64, Vec<usize>>;

/// Slash dimensions of the tensor product of two standard strings of the
/// given lengths starting in degree 0, keyed by degree.
fn string_tensor_table(p: Prime, l1: usize, l2: usize) -> Table {
    type Cache = RwLock<HashMap<(u32, usize, usize), Table>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    let key = (p.get(), l1, l2);
    if let Some(t) = cache.read().expect("string table poisoned").get(&key) {
        return t.clone();
    }
    let t = standard_string(p, l1).tensor(&standard_string(p, l2)).expect("finite tensor");
    let dims = t.slash_dims();
    let mut table: Table = BTreeMap::new();
    for (k, g) in dims.per_k.iter().enumerate() {
        for (&d, &n) in &g.dims {
            if n > 0 {
                table.entry(d).or_insert_with(|| vec![0; p.get() as usize - 1])[k] = n;
            }
        }
    }
    cache.write().expect("string table poisoned").insert(key, table.clone());
    table
}

/// Slash dimensions of a tensor product computed from the string
/// multiplicities of the two factors.
pub fn tensor_slash_dims(a: &StringCounts, b: &StringCounts) -> Result<SlashDims> {
    if a.p != b.p {
        return Err(Error::PrimeMismatch { left: a.p.get(), right: b.p.get() });
    }
    let p = a.p;
    let pu = p.get() as usize;
    let window = a.window.tensor(&b.window)?;
    let valid = window.valid_range(p);
    let mut acc: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); pu - 1];
    for (&(s1, l1), &n1) in &a.counts {
        if l1 == pu {
            continue;
        }
        for (&(s2, l2), &n2) in &b.counts {
            if l2 == pu {
                continue;
            }
            for (off, dims) in string_tensor_table(p, l1, l2) {
                let d = s1 + s2 + off;
                if d < valid.0 || d > valid.1 {
                    continue;
                }
                for (k, n) in dims.iter().enumerate() {
                    if *n > 0 {
                        *acc[k].entry(d).or_insert(0) += n * n1 * n2;
                    }
                }
            }
        }
    }
    let parities: std::collections::BTreeSet<i64> = a
        .counts
        .keys()
        .flat_map(|&(s1, _)| b.counts.keys().map(move |&(s2, _)| (s1 + s2 - window.lo).rem_euclid(2)))
        .collect();
    let per_k = acc
        .into_iter()
        .map(|m| {
            let dims = (valid.0..=valid.1)
                .filter(|d| parities.contains(&(d - window.lo).rem_euclid(2)))
                .map(|d| (d, m.get(&d).copied().unwrap_or(0)))
                .collect();
            GradedDims { dims, window: valid }
        })
        .collect();
    Ok(SlashDims { p, valid, per_k })
}
