//! Tensor products Sym_{c_1} ⊗ … ⊗ Sym_{c_r} of consecutive variable blocks,
//! viewed as free modules over Sym_N with N = c_1 + … + c_r.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::symfunc::{box_moves, lr_product, split_vars, Partition, SchurPoly};

/// Σ c·π_{ρ_1}(x_1)⋯π_{ρ_r}(x_r) with x_k the k-th block of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTensor {
    sizes: Vec<usize>,
    p: Prime,
    terms: BTreeMap<Vec<Partition>, u32>,
}

impl BlockTensor {
    pub fn zero(sizes: &[usize], p: Prime) -> Self {
        BlockTensor { sizes: sizes.to_vec(), p, terms: BTreeMap::new() }
    }

    pub fn one(sizes: &[usize], p: Prime) -> Self {
        Self::basis(vec![Partition::empty(); sizes.len()], sizes, p)
    }

    pub fn basis(parts: Vec<Partition>, sizes: &[usize], p: Prime) -> Self {
        let mut out = Self::zero(sizes, p);
        out.add_term(parts, 1);
        out
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Partition>, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, parts: Vec<Partition>, c: u32) {
        let c = c % self.p.get();
        if c == 0 || parts.iter().zip(&self.sizes).any(|(l, &n)| l.rows() > n) {
            return;
        }
        let e = self.terms.entry(parts.clone()).or_insert(0);
        *e = self.p.add(*e, c);
        if *e == 0 {
            self.terms.remove(&parts);
        }
    }

    pub fn add(&self, other: &BlockTensor) -> BlockTensor {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &BlockTensor) -> BlockTensor {
        self.add(&other.scale(self.p.neg(1)))
    }

    pub fn scale(&self, c: u32) -> BlockTensor {
        let mut out = Self::zero(&self.sizes, self.p);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), self.p.mul(*x, c));
        }
        out
    }

    /// Blockwise Littlewood–Richardson product.
    pub fn mul(&self, other: &BlockTensor) -> BlockTensor {
        let mut out = Self::zero(&self.sizes, self.p);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let c = self.p.mul(*c1, *c2);
                let mut partial: Vec<(Vec<Partition>, u64)> = vec![(Vec::new(), 1)];
                for (b, n) in self.sizes.iter().enumerate() {
                    let prod = lr_product(&k1[b], &k2[b], Some(*n));
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (pre, m) in &partial {
                        for (nu, m2) in &prod {
                            let mut key = pre.clone();
                            key.push(nu.clone());
                            next.push((key, m * m2 % self.p.get() as u64));
                        }
                    }
                    partial = next;
                }
                for (key, m) in partial {
                    out.add_term(key, self.p.mul(c, m as u32));
                }
            }
        }
        out
    }

    /// Leibniz differential with ∂(v) = Σ_k t_k e_1(x_k) v.
    pub fn diff(&self, twists: &[u32]) -> BlockTensor {
        let mut out = Self::zero(&self.sizes, self.p);
        for (key, c) in &self.terms {
            for (b, n) in self.sizes.iter().enumerate() {
                for (nu, m) in box_moves(&key[b], self.p, twists[b], Some(*n), None) {
                    let mut k2 = key.clone();
                    k2[b] = nu;
                    out.add_term(k2, self.p.mul(*c, m));
                }
            }
        }
        out
    }

    /// π_ν in the variables of blocks `from..` of `sizes`, split across those blocks.
    pub fn split(nu: &Partition, sizes: &[usize], from: usize, p: Prime) -> Result<BlockTensor> {
        let mut out = Self::zero(sizes, p);
        let mut prefix = vec![Partition::empty(); from];
        split_into(nu, &sizes[from..], p, 1, &mut prefix, &mut out)?;
        Ok(out)
    }

    /// ∂_w for the swap of blocks k and k+1 followed by the inclusion back
    /// into the tensor product: a Sym_N-linear endomorphism of degree −2c_k c_{k+1}.
    pub fn block_crossing(&self, k: usize) -> Result<BlockTensor> {
        let (a, b) = (self.sizes[k], self.sizes[k + 1]);
        let mut out = Self::zero(&self.sizes, self.p);
        for (key, c) in &self.terms {
            if let Some((nu, neg)) = pair_pushforward(&key[k], &key[k + 1], a, b) {
                let c = if neg { self.p.neg(*c) } else { *c };
                let split = split_vars(&SchurPoly::basis(nu, Some(a + b), self.p), a, b)?;
                for ((l, r), m) in &split.terms {
                    let mut k2 = key.clone();
                    k2[k] = l.clone();
                    k2[k + 1] = r.clone();
                    out.add_term(k2, self.p.mul(c, *m));
                }
            }
        }
        Ok(out)
    }
}

fn split_into(
    nu: &Partition,
    sizes: &[usize],
    p: Prime,
    c: u32,
    prefix: &mut Vec<Partition>,
    out: &mut BlockTensor,
) -> Result<()> {
    match sizes {
        [] => {
            if nu.is_empty() {
                out.add_term(prefix.clone(), c);
            }
        }
        [n] => {
            if nu.rows() <= *n {
                prefix.push(nu.clone());
                out.add_term(prefix.clone(), c);
                prefix.pop();
            }
        }
        [first, rest @ ..] => {
            let total: usize = sizes.iter().sum();
            let f = SchurPoly::basis(nu.clone(), Some(total), p);
            let t = split_vars(&f, *first, total - first)?;
            for ((l, r), m) in &t.terms {
                prefix.push(l.clone());
                split_into(r, rest, p, p.mul(c, *m), prefix, out)?;
                prefix.pop();
            }
        }
    }
    Ok(())
}

/// ∂_w(π_κ(x)·π_σ(x')) for x of size a, x' of size b and w the block swap:
/// the Schur function of (κ_1−b, …, κ_a−b, σ_1, …, σ_b) after straightening,
/// as ±π_ν in a+b variables, or None when it vanishes.
pub fn pair_pushforward(kappa: &Partition, sigma: &Partition, a: usize, b: usize) -> Option<(Partition, bool)> {
    if kappa.rows() > a || sigma.rows() > b {
        return None;
    }
    let n = a + b;
    let mut beta: Vec<i64> = (0..a)
        .map(|i| kappa.part(i) as i64 - b as i64)
        .chain((0..b).map(|j| sigma.part(j) as i64))
        .enumerate()
        .map(|(i, x)| x + (n - 1 - i) as i64)
        .collect();
    if beta.iter().any(|&x| x < 0) {
        return None;
    }
    let mut neg = false;
    for i in 0..n {
        for j in 0..n - 1 - i {
            match beta[j].cmp(&beta[j + 1]) {
                std::cmp::Ordering::Less => {
                    beta.swap(j, j + 1);
                    neg = !neg;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    if beta.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let parts: Vec<u16> = beta.iter().enumerate().map(|(i, x)| (x - (n - 1 - i) as i64) as u16).filter(|&x| x > 0).collect();
    Some((Partition::new(parts).expect("straightened sequence is a partition"), neg))
}

/// For each μ with ≤ b rows and parts ≤ a, the unique λ in the a×b box with
/// ∂_w(π_λ(x)π_μ(x')) = ±1, together with that sign (true for −1).
pub fn pairing_duals(a: usize, b: usize) -> Vec<(Partition, Partition, bool)> {
    type Duals = Vec<(Partition, Partition, bool)>;
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Duals>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&(a, b)) {
        return v.clone();
    }
    let lambdas = Partition::in_box(a, b);
    let out: Vec<_> = Partition::in_box(b, a)
        .into_iter()
        .map(|mu| {
            let (lam, neg) = lambdas
                .iter()
                .find_map(|l| match pair_pushforward(l, &mu, a, b) {
                    Some((nu, neg)) if nu.is_empty() => Some((l.clone(), neg)),
                    _ => None,
                })
                .expect("every basis element has a dual");
            (mu, lam, neg)
        })
        .collect();
    cache.lock().expect("cache lock").insert((a, b), out.clone());
    out
}

/// Coefficients g_J ∈ Sym_N with t = Σ_J g_J·B_J, keyed by (λ^{(r−1)}, …, λ^{(1)}).
pub fn decompose(t: &BlockTensor) -> BTreeMap<Vec<Partition>, SchurPoly> {
    let n: usize = t.sizes.iter().sum();
    let mut out = BTreeMap::new();
    let r = t.sizes.len();
    if r <= 1 {
        let mut f = SchurPoly::zero(Some(n), t.p);
        for (key, c) in &t.terms {
            f.add_term(key.first().cloned().unwrap_or_else(Partition::empty), *c);
        }
        if !f.is_zero() {
            out.insert(Vec::new(), f);
        }
        return out;
    }
    let (a, b) = (t.sizes[r - 2], t.sizes[r - 1]);
    let mut merged_sizes = t.sizes[..r - 2].to_vec();
    merged_sizes.push(a + b);
    for (mu, lam, sign) in pairing_duals(a, b) {
        let mut g = BlockTensor::zero(&merged_sizes, t.p);
        for (key, c) in &t.terms {
            for (kappa, m) in lr_product(&key[r - 2], &lam, Some(a)) {
                if let Some((nu, neg)) = pair_pushforward(&kappa, &key[r - 1], a, b) {
                    let mut k2 = key[..r - 2].to_vec();
                    k2.push(nu);
                    let coef = t.p.mul(*c, (m % t.p.get() as u64) as u32);
                    g.add_term(k2, if neg != sign { t.p.neg(coef) } else { coef });
                }
            }
        }
        for (sub, f) in decompose(&g) {
            let mut key = vec![mu.clone()];
            key.extend(sub);
            out.insert(key, f);
        }
    }
    out
}

/// Sym_{c_1} ⊗ … ⊗ Sym_{c_r} with a twisted differential ∂(v) = Σ t_k e_1(x_k) v
/// on its generator v, free over Sym_N on the basis
/// B_J = Π_k π_{λ^{(k)}}(x_{k+1}, …, x_r), λ^{(k)} ∈ P(c_{k+1}+…+c_r, c_k).
#[derive(Clone, Debug)]
pub struct BlockModule {
    p: Prime,
    sizes: Vec<usize>,
    twists: Vec<u32>,
    basis: Vec<Vec<Partition>>,
    degrees: Vec<i64>,
    index: HashMap<Vec<Partition>, usize>,
    diff: super::PDGMatrix,
}

impl BlockModule {
    pub fn new(sizes: &[usize], twists: &[i64], p: Prime) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) || twists.len() != sizes.len() {
            return Err(Error::InvalidParameter(format!("block sizes {sizes:?} with twists {twists:?}")));
        }
        let twists: Vec<u32> = twists.iter().map(|&t| p.reduce(t)).collect();
        let r = sizes.len();
        let mut basis: Vec<Vec<Partition>> = vec![Vec::new()];
        for k in (0..r - 1).rev() {
            let below: usize = sizes[k + 1..].iter().sum();
            let choices = Partition::in_box(below, sizes[k]);
            basis = basis
                .into_iter()
                .flat_map(|pre| {
                    choices.iter().map(move |l| {
                        let mut v = pre.clone();
                        v.push(l.clone());
                        v
                    })
                })
                .collect();
        }
        let gen: i64 = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).map(|(i, j)| (sizes[i] * sizes[j]) as i64).sum();
        let mut order: Vec<(i64, Vec<Partition>)> =
            basis.into_iter().map(|j| (2 * j.iter().map(Partition::size).sum::<usize>() as i64 - gen, j)).collect();
        order.sort();
        let degrees: Vec<i64> = order.iter().map(|(d, _)| *d).collect();
        let basis: Vec<Vec<Partition>> = order.into_iter().map(|(_, j)| j).collect();
        let index = basis.iter().enumerate().map(|(i, j)| (j.clone(), i)).collect();
        let n: usize = sizes.iter().sum();
        let mut module = BlockModule {
            p,
            sizes: sizes.to_vec(),
            twists,
            basis,
            degrees: degrees.clone(),
            index,
            diff: super::PDGMatrix::zero(n, degrees, p),
        };
        module.diff = module.matrix_of(|t| Ok(t.diff(&module.twists)))?;
        Ok(module)
    }

    /// S_{a,b} = Sym_a ⊗ Sym_b with ∂(v_{a,b}) = −a e_1(x') v_{a,b}.
    pub fn grassmannian(a: usize, b: usize, p: Prime) -> Result<Self> {
        Self::new(&[a, b], &[0, -(a as i64)], p)
    }

    /// Pol_n as a module over Sym_n.
    pub fn polynomial(n: usize, p: Prime) -> Result<Self> {
        Self::new(&vec![1; n], &vec![0; n], p)
    }

    /// Pol_n with ∂(1) = Σ_i (i−1) x_i, whose endomorphism algebra carries the
    /// nilHecke differential ∂(δ_i) = −x_i δ_i − δ_i x_{i+1}.
    pub fn nilhecke_polynomial(n: usize, p: Prime) -> Result<Self> {
        let twists: Vec<i64> = (0..n as i64).collect();
        Self::new(&vec![1; n], &twists, p)
    }

    /// S_{(p^a)} = Sym_p^{⊗a} with the thick-calculus twists −p·(k−1) ≡ 0.
    pub fn thick(a: usize, p: Prime) -> Result<Self> {
        let pu = p.get() as usize;
        let twists: Vec<i64> = (0..a).map(|k| -((k * pu) as i64)).collect();
        Self::new(&vec![pu; a], &twists, p)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    /// N, the number of variables of the base ring Sym_N.
    pub fn total_vars(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Partition>] {
        &self.basis
    }

    /// Internal degrees of the B_J v, generator at −Σ_{k<l} c_k c_l.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// The differential in the basis: ∂(B_j v) = Σ_i D_ij B_i v.
    pub fn diff_matrix(&self) -> &super::PDGMatrix {
        &self.diff
    }

    /// B_J as an explicit element of the block tensor product.
    pub fn expand(&self, j: usize) -> Result<BlockTensor> {
        let r = self.sizes.len();
        let mut out = BlockTensor::one(&self.sizes, self.p);
        for (pos, lam) in self.basis[j].iter().enumerate() {
            let k = r - 2 - pos;
            out = out.mul(&BlockTensor::split(lam, &self.sizes, k + 1, self.p)?);
        }
        Ok(out)
    }

    /// Coordinates of t over Sym_N in the basis B_J.
    pub fn coordinates(&self, t: &BlockTensor) -> Result<BTreeMap<usize, SchurPoly>> {
        decompose(t)
            .into_iter()
            .map(|(key, f)| {
                self.index
                    .get(&key)
                    .map(|&i| (i, f))
                    .ok_or_else(|| Error::Internal(format!("decomposition produced a non-basis key {key:?}")))
            })
            .collect()
    }

    /// Σ_J g_J B_J as a block tensor, splitting each g_J ∈ Sym_N over the blocks.
    pub fn recombine(&self, coords: &BTreeMap<usize, SchurPoly>) -> Result<BlockTensor> {
        let mut out = BlockTensor::zero(&self.sizes, self.p);
        for (j, f) in coords {
            let bj = self.expand(*j)?;
            for (lam, c) in f.terms() {
                out = out.add(&BlockTensor::split(lam, &self.sizes, 0, self.p)?.mul(&bj).scale(*c));
            }
        }
        Ok(out)
    }

    /// The matrix of a Sym_N-linear operator given on block tensors.
    pub fn matrix_of<F>(&self, op: F) -> Result<super::PDGMatrix>
    where
        F: Fn(&BlockTensor) -> Result<BlockTensor> + Sync,
    {
        use rayon::prelude::*;
        let cols: Vec<Result<BTreeMap<usize, SchurPoly>>> =
            (0..self.rank()).into_par_iter().map(|j| self.coordinates(&op(&self.expand(j)?)?)).collect();
        let mut m = super::PDGMatrix::zero(self.total_vars(), self.degrees.clone(), self.p);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, f) in col? {
                m.set(i, j, f);
            }
        }
        Ok(m)
    }

    /// Graded rank over Sym_N as a Laurent polynomial in v, deg x_i = 2 ↔ v².
    pub fn graded_rank(&self) -> crate::LaurentPoly {
        let mut out = <crate::LaurentPoly as num_traits::Zero>::zero();
        for d in &self.degrees {
            out.add_term(*d, num_bigint::BigInt::from(1));
        }
        out
    }
}
