//! Endomorphism p-DG algebras END_{Sym_N}(M) of block modules.

use std::collections::{BTreeMap, HashMap};

use super::{BlockModule, PDGMatrix};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::pcomplex::{tensor_slash_dims, PComplex, SlashDims, Window};
use crate::symfunc::{box_moves, lr_product, Partition, SchurComplex};

/// π_λ·E_ij, the basis of END as a vector space over F_p.
pub type EndLabel = (u32, u32, Partition);

const MAX_END_SIZE: usize = 400;

/// END_{Sym_{a+b}}(S_{a,b}) together with its module.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    module: BlockModule,
}

pub fn end_algebra(a: usize, b: usize, p: Prime) -> Result<EndAlgebra> {
    let size = crate::cyclotomic::binomial((a + b) as u64, a as u64);
    if size > num_bigint::BigInt::from(MAX_END_SIZE) {
        return Err(Error::SizeGuard(format!("matrix size C({}, {a}) = {size} exceeds {MAX_END_SIZE}", a + b)));
    }
    Ok(EndAlgebra { module: BlockModule::grassmannian(a, b, p)? })
}

impl EndAlgebra {
    pub fn of_module(module: BlockModule) -> Result<Self> {
        if module.rank() > MAX_END_SIZE {
            return Err(Error::SizeGuard(format!("module rank {} exceeds {MAX_END_SIZE}", module.rank())));
        }
        Ok(EndAlgebra { module })
    }

    pub fn module(&self) -> &BlockModule {
        &self.module
    }

    pub fn size(&self) -> usize {
        self.module.rank()
    }

    pub fn identity(&self) -> PDGMatrix {
        PDGMatrix::identity(self.module.total_vars(), self.module.degrees().to_vec(), self.module.prime())
    }

    pub fn unit(&self, i: usize, j: usize) -> PDGMatrix {
        PDGMatrix::unit(i, j, self.module.total_vars(), self.module.degrees().to_vec(), self.module.prime())
    }

    pub fn diff(&self, t: &PDGMatrix) -> Result<PDGMatrix> {
        t.diff(self.module.diff_matrix())
    }

    pub fn complex(&self, cap: i64) -> Result<PComplex<EndLabel>> {
        end_complex(&self.module, end_lo(&self.module), cap)
    }
}

fn end_lo(m: &BlockModule) -> i64 {
    let d = m.degrees();
    d.first().copied().unwrap_or(0) - d.last().copied().unwrap_or(0)
}

/// END_{Sym_N}(M) restricted to the degrees [lo, hi]: the lower cut is a
/// subcomplex, the upper cut a quotient.
pub fn end_complex(m: &BlockModule, lo: i64, hi: i64) -> Result<PComplex<EndLabel>> {
    let p = m.prime();
    let n = m.total_vars();
    let deg = m.degrees();
    let rank = m.rank();
    let floor = end_lo(m);
    let window = Window { lo: lo.max(floor), hi, lo_complete: lo <= floor, hi_complete: false };
    let mut basis: BTreeMap<i64, Vec<EndLabel>> = BTreeMap::new();
    let mut sym_cache: HashMap<usize, Vec<Partition>> = HashMap::new();
    for i in 0..rank {
        for j in 0..rank {
            let shift = deg[i] - deg[j];
            let mut d = shift;
            while d <= hi {
                if d >= window.lo {
                    let size = ((d - shift) / 2) as usize;
                    let parts = sym_cache.entry(size).or_insert_with(|| Partition::all_of(size, Some(n), None));
                    basis.entry(d).or_default().extend(parts.iter().map(|l| (i as u32, j as u32, l.clone())));
                }
                d += 2;
            }
        }
    }
    let dm = m.diff_matrix();
    let mut by_col: Vec<Vec<(usize, &crate::symfunc::SchurPoly)>> = vec![Vec::new(); rank];
    let mut by_row: Vec<Vec<(usize, &crate::symfunc::SchurPoly)>> = vec![Vec::new(); rank];
    for ((r, c), f) in dm.entries() {
        by_col[*c].push((*r, f));
        by_row[*r].push((*c, f));
    }
    let minus = p.neg(1);
    PComplex::build(p, window, basis, |(i, j, lam)| {
        let (i, j) = (*i as usize, *j as usize);
        let mut out = Vec::new();
        for (mu, c) in box_moves(lam, p, 0, Some(n), None) {
            out.push(((i as u32, j as u32, mu), c));
        }
        for (k, f) in &by_col[i] {
            for (nu, c) in f.terms() {
                for (rho, m) in lr_product(nu, lam, Some(n)) {
                    out.push(((*k as u32, j as u32, rho), p.mul(*c, p.reduce(m as i64))));
                }
            }
        }
        for (k, f) in &by_row[j] {
            for (nu, c) in f.terms() {
                for (rho, m) in lr_product(lam, nu, Some(n)) {
                    out.push(((i as u32, *k as u32, rho), p.mul(minus, p.mul(*c, p.reduce(m as i64)))));
                }
            }
        }
        out
    })
}

/// Coordinates of a homogeneous matrix in an END complex.
pub fn end_coordinates(c: &PComplex<EndLabel>, t: &PDGMatrix) -> Result<(i64, crate::linalg::SparseVec)> {
    let d = t.degree().unwrap_or(0);
    let terms: Vec<(EndLabel, u32)> = t
        .entries()
        .iter()
        .flat_map(|((i, j), f)| f.terms().iter().map(move |(l, x)| ((*i as u32, *j as u32, l.clone()), *x)))
        .collect();
    let v = c.coordinates(d, &terms).ok_or_else(|| Error::WindowTooSmall(format!("degree {d} outside the END window")))?;
    Ok((d, v))
}

/// The scalar part W = ⊕ F_p B_J when the module differential has constant
/// coefficients, so that M ≅ Sym_N ⊗ W as p-complexes.
pub fn scalar_complex(m: &BlockModule) -> Result<PComplex<usize>> {
    let dm = m.diff_matrix();
    if !dm.is_scalar() {
        return Err(Error::Precondition("module differential has non-constant coefficients".into()));
    }
    let deg = m.degrees();
    let mut basis: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (j, d) in deg.iter().enumerate() {
        basis.entry(*d).or_default().push(j);
    }
    let mut cols: Vec<Vec<(usize, u32)>> = vec![Vec::new(); m.rank()];
    for ((i, j), f) in dm.entries() {
        cols[*j].push((*i, f.coeff(&Partition::empty())));
    }
    let window = Window::complete(deg[0], *deg.last().expect("nonempty basis"));
    PComplex::build(m.prime(), window, basis, |j| cols[*j].clone())
}

/// H_/ of END_{Sym_N}(M) ≅ Sym_N ⊗ W ⊗ W^* from string counts, truncated above `cap`.
pub fn end_slash_dims_factored(m: &BlockModule, cap: i64) -> Result<SlashDims> {
    let w = scalar_complex(m)?;
    let end_w = w.tensor(&w.dual())?;
    let sym_cap = cap - end_lo(m);
    let sym = SchurComplex::Sym { n: Some(m.total_vars()) }.build(m.prime(), Some(sym_cap))?;
    tensor_slash_dims(&sym.string_counts(), &end_w.string_counts())
}

/// H_/ of END_{Sym_N}(M) by direct elimination, truncated above `cap`.
pub fn end_slash_dims(m: &BlockModule, cap: i64) -> Result<SlashDims> {
    Ok(end_complex(m, end_lo(m), cap)?.slash_dims())
}

/// Whether NH_p ≅ END_{Sym_p}(Pol_p), with the differential induced by
/// `BlockModule::nilhecke_polynomial`, has vanishing slash cohomology on the
/// valid part of the window truncated above `cap`.
pub fn nh_acyclicity_check(p: Prime, cap: i64) -> Result<bool> {
    let m = BlockModule::nilhecke_polynomial(p.get() as usize, p)?;
    let min_cap = end_lo(&m).abs() + 4 * (p.get() as i64 - 1);
    if cap < min_cap {
        return Err(Error::WindowTooSmall(format!("cap {cap} below {min_cap}")));
    }
    Ok(end_slash_dims(&m, cap)?.is_zero())
}
