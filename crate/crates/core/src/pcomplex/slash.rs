use std::collections::{BTreeMap, BTreeSet};

use super::{Label, PComplex};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::linalg::SparseVec;

/// Graded dimensions on a window [dmin, dmax]; degrees outside the window
/// are unknown rather than zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedDims {
    pub dims: BTreeMap<i64, usize>,
    pub window: (i64, i64),
}

impl GradedDims {
    pub fn get(&self, d: i64) -> Option<usize> {
        if d < self.window.0 || d > self.window.1 {
            None
        } else {
            Some(self.dims.get(&d).copied().unwrap_or(0))
        }
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.values().all(|&n| n == 0)
    }

    /// Nonzero entries only.
    pub fn support(&self) -> BTreeMap<i64, usize> {
        self.dims.iter().filter(|(_, n)| **n > 0).map(|(d, n)| (*d, *n)).collect()
    }
}

/// Dimensions of H_{/k} for k = 0, …, p−2 on the valid window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlashDims {
    pub p: Prime,
    pub valid: (i64, i64),
    pub per_k: Vec<GradedDims>,
}

impl SlashDims {
    pub fn hilbert(&self, k: usize) -> &GradedDims {
        &self.per_k[k]
    }

    pub fn total_at(&self, d: i64) -> usize {
        self.per_k.iter().map(|g| g.get(d).unwrap_or(0)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.per_k.iter().all(|g| g.is_zero())
    }

    /// Whether everything is concentrated in H_{/0}.
    pub fn concentrated_in_zero(&self) -> bool {
        self.per_k.iter().skip(1).all(|g| g.is_zero())
    }

    /// Σ_k dim H_{/k} per degree.
    pub fn combined(&self) -> GradedDims {
        let mut dims = BTreeMap::new();
        for g in &self.per_k {
            for (d, n) in &g.dims {
                *dims.entry(*d).or_insert(0) += n;
            }
        }
        GradedDims { dims, window: self.valid }
    }
}

/// Slash cohomology with homogeneous cocycle representatives, given as
/// coordinate vectors in the degreewise basis of the complex.
#[derive(Clone, Debug)]
pub struct SlashCohomology {
    pub dims: SlashDims,
    pub reps: Vec<BTreeMap<i64, Vec<SparseVec>>>,
}

fn report_degrees(window_lo: i64, valid: (i64, i64), stored: impl Iterator<Item = i64>) -> Vec<i64> {
    let parities: BTreeSet<i64> = stored.map(|d| (d - window_lo).rem_euclid(2)).collect();
    (valid.0..=valid.1).filter(|d| parities.contains(&(d - window_lo).rem_euclid(2))).collect()
}

impl<L: Label> PComplex<L> {
    /// Graded dimensions of every H_{/k} on the valid window, from the ranks
    /// of the powers of ∂: dim H_{/k}(d) = r_k(d) − r_{k+1}(d) − r_{p−1}(d − 2(p−k−1)).
    pub fn slash_dims(&self) -> SlashDims {
        let p = self.prime();
        let pu = p.get() as usize;
        let valid = self.window().valid_range(p);
        let ranks = self.all_ranks();
        let r = |d: i64, j: usize| ranks.get(&d).map_or(0, |v| v[j]);
        let degrees = report_degrees(self.window().lo, valid, self.degrees());
        let per_k = (0..pu - 1)
            .map(|k| {
                let dims = degrees
                    .iter()
                    .map(|&d| {
                        let back = d - 2 * (pu - k - 1) as i64;
                        (d, r(d, k) - r(d, k + 1) - r(back, pu - 1))
                    })
                    .collect();
                GradedDims { dims, window: valid }
            })
            .collect();
        SlashDims { p, valid, per_k }
    }

    /// Slash cohomology with representatives taken from a string
    /// decomposition: a string x, ∂x, …, ∂^{ℓ−1}x with ℓ < p contributes
    /// ∂^{ℓ−1−k}x to H_{/k}.
    pub fn slash_cohomology(&self) -> Result<SlashCohomology> {
        self.validate()?;
        let dims = self.slash_dims();
        let pu = self.prime().get() as usize;
        let mut reps: Vec<BTreeMap<i64, Vec<SparseVec>>> = vec![BTreeMap::new(); pu - 1];
        for s in self.string_decompose()? {
            let len = s.vectors.len();
            if len == pu {
                continue;
            }
            for (k, slot) in reps.iter_mut().enumerate().take(len) {
                let i = len - 1 - k;
                let d = s.start + 2 * i as i64;
                if d >= dims.valid.0 && d <= dims.valid.1 {
                    slot.entry(d).or_default().push(s.vectors[i].clone());
                }
            }
        }
        for (k, slot) in reps.iter().enumerate() {
            for (d, v) in slot {
                if dims.per_k[k].get(*d) != Some(v.len()) {
                    return Err(Error::Internal(format!("H_/{k} representatives disagree with ranks at degree {d}")));
                }
            }
        }
        Ok(SlashCohomology { dims, reps })
    }
}

/// Graded dimensions of the underlying space.
pub fn hilbert<L: Label>(c: &PComplex<L>) -> GradedDims {
    let w = c.window();
    let degrees = report_degrees(w.lo, (w.lo, w.hi), c.degrees());
    GradedDims { dims: degrees.into_iter().map(|d| (d, c.dim(d))).collect(), window: (w.lo, w.hi) }
}

/// Compares H_/(A ⊗ M) with H_{/0}(A) ⊗ H_/(M) degreewise. Fails with a
/// precondition error when H_/(A) is not concentrated in H_{/0}.
pub fn kunneth_check<L: Label, M: Label>(a: &PComplex<L>, m: &PComplex<M>) -> Result<bool> {
    let ha = a.slash_dims();
    if !ha.concentrated_in_zero() {
        return Err(Error::Precondition("H_/(A) has classes outside H_/0".into()));
    }
    let hm = m.slash_dims();
    let t = a.tensor(m)?;
    let ht = t.slash_dims();
    let (alo, ahi) = ha.valid;
    let (mlo, mhi) = hm.valid;
    let m_support: Vec<i64> = m.degrees().collect();
    let a_lo_free = a.window().lo_complete;
    for (k, g) in ht.per_k.iter().enumerate() {
        for (&d, &n) in &g.dims {
            let determined = m_support.iter().all(|&e| {
                let x = d - e;
                x <= ahi && (x >= alo || (a_lo_free && x < a.window().lo))
            }) && m_support.iter().all(|&e| e >= mlo && e <= mhi);
            if !determined {
                continue;
            }
            let expected: usize = hm.per_k[k]
                .dims
                .iter()
                .map(|(&e, &mk)| mk * ha.per_k[0].get(d - e).unwrap_or(0))
                .sum();
            if expected != n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
