//! Thick calculus: S_{(p^a)}, the thickening map Θ⁺ and its checks.

use std::collections::BTreeMap;

use super::end::{end_complex, end_coordinates, end_slash_dims_factored};
use super::{BlockModule, BlockTensor, EndAlgebra, PDGMatrix};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::symfunc::{lima_partitions, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ThickGenerator {
    /// A dot on strand k (1-based).
    Dot(usize),
    /// The crossing of strands k and k+1 (1-based).
    Crossing(usize),
}

pub fn grass_module(a: usize, b: usize, p: Prime) -> Result<BlockModule> {
    BlockModule::grassmannian(a, b, p)
}

/// The block-swap divided difference on S_{a,b} as a matrix in its basis.
pub fn thick_crossing(a: usize, b: usize, p: Prime) -> Result<PDGMatrix> {
    grass_module(a, b, p)?.matrix_of(|t| t.block_crossing(0))
}

/// END_{Sym_{ap}}(S_{(p^a)}) with its distinguished generators.
#[derive(Clone, Debug)]
pub struct ThickAlgebra {
    a: usize,
    end: EndAlgebra,
}

impl ThickAlgebra {
    pub fn new(a: usize, p: Prime) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("thick algebra needs a ≥ 1".into()));
        }
        Ok(ThickAlgebra { a, end: EndAlgebra::of_module(BlockModule::thick(a, p)?)? })
    }

    pub fn strands(&self) -> usize {
        self.a
    }

    pub fn end(&self) -> &EndAlgebra {
        &self.end
    }

    pub fn module(&self) -> &BlockModule {
        self.end.module()
    }

    /// Multiplication by e_p(x_k)^p = π_{(p^p)}(x_k).
    pub fn dot(&self, k: usize) -> Result<PDGMatrix> {
        if k == 0 || k > self.a {
            return Err(Error::InvalidParameter(format!("dot on strand {k} of {}", self.a)));
        }
        let m = self.module();
        let pu = m.prime().get() as usize;
        let mut parts = vec![Partition::empty(); self.a];
        parts[k - 1] = Partition::rectangle(pu, pu as u16);
        let g = BlockTensor::basis(parts, m.sizes(), m.prime());
        m.matrix_of(|t| Ok(t.mul(&g)))
    }

    pub fn crossing(&self, k: usize) -> Result<PDGMatrix> {
        if k == 0 || k >= self.a {
            return Err(Error::InvalidParameter(format!("crossing {k} of {} strands", self.a)));
        }
        self.module().matrix_of(|t| t.block_crossing(k - 1))
    }

    pub fn theta_plus(&self, g: ThickGenerator) -> Result<PDGMatrix> {
        match g {
            ThickGenerator::Dot(k) => self.dot(k),
            ThickGenerator::Crossing(k) => self.crossing(k),
        }
    }
}

/// Θ⁺ of a nilHecke generator, as an endomorphism of S_{(p^a)}.
pub fn theta_plus(g: ThickGenerator, a: usize, p: Prime) -> Result<PDGMatrix> {
    ThickAlgebra::new(a, p)?.theta_plus(g)
}

/// Graded dimensions of NH_a ≅ Mat_{a!}(Sym_a) with every degree multiplied
/// by `scale`, on the degrees lo..=hi.
pub fn nh_hilbert(a: usize, scale: i64, lo: i64, hi: i64) -> BTreeMap<i64, usize> {
    let mut lengths: BTreeMap<i64, usize> = BTreeMap::new();
    lengths.insert(0, 1);
    for k in 1..a as i64 {
        let mut next = BTreeMap::new();
        for (l, c) in &lengths {
            for extra in 0..=k {
                *next.entry(l + extra).or_insert(0) += c;
            }
        }
        lengths = next;
    }
    let mut shifts: BTreeMap<i64, usize> = BTreeMap::new();
    for (l1, c1) in &lengths {
        for (l2, c2) in &lengths {
            *shifts.entry(2 * scale * (l1 - l2)).or_insert(0) += c1 * c2;
        }
    }
    let span = (hi - lo).max(0) + 2 * scale * (a * a) as i64;
    let mut sym: Vec<usize> = vec![0; (span / 2 + 1) as usize];
    sym[0] = 1;
    for j in 1..=a {
        let step = (scale * j as i64) as usize;
        for e in step..sym.len() {
            sym[e] += sym[e - step];
        }
    }
    (lo..=hi)
        .filter(|d| d.rem_euclid(2) == 0)
        .map(|d| {
            let total = shifts
                .iter()
                .filter_map(|(s, c)| {
                    let e = d - s;
                    (e >= 0 && e % 2 == 0).then(|| c * sym.get((e / 2) as usize).copied().unwrap_or(0))
                })
                .sum();
            (d, total)
        })
        .collect()
}

/// Results of the four thick nilHecke sub-checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThickReport {
    pub a: usize,
    pub p: u32,
    pub cap: i64,
    pub crossing_squared: bool,
    pub braid: bool,
    pub dot_slide: bool,
    pub hilbert: bool,
    pub valid: (i64, i64),
    pub computed: BTreeMap<i64, usize>,
    pub expected: BTreeMap<i64, usize>,
    pub failures: Vec<String>,
}

impl ThickReport {
    pub fn passed(&self) -> bool {
        self.crossing_squared && self.braid && self.dot_slide && self.hilbert
    }
}

/// In END(S_{(p^a)}): crossing² = 0, the braid relation, both dot-slide
/// relations modulo Im ∂^{p−1}, and H_/ against NH_a with degrees scaled by p².
pub fn thick_nilhecke_check(a: usize, p: Prime, cap: i64) -> Result<ThickReport> {
    let pu = p.get() as usize;
    if a * pu > 6 {
        return Err(Error::SizeGuard(format!("a·p = {} exceeds 6", a * pu)));
    }
    let alg = ThickAlgebra::new(a, p)?;
    let m = alg.module();
    let id = alg.end().identity();
    let crossings: Vec<PDGMatrix> = (1..a).map(|k| alg.crossing(k)).collect::<Result<_>>()?;
    let dots: Vec<PDGMatrix> = (1..=a).map(|k| alg.dot(k)).collect::<Result<_>>()?;
    let mut failures = Vec::new();

    let mut crossing_squared = true;
    for (k, c) in crossings.iter().enumerate() {
        if !c.mul(c)?.is_zero() {
            crossing_squared = false;
            failures.push(format!("crossing {} squared is nonzero", k + 1));
        }
    }

    let mut braid = true;
    for k in 0..crossings.len().saturating_sub(1) {
        let (s, t) = (&crossings[k], &crossings[k + 1]);
        if s.mul(t)?.mul(s)? != t.mul(s)?.mul(t)? {
            braid = false;
            failures.push(format!("braid relation fails at {}", k + 1));
        }
    }

    let mut dot_slide = true;
    if !crossings.is_empty() {
        let reach = 2 * (pu as i64 - 1);
        let complex = end_complex(m, -reach, 0)?;
        for (k, c) in crossings.iter().enumerate() {
            let sides = [
                dots[k].mul(c)?.sub(&c.mul(&dots[k + 1])?)?,
                c.mul(&dots[k])?.sub(&dots[k + 1].mul(c)?)?,
            ];
            for (which, lhs) in sides.iter().enumerate() {
                let delta = lhs.sub(&id)?;
                if delta.is_zero() {
                    continue;
                }
                if !delta.is_homogeneous() || delta.degree() != Some(0) {
                    dot_slide = false;
                    failures.push(format!("dot-slide {} at crossing {} is not of degree 0", which + 1, k + 1));
                    continue;
                }
                let (d, v) = end_coordinates(&complex, &delta)?;
                if !complex.in_image_of_power(d, pu - 1, &v) {
                    dot_slide = false;
                    failures.push(format!("dot-slide {} at crossing {} fails modulo coboundaries", which + 1, k + 1));
                }
            }
        }
    }

    let dims = end_slash_dims_factored(m, cap)?;
    let (lo, hi) = dims.valid;
    let computed = dims.per_k[0].support();
    let expected: BTreeMap<i64, usize> = nh_hilbert(a, (pu * pu) as i64, lo, hi).into_iter().filter(|(_, c)| *c > 0).collect();
    let higher_vanish = dims.per_k.iter().skip(1).all(|h| h.is_zero());
    let hilbert = higher_vanish && computed == expected;
    if !hilbert {
        failures.push("slash cohomology differs from the scaled nilHecke dimensions".into());
    }

    Ok(ThickReport {
        a,
        p: p.get(),
        cap,
        crossing_squared,
        braid,
        dot_slide,
        hilbert,
        valid: (lo, hi),
        computed,
        expected,
        failures,
    })
}

/// H_/(END(S_{p,p})) against a 2×2 matrix algebra over k[e_p^p, e_{2p}^p].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalityReport {
    pub p: u32,
    pub cap: i64,
    pub valid: (i64, i64),
    pub computed: BTreeMap<i64, usize>,
    pub expected: BTreeMap<i64, usize>,
    pub higher_vanish: bool,
}

impl FormalityReport {
    pub fn passed(&self) -> bool {
        self.higher_vanish && self.computed == self.expected
    }
}

pub fn end_formality_check(p: Prime, cap: i64) -> Result<FormalityReport> {
    let pu = p.get() as usize;
    let m = BlockModule::grassmannian(pu, pu, p)?;
    let dims = end_slash_dims_factored(&m, cap)?;
    let (lo, hi) = dims.valid;
    let classes: Vec<i64> = lima_partitions(1, 1, p).iter().map(|l| 2 * l.size() as i64).collect();
    let step = 2 * (pu * pu) as i64;
    let mut expected = BTreeMap::new();
    for di in &classes {
        for dj in &classes {
            for e1 in 0.. {
                let base = di - dj + e1 * step;
                if base > hi {
                    break;
                }
                for e2 in 0.. {
                    let d = base + 2 * e2 * step;
                    if d > hi {
                        break;
                    }
                    if d >= lo {
                        *expected.entry(d).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    Ok(FormalityReport {
        p: p.get(),
        cap,
        valid: (lo, hi),
        computed: dims.per_k[0].support(),
        expected,
        higher_vanish: dims.per_k.iter().skip(1).all(|h| h.is_zero()),
    })
}
