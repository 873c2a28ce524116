//! Batch checks of the Frobenius map and of the K₀ symbol identity.

use rayon::prelude::*;

use super::ring::Op;
use super::udot::{frobenius, frobenius_section, udot_mult, CBWord, UdotElem};
use crate::cyclotomic::binomial;
use crate::error::Result;
use crate::fp::Prime;
use crate::symfunc::{lima_partitions, SchurComplex};
use crate::CycElem;

/// Canonical words with a, b ≤ max_ab and |n| ≤ max_weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ranges {
    pub max_ab: u64,
    pub max_weight: i64,
}

impl Ranges {
    pub fn new(max_ab: u64, max_weight: i64) -> Self {
        Ranges { max_ab, max_weight }
    }

    /// Every canonical word in range: for each (a, b, n) the single
    /// canonical shape.
    pub fn words(&self) -> Vec<CBWord> {
        if self.max_weight < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for a in 0..=self.max_ab {
            for b in 0..=self.max_ab {
                for n in -self.max_weight..=self.max_weight {
                    out.push(CBWord::new(a, b, n));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn collect(results: Vec<(usize, Option<String>)>) -> Self {
        let checked = results.iter().map(|r| r.0).sum();
        let failure = results.into_iter().find_map(|r| r.1);
        CheckReport { checked, failure }
    }
}

fn product(x: CBWord, y: CBWord, p: Prime) -> Result<UdotElem<Op>> {
    udot_mult(&UdotElem::word(x, Op(p)), &UdotElem::word(y, Op(p)))
}

/// Fr(x·y) = Fr(x)·Fr(y) for every composable pair of canonical words.
pub fn frobenius_hom_check(p: Prime, ranges: Ranges) -> Result<CheckReport> {
    let words = ranges.words();
    let results = words
        .par_iter()
        .map(|x| -> Result<(usize, Option<String>)> {
            let mut checked = 0;
            for y in words.iter().filter(|y| y.out_weight() == x.n) {
                checked += 1;
                let lhs = frobenius(&product(*x, *y, p)?);
                let fx = frobenius(&UdotElem::word(*x, Op(p)));
                let fy = frobenius(&UdotElem::word(*y, Op(p)));
                let rhs = udot_mult(&fx, &fy)?;
                if lhs != rhs {
                    return Ok((checked, Some(format!("x = {x}, y = {y}: Fr(xy) = {lhs}, Fr(x)Fr(y) = {rhs}"))));
                }
            }
            Ok((checked, None))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::collect(results))
}

/// Fr(z·u·z′) = 0 for u ∈ {E1_n, F1_n} and canonical words z, z′.
pub fn kernel_check(p: Prime, ranges: Ranges) -> Result<CheckReport> {
    let words = ranges.words();
    let mut gens = Vec::new();
    for n in -ranges.max_weight..=ranges.max_weight {
        gens.push(CBWord::new(1, 0, n));
        gens.push(CBWord::new(0, 1, n));
    }
    let results = gens
        .par_iter()
        .map(|u| -> Result<(usize, Option<String>)> {
            let mut checked = 0;
            for z in words.iter().filter(|z| z.n == u.out_weight()) {
                let zu = product(*z, *u, p)?;
                for z2 in words.iter().filter(|z2| z2.out_weight() == u.n) {
                    checked += 1;
                    let image = frobenius(&udot_mult(&zu, &UdotElem::word(*z2, Op(p)))?);
                    if !image.is_zero() {
                        return Ok((checked, Some(format!("z = {z}, u = {u}, z' = {z2}: Fr(zuz') = {image}"))));
                    }
                }
            }
            Ok((checked, None))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::collect(results))
}

/// Fr(section(w)) = w for every canonical word w in range.
pub fn section_check(p: Prime, ranges: Ranges) -> CheckReport {
    let words = ranges.words();
    let failure = words.iter().find_map(|w| {
        let x = UdotElem::word(*w, super::ring::Rho(p));
        let back = frobenius(&frobenius_section(&x));
        (back != x).then(|| format!("{w}: Fr(section) = {back}"))
    });
    CheckReport { checked: words.len(), failure }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Report {
    pub a: usize,
    pub b: usize,
    pub p: Prime,
    /// Σ dim H_/ in each degree of V_{a,b}.
    pub classes: Vec<(i64, usize)>,
    /// q^{−abp²}·char in O_p.
    pub value: CycElem,
    /// q^{−2abp²}·char in O_p: the same character read with the generator
    /// placed in degree −abp².
    pub shifted_value: CycElem,
    pub expected: CycElem,
    /// Whether the classes sit exactly at the Lima degrees 2|λ|.
    pub lima_degrees: bool,
}

impl K0Report {
    pub fn passed(&self) -> bool {
        self.value == self.expected
    }

    pub fn shifted_passed(&self) -> bool {
        self.shifted_value == self.expected
    }
}

pub fn k0_symbol_report(a: usize, b: usize, p: Prime) -> Result<K0Report> {
    let complex = SchurComplex::V { a, b }.build(p, None)?;
    let dims = complex.slash_dims().combined();
    let classes: Vec<(i64, usize)> = dims.support().into_iter().collect();
    let mut chi = CycElem::zero(p);
    for (d, m) in &classes {
        chi = &chi + &(&CycElem::q_pow(p, *d) * &CycElem::from_int(p, *m as i64));
    }
    let shift = (a * b) as i64 * (p.get() as i64).pow(2);
    let mut lima: Vec<i64> = lima_partitions(b, a, p).iter().map(|l| 2 * l.size() as i64).collect();
    lima.sort_unstable();
    let mut found: Vec<i64> = classes.iter().flat_map(|(d, m)| std::iter::repeat_n(*d, *m)).collect();
    found.sort_unstable();
    let expected = i64::try_from(binomial((a + b) as u64, a as u64))
        .map(|c| CycElem::from_int(p, c))
        .map_err(|_| crate::Error::InvalidParameter(format!("C({}, {a}) overflows", a + b)))?;
    Ok(K0Report {
        a,
        b,
        p,
        value: &CycElem::q_pow(p, -shift) * &chi,
        shifted_value: &CycElem::q_pow(p, -2 * shift) * &chi,
        classes,
        expected,
        lima_degrees: lima == found,
    })
}

/// q^{−abp²}·(graded character of H_/(V_{a,b}) in O_p) = C(a+b, a).
pub fn k0_symbol_check(a: usize, b: usize, p: Prime) -> Result<bool> {
    Ok(k0_symbol_report(a, b, p)?.passed())
}
