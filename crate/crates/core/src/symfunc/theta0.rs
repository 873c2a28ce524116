use std::collections::BTreeMap;

use super::{Partition, SchurPoly};
use crate::error::Result;
use crate::fp::Prime;

/// A polynomial in formal variables e'_1, e'_2, …: exponent vector ↦
/// integer coefficient.
pub type EPrimePoly = BTreeMap<Vec<u32>, i64>;

/// e_{ip}^p as a Schur polynomial.
pub fn e_pow_p(i: usize, n: Option<usize>, p: Prime) -> Result<SchurPoly> {
    SchurPoly::basis(Partition::column(i * p.get() as usize), n, p).pow(p.get())
}

/// The thickening map on centers, e'_i ↦ e_{ip}^p.
pub fn theta0(g: &EPrimePoly, n: Option<usize>, p: Prime) -> Result<SchurPoly> {
    let mut out = SchurPoly::zero(n, p);
    for (exps, c) in g {
        let mut term = SchurPoly::one(n, p).scale(p.reduce(*c));
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = term.mult(&e_pow_p(i + 1, n, p)?.pow(e)?)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// The monomial e'_k as an `EPrimePoly` (e'_0 = 1).
pub fn e_prime(k: usize) -> EPrimePoly {
    let mut exps = vec![0; k];
    if k > 0 {
        exps[k - 1] = 1;
    }
    [(exps, 1)].into_iter().collect()
}
