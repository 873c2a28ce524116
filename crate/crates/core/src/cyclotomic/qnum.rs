use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Cyclotomic, Laurent, Ring};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// The quantum integer [n] = (v^n − v^{−n})/(v − v^{−1}).
pub fn qint<T: Ring>(n: i64) -> Laurent<T> {
    let sign = if n < 0 { -T::one() } else { T::one() };
    let m = n.abs();
    Laurent::from_terms((0..m).map(|i| (m - 1 - 2 * i, sign.clone())))
}

/// Quantum binomial by the Pascal recursion, without memoization.
pub fn qbinom_with<T: Ring>(m: u64, k: u64) -> Laurent<T> {
    if k > m {
        return Laurent::zero();
    }
    let mut row: Vec<Laurent<T>> = vec![Laurent::one()];
    for n in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        for j in 0..=n.min(k) {
            let keep = if j < n { row[j as usize].shift(j as i64) } else { Laurent::zero() };
            let step = if j > 0 { row[j as usize - 1].shift(j as i64 - n as i64) } else { Laurent::zero() };
            next.push(&keep + &step);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

type Memo = RwLock<HashMap<(u64, u64), Laurent<BigInt>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn qbinom_memo(m: u64, k: u64) -> Laurent<BigInt> {
    if k > m {
        return Laurent::zero();
    }
    if k == 0 || k == m {
        return Laurent::one();
    }
    if let Some(hit) = memo().read().expect("qbinom memo poisoned").get(&(m, k)) {
        return hit.clone();
    }
    let value = &qbinom_memo(m - 1, k).shift(k as i64) + &qbinom_memo(m - 1, k - 1).shift(k as i64 - m as i64);
    memo().write().expect("qbinom memo poisoned").insert((m, k), value.clone());
    value
}

/// The quantum binomial [m choose k] for 0 ≤ k ≤ m.
pub fn qbinom(m: i64, k: i64) -> Result<Laurent<BigInt>> {
    if k < 0 || k > m {
        return Err(Error::InvalidParameter(format!("qbinom({m}, {k}) needs 0 <= k <= m")));
    }
    Ok(qbinom_memo(m as u64, k as u64))
}

/// [m choose t] = [m][m−1]⋯[m−t+1]/[t]! for any integer m and t ≥ 0.
pub fn qbinom_general(m: i64, t: u64) -> Laurent<BigInt> {
    if m >= 0 {
        qbinom_memo(m as u64, t)
    } else {
        let value = qbinom_memo((-m) as u64 + t - 1, t);
        if t % 2 == 1 {
            -value
        } else {
            value
        }
    }
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The canonical base change v ↦ q.
pub fn to_op<T: Ring>(f: &Laurent<T>, p: Prime) -> Cyclotomic<T> {
    Cyclotomic::from_laurent(f, p)
}

/// The base change ρ: v ↦ q^p for odd p and v ↦ 1 for p = 2.
pub fn rho<T: Ring>(f: &Laurent<T>, p: Prime) -> Cyclotomic<T> {
    if p.get() == 2 {
        Cyclotomic::from_int(p, 0).try_add(&constant(f.eval_one(), p)).expect("same prime")
    } else {
        Cyclotomic::from_laurent(&f.substitute_power(p.get() as i64), p)
    }
}

fn constant<T: Ring>(c: T, p: Prime) -> Cyclotomic<T> {
    Cyclotomic::from_exponents(p, [(0, c)])
}

/// The expected value of [(a+b)p choose ap] in O_p, namely
/// q^{abp²}·C(a+b, a), which equals ρ([a+b choose a]).
pub fn binom_reduction_rhs(a: u64, b: u64, p: Prime) -> Cyclotomic<BigInt> {
    let pp = p.get() as i64;
    let c = binomial(a + b, a);
    Cyclotomic::from_exponents(p, [((a * b) as i64 * pp * pp, c)])
}

pub fn binom_reduction_check(a: u64, b: u64, p: Prime) -> bool {
    let n = p.get() as u64;
    let lhs = to_op(&qbinom_memo((a + b) * n, a * n), p);
    lhs == binom_reduction_rhs(a, b, p) && lhs == rho(&qbinom_memo(a + b, a), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    type L = Laurent<BigInt>;

    fn lp(terms: &[(i64, i64)]) -> L {
        L::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn quantum_integers() {
        assert!(qint::<BigInt>(0).is_zero());
        assert_eq!(qint::<BigInt>(3), lp(&[(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(qint::<BigInt>(-2), lp(&[(1, -1), (-1, -1)]));
        for n in -10..10 {
            assert_eq!(qint::<BigInt>(n).eval_one(), BigInt::from(n));
        }
    }

    #[test]
    fn memo_matches_plain_pascal() {
        for m in 0..14u64 {
            for k in 0..=m {
                assert_eq!(qbinom_memo(m, k), qbinom_with::<BigInt>(m, k));
            }
        }
    }

    #[test]
    fn generalized_binomial_matches_product_formula() {
        for m in -6i64..7 {
            for t in 0..5u64 {
                let mut num = L::one();
                for i in 0..t as i64 {
                    num = &num * &qint::<BigInt>(m - i);
                }
                let mut den = L::one();
                for i in 1..=t as i64 {
                    den = &den * &qint::<BigInt>(i);
                }
                assert_eq!(num.div_exact(&den).unwrap(), qbinom_general(m, t), "m={m} t={t}");
            }
        }
    }

    #[test]
    fn invalid_range() {
        assert!(qbinom(2, 3).is_err());
        assert!(qbinom(2, -1).is_err());
    }
}
