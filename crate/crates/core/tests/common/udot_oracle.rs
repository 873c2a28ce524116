//! Brute-force U̇(sl_2): words in undivided E and F are pushed into the
//! form E^A F^B 1_n using nothing but EF1_m − FE1_m = [m]1_m, and divided
//! powers are handled by clearing quantum factorials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pdg_core::qgroup::{CBWord, Shape};
use pdg_core::LaurentPoly;

/// Σ c·E^A F^B 1_n for a fixed n, keyed by (A, B).
pub type Undivided = BTreeMap<(u64, u64), LaurentPoly>;

pub fn qint(n: i64) -> LaurentPoly {
    let m = n.abs();
    let mut out = LaurentPoly::zero();
    for k in 0..m {
        out.add_term(m - 1 - 2 * k, BigInt::from(n.signum()));
    }
    out
}

pub fn qfact(n: u64) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

fn add(map: &mut Undivided, key: (u64, u64), c: LaurentPoly) {
    let sum = match map.remove(&key) {
        Some(x) => &x + &c,
        None => c,
    };
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

fn left_e(x: &Undivided) -> Undivided {
    x.iter().map(|((a, b), c)| ((a + 1, *b), c.clone())).collect()
}

fn left_f(x: &Undivided, n: i64) -> Undivided {
    let mut out = Undivided::new();
    for ((a, b), c) in x {
        add(&mut out, (*a, b + 1), c.clone());
        if *a > 0 {
            let mut s = LaurentPoly::zero();
            for j in 0..*a as i64 {
                s = &s + &qint(n - 2 * *b as i64 + 2 * j);
            }
            add(&mut out, (a - 1, *b), -&(&s * c));
        }
    }
    out
}

/// A letter: (is_e, exponent), applied as an undivided power.
pub fn expand(letters: &[(bool, u64)], n: i64) -> Undivided {
    let mut cur = Undivided::new();
    cur.insert((0, 0), LaurentPoly::one());
    for &(is_e, k) in letters.iter().rev() {
        for _ in 0..k {
            cur = if is_e { left_e(&cur) } else { left_f(&cur, n) };
        }
    }
    cur
}

fn letters(w: &CBWord) -> Vec<(bool, u64)> {
    match w.shape {
        Shape::EF => vec![(true, w.a), (false, w.b)],
        Shape::FE => vec![(false, w.b), (true, w.a)],
    }
}

/// The divided-power word as (numerator in undivided form, denominator).
pub fn word_fraction(words: &[CBWord]) -> (Undivided, LaurentPoly) {
    let n = words.last().map(|w| w.n).unwrap_or(0);
    let ls: Vec<(bool, u64)> = words.iter().flat_map(letters).collect();
    let den = ls.iter().fold(LaurentPoly::one(), |acc, (_, k)| &acc * &qfact(*k));
    (expand(&ls, n), den)
}

/// Whether Σ c_w·w equals the product of `words`, checked over Q(v) by
/// cross-multiplication. Composability of `words` is the caller's concern;
/// an empty `claimed` must then be zero.
pub fn agrees(words: &[CBWord], claimed: &BTreeMap<CBWord, LaurentPoly>) -> bool {
    let (lhs_num, lhs_den) = word_fraction(words);
    let mut num = Undivided::new();
    let mut den = LaurentPoly::one();
    for (w, c) in claimed {
        let (x, y) = word_fraction(std::slice::from_ref(w));
        let mut next = Undivided::new();
        for (k, v) in &num {
            add(&mut next, *k, v * &y);
        }
        for (k, v) in &x {
            add(&mut next, *k, &(v * c) * &den);
        }
        num = next;
        den = &den * &y;
    }
    let mut diff = Undivided::new();
    for (k, v) in &lhs_num {
        add(&mut diff, *k, v * &den);
    }
    for (k, v) in &num {
        add(&mut diff, *k, -&(v * &lhs_den));
    }
    diff.is_empty()
}
