//! The idempotented quantum group U̇(sl_2) in Lusztig's canonical basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::ring::{same_ring, Op, Rho, Scalars};
use crate::cyclotomic::qbinom_general;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    EF,
    FE,
}

/// E^{(a)}F^{(b)}1_n (shape EF) or F^{(b)}E^{(a)}1_n (shape FE), in
/// canonical position: EF needs n ≤ b − a, FE needs n > b − a.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CBWord {
    pub shape: Shape,
    pub a: u64,
    pub b: u64,
    pub n: i64,
}

impl CBWord {
    /// The canonical basis element with these exponents and weight; at
    /// n = b − a the two shapes coincide and EF is returned.
    pub fn new(a: u64, b: u64, n: i64) -> Self {
        let shape = if n <= b as i64 - a as i64 { Shape::EF } else { Shape::FE };
        CBWord { shape, a, b, n }
    }

    /// Checks that the requested shape is allowed at this weight, mapping
    /// the FE form at n = b − a to its EF twin.
    pub fn with_shape(shape: Shape, a: u64, b: u64, n: i64) -> Result<Self> {
        let tie = b as i64 - a as i64;
        match shape {
            Shape::EF if n <= tie => Ok(CBWord { shape, a, b, n }),
            Shape::FE if n >= tie => Ok(CBWord::new(a, b, n)),
            _ => Err(Error::InvalidParameter(format!("{shape:?} word with a={a}, b={b} is not canonical at weight {n}"))),
        }
    }

    /// 1_n.
    pub fn idempotent(n: i64) -> Self {
        CBWord::new(0, 0, n)
    }

    /// The weight on the left: n + 2a − 2b.
    pub fn out_weight(&self) -> i64 {
        self.n + 2 * self.a as i64 - 2 * self.b as i64
    }

    fn letters(&self) -> Vec<Letter> {
        match self.shape {
            Shape::EF => vec![Letter::E(self.a), Letter::F(self.b)],
            Shape::FE => vec![Letter::F(self.b), Letter::E(self.a)],
        }
    }
}

impl fmt::Display for CBWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shape {
            Shape::EF => write!(f, "E({})F({})1[{}]", self.a, self.b, self.n),
            Shape::FE => write!(f, "F({})E({})1[{}]", self.b, self.a, self.n),
        }
    }
}

impl FromStr for CBWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad canonical word {s:?}"));
        let s = s.trim();
        let num = |t: &str| -> Result<i64> { t.parse().map_err(|_| err()) };
        let (first, rest) = s.split_once(')').ok_or_else(err)?;
        let (second, weight) = rest.split_once(")1[").ok_or_else(err)?;
        let weight = weight.strip_suffix(']').ok_or_else(err)?;
        let (l1, x) = first.split_once('(').ok_or_else(err)?;
        let (l2, y) = second.split_once('(').ok_or_else(err)?;
        let (x, y, n) = (num(x)?, num(y)?, num(weight)?);
        if x < 0 || y < 0 {
            return Err(err());
        }
        match (l1, l2) {
            ("E", "F") => CBWord::with_shape(Shape::EF, x as u64, y as u64, n),
            ("F", "E") => CBWord::with_shape(Shape::FE, y as u64, x as u64, n),
            _ => Err(err()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Letter {
    E(u64),
    F(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct UdotElem<S: Scalars> {
    ring: S,
    terms: BTreeMap<CBWord, S::Elem>,
}

impl<S: Scalars> UdotElem<S> {
    pub fn zero(ring: S) -> Self {
        UdotElem { ring, terms: BTreeMap::new() }
    }

    pub fn word(w: CBWord, ring: S) -> Self {
        let one = ring.one();
        let mut out = Self::zero(ring);
        out.add_term(w, one);
        out
    }

    pub fn ring(&self) -> &S {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<CBWord, S::Elem> {
        &self.terms
    }

    pub fn coeff(&self, w: &CBWord) -> S::Elem {
        self.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: CBWord, c: S::Elem) {
        let sum = match self.terms.remove(&w) {
            Some(x) => self.ring.add(&x, &c),
            None => c,
        };
        if !self.ring.is_zero(&sum) {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.ring.neg(&self.ring.one())))
    }

    pub fn scale(&self, c: &S::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone());
        for (w, x) in &self.terms {
            out.add_term(*w, self.ring.mul(x, c));
        }
        out
    }
}

fn weight_change(l: &Letter) -> i64 {
    match l {
        Letter::E(k) => 2 * *k as i64,
        Letter::F(k) => -2 * *k as i64,
    }
}

/// Rewrites a word of divided powers ending in 1_n as Σ c·E^{(a)}F^{(b)}1_n.
fn ef_normal<S: Scalars>(ring: &S, letters: Vec<Letter>, n: i64, coef: S::Elem, out: &mut BTreeMap<(u64, u64), S::Elem>) {
    let mut word: Vec<Letter> = Vec::with_capacity(letters.len());
    let mut coef = coef;
    for l in letters {
        match (word.last().copied(), l) {
            (_, Letter::E(0)) | (_, Letter::F(0)) => {}
            (Some(Letter::E(x)), Letter::E(y)) => {
                coef = ring.mul(&coef, &ring.embed(&qbinom_general((x + y) as i64, x)));
                *word.last_mut().expect("nonempty") = Letter::E(x + y);
            }
            (Some(Letter::F(x)), Letter::F(y)) => {
                coef = ring.mul(&coef, &ring.embed(&qbinom_general((x + y) as i64, x)));
                *word.last_mut().expect("nonempty") = Letter::F(x + y);
            }
            _ => word.push(l),
        }
    }
    if ring.is_zero(&coef) {
        return;
    }
    let fe = (0..word.len().saturating_sub(1))
        .rev()
        .find(|&i| matches!((word[i], word[i + 1]), (Letter::F(_), Letter::E(_))));
    let Some(i) = fe else {
        let key = match word.as_slice() {
            [] => (0, 0),
            [Letter::E(a)] => (*a, 0),
            [Letter::F(b)] => (0, *b),
            [Letter::E(a), Letter::F(b)] => (*a, *b),
            _ => unreachable!("a word without FE pairs has the form E^(a)F^(b)"),
        };
        let sum = match out.remove(&key) {
            Some(x) => ring.add(&x, &coef),
            None => coef,
        };
        if !ring.is_zero(&sum) {
            out.insert(key, sum);
        }
        return;
    };
    let (Letter::F(b), Letter::E(a)) = (word[i], word[i + 1]) else { unreachable!() };
    let m = n + word[i + 2..].iter().map(weight_change).sum::<i64>();
    let top = b as i64 - a as i64 - m;
    for j in 0..=a.min(b) {
        let c = ring.embed(&qbinom_general(top, j));
        if ring.is_zero(&c) {
            continue;
        }
        let mut next = word[..i].to_vec();
        next.push(Letter::E(a - j));
        next.push(Letter::F(b - j));
        next.extend_from_slice(&word[i + 2..]);
        ef_normal(ring, next, n, ring.mul(&coef, &c), out);
    }
}

/// E^{(a)}F^{(b)}1_n expressed in the canonical basis.
fn canonicalize<S: Scalars>(ring: &S, a: u64, b: u64, n: i64, coef: &S::Elem, out: &mut UdotElem<S>) {
    if n <= b as i64 - a as i64 {
        out.add_term(CBWord { shape: Shape::EF, a, b, n }, coef.clone());
        return;
    }
    let top = a as i64 - b as i64 + n;
    for j in 0..=a.min(b) {
        let c = ring.embed(&qbinom_general(top, j));
        if !ring.is_zero(&c) {
            out.add_term(CBWord { shape: Shape::FE, a: a - j, b: b - j, n }, ring.mul(coef, &c));
        }
    }
}

fn word_product<S: Scalars>(ring: &S, x: &CBWord, y: &CBWord, coef: &S::Elem, out: &mut UdotElem<S>) {
    if x.n != y.out_weight() {
        return;
    }
    let mut letters = x.letters();
    letters.extend(y.letters());
    let mut ef = BTreeMap::new();
    ef_normal(ring, letters, y.n, coef.clone(), &mut ef);
    for ((a, b), c) in ef {
        canonicalize(ring, a, b, y.n, &c, out);
    }
}

/// The product in U̇, rewritten into canonical words using 1_n1_m = δ_{nm}1_n,
/// weight shifts and the divided-power commutation formulas.
pub fn udot_mult<S: Scalars>(x: &UdotElem<S>, y: &UdotElem<S>) -> Result<UdotElem<S>> {
    same_ring(&x.ring, &y.ring)?;
    let ring = &x.ring;
    let mut out = UdotElem::zero(ring.clone());
    for (w1, c1) in &x.terms {
        for (w2, c2) in &y.terms {
            word_product(ring, w1, w2, &ring.mul(c1, c2), &mut out);
        }
    }
    Ok(out)
}

/// The quantum Frobenius map: E^{(a)}F^{(b)}1_n ↦ 𝖤^{(a/p)}𝖥^{(b/p)}1_{n/p}
/// when p divides a, b and n, and 0 otherwise; likewise for FE words.
pub fn frobenius(x: &UdotElem<Op>) -> UdotElem<Rho> {
    let p = x.ring.0;
    let pu = p.get() as u64;
    let mut out = UdotElem::zero(Rho(p));
    for (w, c) in &x.terms {
        if w.a % pu == 0 && w.b % pu == 0 && w.n.rem_euclid(pu as i64) == 0 {
            let image = CBWord { shape: w.shape, a: w.a / pu, b: w.b / pu, n: w.n / pu as i64 };
            out.add_term(image, c.clone());
        }
    }
    out
}

/// The section 𝖤^{(a)}𝖥^{(b)}1_n ↦ E^{(ap)}F^{(bp)}1_{np} of the Frobenius map.
pub fn frobenius_section(x: &UdotElem<Rho>) -> UdotElem<Op> {
    let p = x.ring.0;
    let pu = p.get() as u64;
    let mut out = UdotElem::zero(Op(p));
    for (w, c) in &x.terms {
        let image = CBWord { shape: w.shape, a: w.a * pu, b: w.b * pu, n: w.n * pu as i64 };
        out.add_term(image, c.clone());
    }
    out
}

impl<S: Scalars> fmt::Display for UdotElem<S> {
    /// Terms `(c)*word` in (shape, a, b, n) order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
