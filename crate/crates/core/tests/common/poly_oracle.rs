//! Explicit polynomials in n variables over F_p, with Schur polynomials
//! expanded by enumerating semistandard tableaux.

use std::collections::BTreeMap;

pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn add_into(acc: &mut Poly, mono: Vec<u32>, c: i64, p: i64) {
    let e = acc.entry(mono.clone()).or_insert(0);
    *e = (*e + c).rem_euclid(p);
    if *e == 0 {
        acc.remove(&mono);
    }
}

pub fn mul(a: &Poly, b: &Poly, p: i64) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            add_into(&mut out, m, ca * cb, p);
        }
    }
    out
}

pub fn add(a: &Poly, b: &Poly, scale_b: i64, p: i64) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        add_into(&mut out, m.clone(), c * scale_b, p);
    }
    out
}

pub fn one(n: usize) -> Poly {
    [(vec![0; n], 1)].into_iter().collect()
}

/// ∂ with ∂(x_i) = x_i² extended by the Leibniz rule.
pub fn diff(f: &Poly, p: i64) -> Poly {
    let mut out = Poly::new();
    for (m, c) in f {
        for i in 0..m.len() {
            if m[i] > 0 {
                let mut m2 = m.clone();
                m2[i] += 1;
                add_into(&mut out, m2, c * m[i] as i64, p);
            }
        }
    }
    out
}

/// s_λ(x_1..x_n) by listing SSYT with entries 1..n.
pub fn schur(lambda: &[u16], n: usize, p: i64) -> Poly {
    let mut out = Poly::new();
    if lambda.len() > n {
        return out;
    }
    let cells: Vec<(usize, usize)> =
        lambda.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut t: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    fn go(i: usize, cells: &[(usize, usize)], n: usize, t: &mut BTreeMap<(usize, usize), u32>, out: &mut Poly, p: i64) {
        if i == cells.len() {
            let mut m = vec![0u32; n];
            for v in t.values() {
                m[*v as usize - 1] += 1;
            }
            add_into(out, m, 1, p);
            return;
        }
        let (r, c) = cells[i];
        let left = if c > 0 { t[&(r, c - 1)] } else { 1 };
        let above = if r > 0 { t[&(r - 1, c)] + 1 } else { 1 };
        for v in left.max(above)..=n as u32 {
            t.insert((r, c), v);
            go(i + 1, cells, n, t, out, p);
            t.remove(&(r, c));
        }
    }
    go(0, &cells, n, &mut t, &mut out, p);
    out
}
