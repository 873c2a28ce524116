//! Dense linear algebra over F_p, written independently of the library.

pub type Mat = Vec<Vec<i64>>;

pub fn modp(x: i64, p: i64) -> i64 {
    x.rem_euclid(p)
}

pub fn inv(a: i64, p: i64) -> i64 {
    (1..p).find(|b| modp(a * b, p) == 1).expect("nonzero")
}

pub fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0; c]; r]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mul(a: &Mat, b: &Mat, p: i64, inner: usize) -> Mat {
    let rows = a.len();
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = zeros(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = modp(out[i][j] + a[i][k] * b[k][j], p);
            }
        }
    }
    out
}

/// Row-reduces a copy and returns the rank.
pub fn rank(m: &Mat, p: i64) -> usize {
    let mut a: Mat = m.iter().map(|r| r.iter().map(|&x| modp(x, p)).collect()).collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let iv = inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = modp(*x * iv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x = modp(*x - f * y, p);
                }
            }
        }
        r += 1;
    }
    r
}

/// Column vectors spanning the kernel of m (rows x cols).
pub fn kernel(m: &Mat, cols: usize, p: i64) -> Vec<Vec<i64>> {
    let mut a: Mat = m.iter().map(|r| r.iter().map(|&x| modp(x, p)).collect()).collect();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let iv = inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = modp(*x * iv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let pivot = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x = modp(*x - f * y, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = modp(-a[i][f], p);
            }
            v
        })
        .collect()
}

/// dim(span(a ∪ b)) for two lists of column vectors of equal length.
pub fn span_dim(vectors: &[Vec<i64>], p: i64) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&vectors.to_vec(), p)
}
