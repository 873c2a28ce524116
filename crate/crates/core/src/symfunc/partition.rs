use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, ordered first by size and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u16>);

impl Partition {
    pub fn new(parts: Vec<u16>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u16>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.last() != Some(&0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row (r).
    pub fn row(r: u16) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// The single column (1^r).
    pub fn column(r: usize) -> Self {
        Partition(vec![1; r])
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: u16) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[u16] {
        &self.0
    }

    pub fn part(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0) as usize;
        Partition((0..cols).map(|c| self.0.iter().filter(|&&x| x as usize > c).count() as u16).collect())
    }

    /// Membership in P(a, b): at most a rows, each part at most b.
    pub fn fits_in(&self, a: usize, b: usize) -> bool {
        self.rows() <= a && self.part(0) as usize <= b
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && other.0.iter().zip(&self.0).all(|(x, y)| x <= y)
    }

    /// Addable boxes as 0-based (row, column) pairs.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..=self.rows() {
            let len = self.part(r);
            if r == 0 || self.part(r - 1) > len {
                out.push((r, len as usize));
            }
        }
        out
    }

    /// The partition with one box added in row r (0-based).
    pub fn with_box(&self, r: usize) -> Self {
        let mut parts = self.0.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Partition(parts)
    }

    /// Blow each box up to an m×m square.
    pub fn expand(&self, m: u16) -> Self {
        Partition(self.0.iter().flat_map(|&x| std::iter::repeat_n(x * m, m as usize)).collect())
    }

    /// All partitions of n with at most `max_rows` rows and parts at most
    /// `max_part`, in decreasing lexicographic order.
    pub fn all_of(n: usize, max_rows: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let rows = max_rows.unwrap_or(usize::MAX);
        let top = max_part.unwrap_or(n).min(n);
        fill(n, top, rows, &mut cur, &mut out);
        out
    }

    /// All partitions in P(a, b), ordered by size then lexicographically.
    pub fn in_box(a: usize, b: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=a * b).flat_map(|n| Partition::all_of(n, Some(a), Some(b))).collect();
        out.sort();
        out
    }
}

fn fill(n: usize, max: usize, rows: usize, cur: &mut Vec<u16>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if rows == 0 {
        return;
    }
    for x in (1..=max.min(n)).rev() {
        if x.saturating_mul(rows) < n {
            break;
        }
        cur.push(x as u16);
        fill(n - x, x, rows - 1, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} must look like [a,b,...]")))?;
        let parts = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u16>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
