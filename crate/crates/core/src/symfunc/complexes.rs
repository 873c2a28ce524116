use std::collections::BTreeMap;

use super::schur::box_moves;
use super::Partition;
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::pcomplex::{PComplex, Window};

/// The Schur-basis p-complexes built from the box-adding differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchurComplex {
    /// Sym_n with ∂π_λ = Σ C(□)π_{λ+□}; `None` means unbounded n.
    Sym { n: Option<usize> },
    /// The rank-one module S_n(a) = Sym_n·v_a with ∂v_a = a e_1 v_a.
    Twisted { n: usize, a: u32 },
    /// V_{a,b} on P(bp, ap).
    V { a: usize, b: usize },
    /// V_i on P(i, kp − i) with coefficients C(□) + i.
    Vi { i: usize, k: usize },
}

impl SchurComplex {
    /// (max rows, max part, coefficient shift) of the index set.
    fn shape(&self, p: Prime) -> (Option<usize>, Option<usize>, u32) {
        let pu = p.get() as usize;
        match *self {
            SchurComplex::Sym { n } => (n, None, 0),
            SchurComplex::Twisted { n, a } => (Some(n), None, a % p.get()),
            SchurComplex::V { a, b } => (Some(b * pu), Some(a * pu), 0),
            SchurComplex::Vi { i, k } => (Some(i), Some(k * pu - i), i as u32 % p.get()),
        }
    }

    /// Assembles the complex. Bounded index sets are built completely;
    /// otherwise the complex is truncated above degree `cap`.
    pub fn build(&self, p: Prime, cap: Option<i64>) -> Result<PComplex<Partition>> {
        let (rows, cols, shift) = self.shape(p);
        if let SchurComplex::Vi { i, k } = *self {
            if i == 0 || i >= p.get() as usize || k == 0 {
                return Err(Error::InvalidParameter(format!("V_i needs 1 <= i < p and k >= 1, got i={i}, k={k}")));
            }
        }
        let bounded = match (rows, cols) {
            (Some(r), Some(c)) => Some(r * c),
            _ => None,
        };
        let window = match (bounded, cap) {
            (Some(boxes), _) => Window::complete(0, 2 * boxes as i64),
            (None, Some(cap)) => {
                if cap < 4 * (p.get() as i64 - 1) {
                    return Err(Error::WindowTooSmall(format!("degree cap {cap} leaves no valid degree")));
                }
                Window::truncated_above(0, cap)
            }
            (None, None) => return Err(Error::WindowTooSmall("unbounded complex needs a degree cap".into())),
        };
        let top = (window.hi / 2) as usize;
        let basis: BTreeMap<i64, Vec<Partition>> =
            (0..=top).map(|m| (2 * m as i64, Partition::all_of(m, rows, cols))).collect();
        PComplex::build(p, window, basis, |lambda| box_moves(lambda, p, shift, rows, cols))
    }
}
