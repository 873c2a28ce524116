//! Linear endomorphisms of Pol_n known on all monomials up to a degree.

use std::collections::BTreeMap;

use super::poly::{demazure, monomials, Monomial, PolElem};
use crate::error::{Error, Result};
use crate::fp::Prime;

/// A homogeneous operator of degree `shift` on Pol_n, recorded on every
/// monomial of internal degree ≤ `max_deg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorOnWindow {
    n: usize,
    p: Prime,
    shift: i64,
    max_deg: i64,
    images: BTreeMap<Monomial, PolElem>,
}

/// Outcome of a windowed comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowedCheck {
    pub passed: bool,
    pub window: i64,
    pub failure: Option<String>,
}

impl OperatorOnWindow {
    pub fn from_fn<F>(n: usize, p: Prime, shift: i64, max_deg: i64, f: F) -> Result<Self>
    where
        F: Fn(&PolElem) -> Result<PolElem>,
    {
        let mut images = BTreeMap::new();
        for e in 0..=(max_deg.max(0) / 2) as u32 {
            for m in monomials(n, e) {
                let img = f(&PolElem::monomial(m.clone(), 1, p))?;
                if let Some(d) = img.degree() {
                    if d != 2 * e as i64 + shift {
                        return Err(Error::Inhomogeneous(format!("operator image of degree {d}, expected shift {shift}")));
                    }
                }
                images.insert(m, img);
            }
        }
        Ok(OperatorOnWindow { n, p, shift, max_deg, images })
    }

    pub fn identity(n: usize, p: Prime, max_deg: i64) -> Self {
        Self::from_fn(n, p, 0, max_deg, |f| Ok(f.clone())).expect("identity is homogeneous")
    }

    /// Multiplication by x_i.
    pub fn mult_var(i: usize, n: usize, p: Prime, max_deg: i64) -> Self {
        let x = PolElem::var(i, n, p);
        Self::from_fn(n, p, 2, max_deg, |f| Ok(x.mul(f))).expect("multiplication is homogeneous")
    }

    pub fn mult_by(g: &PolElem, max_deg: i64) -> Result<Self> {
        let shift = g.degree().ok_or_else(|| Error::Inhomogeneous("multiplier".into()))?;
        Self::from_fn(g.vars(), g.prime(), shift, max_deg, |f| Ok(g.mul(f)))
    }

    pub fn demazure(i: usize, n: usize, p: Prime, max_deg: i64) -> Result<Self> {
        Self::from_fn(n, p, -2, max_deg, |f| demazure(i, f))
    }

    /// The differential of Pol_n itself.
    pub fn pol_diff(n: usize, p: Prime, max_deg: i64) -> Self {
        Self::from_fn(n, p, 2, max_deg, |f| Ok(f.diff())).expect("∂ is homogeneous")
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn max_deg(&self) -> i64 {
        self.max_deg
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn apply(&self, f: &PolElem) -> Result<PolElem> {
        let mut out = PolElem::zero(self.n, self.p);
        for (m, c) in f.terms() {
            let img = self
                .images
                .get(m)
                .ok_or_else(|| Error::WindowTooSmall(format!("monomial {m:?} beyond degree {}", self.max_deg)))?;
            out = out.add(&img.scale(*c));
        }
        Ok(out)
    }

    /// self ∘ other, defined where other's images stay inside self's window.
    pub fn compose(&self, other: &OperatorOnWindow) -> OperatorOnWindow {
        let max_deg = other.max_deg.min(self.max_deg - other.shift);
        let images = other
            .images
            .iter()
            .filter(|(m, _)| 2 * m.iter().sum::<u32>() as i64 <= max_deg)
            .map(|(m, img)| (m.clone(), self.apply(img).expect("composition stays in the window")))
            .collect();
        OperatorOnWindow { n: self.n, p: self.p, shift: self.shift + other.shift, max_deg, images }
    }

    pub fn compose_all(ops: &[&OperatorOnWindow]) -> OperatorOnWindow {
        let (last, rest) = ops.split_last().expect("nonempty composite");
        rest.iter().rev().fold((*last).clone(), |acc, op| op.compose(&acc))
    }

    fn combine(&self, other: &OperatorOnWindow, c: u32) -> Result<OperatorOnWindow> {
        if self.shift != other.shift {
            return Err(Error::Inhomogeneous(format!("operators of degree {} and {}", self.shift, other.shift)));
        }
        let max_deg = self.max_deg.min(other.max_deg);
        let images = self
            .images
            .iter()
            .filter_map(|(m, a)| other.images.get(m).map(|b| (m.clone(), a.add(&b.scale(c)))))
            .collect();
        Ok(OperatorOnWindow { n: self.n, p: self.p, shift: self.shift, max_deg, images })
    }

    pub fn add(&self, other: &OperatorOnWindow) -> Result<OperatorOnWindow> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &OperatorOnWindow) -> Result<OperatorOnWindow> {
        self.combine(other, self.p.neg(1))
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(PolElem::is_zero)
    }

    /// Equality on the common window, with the first disagreeing monomial.
    pub fn compare(&self, other: &OperatorOnWindow) -> WindowedCheck {
        let window = self.max_deg.min(other.max_deg);
        if self.shift != other.shift {
            return WindowedCheck { passed: false, window, failure: Some("degree mismatch".into()) };
        }
        let failure = self
            .images
            .iter()
            .filter(|(m, _)| 2 * m.iter().sum::<u32>() as i64 <= window)
            .find(|(m, a)| other.images.get(*m).is_some_and(|b| b != *a))
            .map(|(m, _)| format!("monomial {m:?}"));
        WindowedCheck { passed: failure.is_none(), window, failure }
    }
}

/// The commutator ∂∘T − T∘∂ with the differential of Pol_n.
pub fn nh_differential(t: &OperatorOnWindow) -> OperatorOnWindow {
    let d = OperatorOnWindow::pol_diff(t.n, t.p, t.max_deg + t.shift.max(0) + 2);
    let left = d.compose(t);
    let right = t.compose(&d);
    left.sub(&right).expect("both composites have degree shift + 2")
}

/// Checks ∂_i² = 0, the braid relation, and both dot-slide relations of
/// NH_n, realized on Pol_n up to internal degree `window`.
pub fn nilhecke_relations_check(n: usize, p: Prime, window: i64) -> Result<WindowedCheck> {
    if n == 0 {
        return Err(Error::InvalidParameter("nilHecke algebra needs n ≥ 1".into()));
    }
    if window < 4 * n as i64 {
        return Err(Error::WindowTooSmall(format!("window {window} below 4n = {}", 4 * n)));
    }
    let wide = window + 8;
    let ds: Vec<OperatorOnWindow> =
        (1..n).map(|i| OperatorOnWindow::demazure(i, n, p, wide)).collect::<Result<_>>()?;
    let xs: Vec<OperatorOnWindow> = (1..=n).map(|i| OperatorOnWindow::mult_var(i, n, p, wide)).collect();
    let id = OperatorOnWindow::identity(n, p, wide);
    let fail = |what: String, c: WindowedCheck| WindowedCheck { passed: false, window, failure: Some(format!("{what}: {}", c.failure.unwrap_or_default())) };
    for i in 0..n.saturating_sub(1) {
        let sq = ds[i].compose(&ds[i]);
        if !sq.is_zero() {
            return Ok(WindowedCheck { passed: false, window, failure: Some(format!("∂_{}² ≠ 0", i + 1)) });
        }
        let c = xs[i].compose(&ds[i]).sub(&ds[i].compose(&xs[i + 1]))?.compare(&id);
        if !c.passed {
            return Ok(fail(format!("x_{0}∂_{0} − ∂_{0}x_{1} ≠ 1", i + 1, i + 2), c));
        }
        let c = ds[i].compose(&xs[i]).sub(&xs[i + 1].compose(&ds[i]))?.compare(&id);
        if !c.passed {
            return Ok(fail(format!("∂_{0}x_{0} − x_{1}∂_{0} ≠ 1", i + 1, i + 2), c));
        }
        if i + 1 < ds.len() {
            let l = OperatorOnWindow::compose_all(&[&ds[i], &ds[i + 1], &ds[i]]);
            let r = OperatorOnWindow::compose_all(&[&ds[i + 1], &ds[i], &ds[i + 1]]);
            let c = l.compare(&r);
            if !c.passed {
                return Ok(fail(format!("braid at {}", i + 1), c));
            }
        }
    }
    Ok(WindowedCheck { passed: true, window, failure: None })
}
