use crate::error::{Error, Result};
use crate::fp::Prime;

/// The degree range [lo, hi] on which a complex is stored. An end marked
/// complete means the complex genuinely vanishes beyond it; otherwise the
/// complex has been truncated there and nearby degrees are unreliable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
    pub lo_complete: bool,
    pub hi_complete: bool,
}

impl Window {
    pub fn complete(lo: i64, hi: i64) -> Self {
        Window { lo, hi, lo_complete: true, hi_complete: true }
    }

    /// Bounded below at `lo`, cut off above `hi`.
    pub fn truncated_above(lo: i64, hi: i64) -> Self {
        Window { lo, hi, lo_complete: true, hi_complete: false }
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo <= d && d <= self.hi
    }

    /// Degrees whose slash cohomology is determined by the stored data.
    pub fn valid_range(&self, p: Prime) -> (i64, i64) {
        let reach = 2 * (p.get() as i64 - 1);
        let lo = if self.lo_complete { self.lo } else { self.lo + reach };
        let hi = if self.hi_complete { self.hi } else { self.hi - reach };
        (lo, hi)
    }

    /// Window of a tensor product of complexes stored on `self` and `other`.
    pub fn tensor(&self, other: &Window) -> Result<Window> {
        let hi = match (self.hi_complete, other.hi_complete) {
            (true, true) => (self.hi + other.hi, true),
            (false, true) if other.lo_complete => (self.hi + other.lo, false),
            (true, false) if self.lo_complete => (other.hi + self.lo, false),
            (false, false) if self.lo_complete && other.lo_complete => {
                ((self.hi + other.lo).min(other.hi + self.lo), false)
            }
            _ => return Err(Error::WindowTooSmall("tensor factor unbounded in both directions".into())),
        };
        let lo = match (self.lo_complete, other.lo_complete) {
            (true, true) => (self.lo + other.lo, true),
            (false, true) if other.hi_complete => (self.lo + other.hi, false),
            (true, false) if self.hi_complete => (other.lo + self.hi, false),
            (false, false) if self.hi_complete && other.hi_complete => {
                ((self.lo + other.hi).max(other.lo + self.hi), false)
            }
            _ => return Err(Error::WindowTooSmall("tensor factor unbounded in both directions".into())),
        };
        Ok(Window { lo: lo.0, hi: hi.0, lo_complete: lo.1, hi_complete: hi.1 })
    }

    /// The window with degrees negated.
    pub fn dual(&self) -> Window {
        Window { lo: -self.hi, hi: -self.lo, lo_complete: self.hi_complete, hi_complete: self.lo_complete }
    }
}
