//! Coefficient rings for quantum group elements.

use std::fmt;

use num_traits::{One, Zero};

use crate::cyclotomic::{rho, to_op};
use crate::error::{Error, Result};
use crate::fp::Prime;
use crate::{CycElem, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingTag {
    /// Z[v^{±1}].
    Generic,
    /// O_p, reached from Z[v^{±1}] by v ↦ q.
    Op(u32),
    /// O_p, reached from Z[v^{±1}] by ρ (v ↦ q^p, or v ↦ 1 when p = 2).
    Rho(u32),
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Generic => write!(f, "Z[v,v^-1]"),
            RingTag::Op(p) => write!(f, "O_{p}"),
            RingTag::Rho(p) => write!(f, "rho(O_{p})"),
        }
    }
}

/// A commutative coefficient ring together with the map from Z[v^{±1}]
/// used to evaluate quantum binomials in it.
pub trait Scalars: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + fmt::Debug + PartialEq + fmt::Display + Send + Sync;

    fn tag(&self) -> RingTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn embed(&self, f: &LaurentPoly) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Op(pub Prime);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rho(pub Prime);

impl Scalars for Generic {
    type Elem = LaurentPoly;

    fn tag(&self) -> RingTag {
        RingTag::Generic
    }
    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> LaurentPoly {
        LaurentPoly::one()
    }
    fn is_zero(&self, x: &LaurentPoly) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
        x + y
    }
    fn mul(&self, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
        x * y
    }
    fn neg(&self, x: &LaurentPoly) -> LaurentPoly {
        -x
    }
    fn embed(&self, f: &LaurentPoly) -> LaurentPoly {
        f.clone()
    }
}

macro_rules! cyclotomic_scalars {
    ($ty:ident, $tag:ident, $map:ident) => {
        impl Scalars for $ty {
            type Elem = CycElem;

            fn tag(&self) -> RingTag {
                RingTag::$tag(self.0.get())
            }
            fn zero(&self) -> CycElem {
                CycElem::zero(self.0)
            }
            fn one(&self) -> CycElem {
                CycElem::one(self.0)
            }
            fn is_zero(&self, x: &CycElem) -> bool {
                x.is_zero()
            }
            fn add(&self, x: &CycElem, y: &CycElem) -> CycElem {
                x + y
            }
            fn mul(&self, x: &CycElem, y: &CycElem) -> CycElem {
                x * y
            }
            fn neg(&self, x: &CycElem) -> CycElem {
                -x
            }
            fn embed(&self, f: &LaurentPoly) -> CycElem {
                $map(f, self.0)
            }
        }
    };
}

cyclotomic_scalars!(Op, Op, to_op);
cyclotomic_scalars!(Rho, Rho, rho);

pub(crate) fn same_ring<S: Scalars>(x: &S, y: &S) -> Result<()> {
    if x != y {
        return Err(Error::InvalidParameter(format!("ring tag mismatch: {} vs {}", x.tag(), y.tag())));
    }
    Ok(())
}
