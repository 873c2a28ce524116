//! Exact arithmetic in Z[v^{±1}] and in O_p = Z[q^{±1}]/(Ψ_p(q²)), quantum
//! integers and binomials, and the base changes between them.

mod laurent;
mod op;
mod qnum;

pub use laurent::Laurent;
pub use op::{varrho, Cyclotomic, CyclotomicQuotient, VarrhoTarget};
pub use qnum::{
    binom_reduction_check, binom_reduction_rhs, binomial, qbinom, qbinom_general, qbinom_with,
    qint, rho, to_op,
};

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::Num;

/// Integer-like coefficient rings for Laurent polynomials and O_p.
pub trait Ring: Clone + Num + PartialOrd + Neg<Output = Self> + Debug + Display + Send + Sync + 'static {
    fn from_i64(n: i64) -> Self;
}

impl Ring for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Ring for i128 {
    fn from_i64(n: i64) -> Self {
        n as i128
    }
}

impl Ring for num_bigint::BigInt {
    fn from_i64(n: i64) -> Self {
        n.into()
    }
}
