//! Exact computations with p-differential graded structures over F_p.
//!
//! The crate covers slash cohomology of p-complexes, symmetric polynomials
//! with the differential ∂(x) = x², Grassmannian and nilHecke endomorphism
//! algebras, and the idempotented quantum sl2 at a prime root of unity with
//! its quantum Frobenius map.

pub mod cyclotomic;
pub mod error;
pub mod fp;
pub mod linalg;
pub mod pdgmod;
pub mod pcomplex;
pub mod qgroup;
pub mod symfunc;

pub use error::{Error, Result};
pub use fp::Prime;

/// Laurent polynomials in v with arbitrary-precision coefficients.
pub type LaurentPoly = cyclotomic::Laurent<num_bigint::BigInt>;

/// Elements of O_p with arbitrary-precision coefficients.
pub type CycElem = cyclotomic::Cyclotomic<num_bigint::BigInt>;
