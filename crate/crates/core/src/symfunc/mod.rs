//! Symmetric polynomials over F_p in the Schur basis with the differential
//! ∂(x_i) = x_i², twisted modules, the V complexes, p-Lima partitions,
//! variable splitting and the thickening map on centers.

mod complexes;
mod lima;
mod lr;
mod partition;
mod schur;
mod split;
mod theta0;

pub use complexes::SchurComplex;
pub use lima::lima_partitions;
pub use lr::{lr_product, skew_lr};
pub use partition::Partition;
pub use schur::{box_moves, SchurPoly};
pub use split::{is_slash_coboundary, split_vars, SchurTensor};
pub use theta0::{e_pow_p, e_prime, theta0, EPrimePoly};
