//! Polynomial rings with divided differences, Grassmannian-type modules with
//! ∂-stable bases, their endomorphism p-DG algebras, and the thickening map.

mod block;
mod end;
mod matrix;
mod operator;
mod poly;
mod thick;

pub use block::{decompose, pair_pushforward, pairing_duals, BlockModule, BlockTensor};
pub use end::{
    end_algebra, end_complex, end_coordinates, end_slash_dims, end_slash_dims_factored, nh_acyclicity_check,
    scalar_complex, EndAlgebra, EndLabel,
};
pub use matrix::PDGMatrix;
pub use operator::{nh_differential, nilhecke_relations_check, OperatorOnWindow, WindowedCheck};
pub use poly::{demazure, demazure_word, monomials, staircase_word, staircase_word_transposed, Monomial, PolElem};
pub use thick::{
    end_formality_check, grass_module, nh_hilbert, theta_plus, thick_crossing, thick_nilhecke_check, FormalityReport,
    ThickAlgebra, ThickGenerator, ThickReport,
};
