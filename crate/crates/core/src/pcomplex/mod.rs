//! p-complexes over F_p on a bounded degree window: validation, slash
//! cohomology, string (Jordan) decompositions, tensor products and the
//! Künneth comparison.

mod complex;
mod slash;
mod strings;
mod window;

pub use complex::{Label, PComplex};
pub use slash::{hilbert, kunneth_check, GradedDims, SlashCohomology, SlashDims};
pub use strings::{tensor_slash_dims, JordanString, StringCounts};
pub use window::Window;
