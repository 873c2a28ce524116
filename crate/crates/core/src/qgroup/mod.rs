//! The idempotented quantum group U̇(sl_2), its base changes to O_p and the
//! quantum Frobenius map.

mod checks;
mod half;
mod ring;
mod udot;

pub use checks::{
    frobenius_hom_check, k0_symbol_check, k0_symbol_report, kernel_check, section_check, CheckReport, K0Report, Ranges,
};
pub use half::{half_comult, half_frobenius, half_mult, HalfElem};
pub use ring::{Generic, Op, Rho, RingTag, Scalars};
pub use udot::{frobenius, frobenius_section, udot_mult, CBWord, Shape, UdotElem};
