//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

pub mod dense;
pub mod poly_oracle;
pub mod udot_oracle;
