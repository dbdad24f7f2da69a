//! Polynomial arithmetic backing the number-field module.

pub mod fp;
pub mod int;

pub use fp::FpPoly;
