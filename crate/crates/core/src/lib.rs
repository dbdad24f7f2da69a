//! Explicit discriminant lower bounds for number fields via the Weil explicit formula.

pub mod criteria;
pub mod error;
pub mod field;
pub mod kernel;
pub mod optimize;
pub mod poly;
pub mod quad;
pub mod quadratic;
pub mod sieve;
pub mod verify;

pub use error::{Error, Result};
