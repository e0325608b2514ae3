//! Signature Gröbner bases of two-sided ideals in the free algebra over the rationals.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod baseline;
pub mod bimodule;
pub mod coeff;
pub mod engine;
pub mod error;
pub mod index;
pub mod lincomb;
pub mod poly;
pub mod reconstruct;
pub mod signatures;
pub mod word;

pub use bimodule::{mod_divides, ModuleElement, ModuleMonomial, ModuleOrder, Pot, Top};
pub use coeff::Coefficient;
pub use error::Error;
pub use poly::{reduce_full, reduce_step, Polynomial};
pub use word::{factor_occurrences, Deglex, MonomialOrder, Variable, Word};
