#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod arith;
pub mod bialgebra;
pub mod error;
pub mod hecke;
pub mod ideals;
pub mod invariant;
pub mod operators;
pub mod partitions;
pub mod projectors;
pub mod quadratic;

pub use error::Error;
