//! Exact symbolic kernels for Macdonald polynomials and their raising
//! operators: Laurent polynomials over Z, q-difference operators, the
//! eigen-operator triangular solve, generalized q-binomial coefficients and
//! the row-type raising operators `B_m`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod macdonald;
pub mod partitions;
pub mod qbinomial;
pub mod raising;
pub mod report;

pub use error::{AlgebraError, ComboError, Error, Result};
