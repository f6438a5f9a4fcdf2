//! Caputo fractional ODE schemes and long-time Mittag-Leffler decay
//! diagnostics.
//!
//! The crate solves D^α y = A y + f(t, y) with fractional BDF1/BDF2,
//! fractional two-step Adams, the L1 scheme and an α-difference scheme, and
//! measures the polynomial decay of the numerical solutions.

// Coefficient tables keep their source digits; `!(x > y)` guards reject NaN.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod error;
pub mod problems;
pub mod quadrature;
pub mod resolvent;
pub mod solver;
pub mod special;
pub mod tables;
pub mod weights;

pub use error::{Error, Result};
