//! Pattern-restricted permutation classes counted by Fibonacci numbers, their
//! Mahonian and cycle statistics, and the q-Fibonacci polynomials those
//! statistics generate, all in exact arithmetic.

pub mod blockwords;
pub mod error;
pub mod permstats;
pub mod partitions;
pub mod polyring;
pub mod qfib;

pub use error::{Error, Result};
pub use polyring::{Monomial, MultiPoly};
