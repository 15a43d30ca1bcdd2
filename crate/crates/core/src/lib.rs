//! Exact toric residues, sparse resultants and toric subresultants.
//!
//! Everything is computed over ℚ with big rationals: Macaulay-style
//! determinant quotients for residues, determinants of the resultant and
//! subresultant complexes, and global residues in the torus.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod complex;
pub mod delta;
pub mod error;
pub mod global;
pub mod macaulay;
pub mod system;
pub mod toric;

pub use error::{Error, Result};
