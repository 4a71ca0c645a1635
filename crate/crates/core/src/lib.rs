//! Explicit local theta correspondences for GSp(4) and its orthogonal
//! similitude partners, computed over exactly represented formal characters.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is off.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod charlattice;
pub mod error;
pub mod jacquet;
pub mod langlands;
pub mod repdata;
pub mod theta;

pub use charlattice::{Character, Exponent, Symbol};
pub use error::{Error, Result};
