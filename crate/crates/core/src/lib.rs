//! Exact decision procedures for Frobenius and separable structures on
//! finite-dimensional algebras over the rationals, their extensions, bimodule
//! categories and wreaths.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bimod;
pub mod duality;
pub mod exactlin;
pub mod extension;
pub mod frobsep;
pub mod report;
pub mod sampling;
pub mod symbolic;
pub mod wreath;
