//! Rearrangement groups of edge-replacement systems, with the Airplane
//! group as the main worked example.
//!
//! Everything here is exact and allocation-only; file formats and the
//! command line live in the `airframe` crate.

#![no_std]

extern crate alloc;

pub mod airplane;
pub mod circularize;
pub mod components;
pub mod analysis;
pub mod diagram;
pub mod dyadic;
pub mod error;
pub mod pl;
pub mod replacement;
pub mod systems;
pub mod tree;
pub mod word;

pub use diagram::{Diagram, Image};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use replacement::{EdgeAddress, Expansion, ReplacementSystem};
pub use word::{GeneratorTable, GroupWord, Letter};
