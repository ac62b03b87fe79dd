//! Word syntax, file formats, the acceptance suite and the command line
//! for `airframe-core`.

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod formats;
pub mod word;

pub use airframe_core;
pub use error::{AirframeError, Result};
