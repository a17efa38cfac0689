//! Faber polynomials of planar continua, Green level sets and Bohr sums.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bohr;
pub mod cli;
pub mod condensator;
pub mod dd;
pub mod error;
pub mod estimates;
pub mod faber;
pub mod output;
pub mod series;

pub use condensator::{ContinuumSpec, LevelSet};
pub use error::{Error, Result};
pub use series::{GradedLaurent, LaurentTail};
