//! Structural data of polynomial and rational matrices over the rationals:
//! extraction, feasibility of prescribed data, and constructive realization.

pub mod error;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod structure;
pub mod synth;

pub use error::{Error, Result};
