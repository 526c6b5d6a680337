// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catenoid;
pub mod cli;
pub mod cone;
pub mod error;
pub mod io;
pub mod numeric;
pub mod weierstrass;

pub use error::{Error, Result};
