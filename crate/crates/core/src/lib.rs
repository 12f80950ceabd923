pub mod affine;
pub mod chebyshev;
pub mod cli;
pub mod ellipse;
pub mod error;
pub mod numeric;
pub mod regularity;

pub use error::{Error, Result};
