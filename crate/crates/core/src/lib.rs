//! Exact computational toolkit for the arithmetic dynamics of z^2 + c over Q.

pub mod error;
pub mod curves;
pub mod descent;
pub mod dynamics;
pub mod exactmath;
pub mod families;
pub mod ffjac;
pub mod padic;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
