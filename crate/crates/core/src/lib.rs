pub mod algebra;
pub mod commands;
pub mod error;
pub mod expr;
pub mod geometry;
pub mod json;
pub mod print;
pub mod qpoly;
pub mod rational;
pub mod realpoly;
mod roots;
pub mod starone;

pub use error::{Error, Result};
