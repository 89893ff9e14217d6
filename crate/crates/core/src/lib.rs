//! 5-move invariants of links from the Jones and Kauffman polynomials,
//! classification of Montesinos links up to 5-moves and mutation, and a
//! polynomial test for the Montesinos property.

pub mod bracket;
pub mod classify;
pub mod cyclo;
pub mod error;
pub mod kauffman;
pub mod link;
pub mod probe;

pub use error::{Error, Result};
