//! Exact q-shift operator algebra, colored Jones evaluators and annihilator
//! certificates for the Hopf and Whitehead links.

pub mod arith;
pub mod cert;
pub mod error;
pub mod ore;
pub mod par;
pub mod seq;

pub use error::{Error, Result};
