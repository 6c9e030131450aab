//! Hypergeometric periods of Fermat-type motives: character classification,
//! exact algebraic and logarithmic constants, multiprecision numerics, and a
//! registry of hypergeometric identities with multi-route verification.

pub mod ball;
pub mod characters;
pub mod error;
pub mod identities;
pub mod rational;
pub mod numerics;
pub mod symbolic;

pub use error::{Error, Result};
