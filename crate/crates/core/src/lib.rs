//! Exact character theory of SL2 over the dual numbers F_q[e]/(e^2).
//!
//! The crate enumerates G2^F = SL2(F_q[e]/(e^2)) for small odd q, builds its
//! character table two independent ways (little-group method and
//! Burnside-Dixon-Schneider), and checks the finite consequences of the
//! Deligne-Lusztig-type constructions attached to it: the finite variety
//! Xbar_k, its permutation character, and the coset space G2^F/(S,S)^F.

pub mod chartab;
pub mod cyclo;
pub mod error;
pub mod gf;
pub mod group;
pub mod lab;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
