//! Clifford-algebra construction of universal quantum gate sets.
//!
//! * [`clifford`]: exact products and commutators of scaled basis elements.
//! * [`closure`]: commutator closure of generator sets, dimension counts and
//!   replayable derivation certificates.
//! * [`matrix`]: the dense Jordan–Wigner representation used as an oracle,
//!   plus trace decomposition and Hermitian exponentials.
//! * [`synthesis`]: closed-form basis gates, the exact commutator gate,
//!   product-formula synthesis and irrational-angle powers.
//!
//! With the default `parallel` feature the closure frontier and the oracle
//! sweeps run on rayon; every result is identical to the sequential path.

pub mod clifford;
pub mod closure;
mod error;
pub mod exec;
pub mod matrix;
pub mod synthesis;

pub use error::{Error, Result};
