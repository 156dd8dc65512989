//! Exact arithmetic for the numerical invariants of the modular categories
//! `so(2r)_{2r}` (type D) and `so(2b+1)_{2b+1}` (type B).
//!
//! Everything is computed in cyclotomic fields with big-rational
//! coefficients: twists, quantum dimensions, Gauss sums, central charges,
//! global dimensions and the Witt signature homomorphism
//! `σ ↦ sgn(σ(√dim))`. Signs of totally real values are certified by
//! symbolic zero tests plus rigorous interval refinement, never by
//! floating point alone.
//!
//! Module map:
//! - [`exact`]: cyclotomic numbers, Galois actions, certified signs,
//!   Jacobi symbols, Bezout/CRT.
//! - [`roots`]: root-system data for types B/D, alcove enumeration and
//!   the root-counting functions `d_count` / `c_count`.
//! - [`invariants`]: per-category data (twists, quantum dimensions,
//!   T-order, Gauss sums, central charges) and the exact `√dim` product
//!   formulas.
//! - [`signature`]: the signature homomorphism for both families plus
//!   verifiers for the periodicity, sign and independence claims.
//! - [`anisotropy`]: the end-to-end exclusion pipeline showing that the
//!   local-module category of `so(8)_8` admits no nontrivial connected
//!   étale algebra.

pub mod anisotropy;
mod error;
pub mod exact;
pub mod invariants;
pub mod report;
pub mod roots;
pub mod signature;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
