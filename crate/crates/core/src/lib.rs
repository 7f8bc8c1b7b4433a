//! Simplicial sets with their causal orientation.
//!
//! The crate represents simplicial sets in Eilenberg–Zilber normal form,
//! builds products and quotients of the directed line `Ξ` and its powers
//! by subgroups of `ℤⁿ⋊Σₙ`, decides when a flat compact conal manifold
//! admits a triangulation by such a quotient, and computes the causal
//! preorders that stream realizations carry on finite query regions.
//!
//! Modules:
//!
//! - [`simplicial`]: simplices, face/degeneracy evaluation, the finite and
//!   rule-based presentations, products, identity checks, f-vectors.
//! - [`group`]: exact arithmetic in `ℤⁿ⋊Σₙ`, translation lattices in
//!   Hermite normal form, orbit canonicalization and quotients `Ξⁿ/G`.
//! - [`cone`]: exact rational cone predicates, extremal rays, conal
//!   isometry factorization and the triangulability verdict.
//! - [`stream`]: canonical points of realizations, region-restricted
//!   preorders, the line comparison `|Ξ| ≅ ℝ` and the geometric oracle on
//!   `ℝⁿ/G`.
//! - [`cli`]: the command surface behind the `streamtri` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod cone;
pub mod error;
pub mod group;
pub mod linalg;
pub mod rational;
pub mod simplicial;
pub mod stream;

pub use error::{Error, Result};
pub use rational::Q;
