//! Exact verification engine for preference aggregation under ambiguity.
//!
//! Agents hold Bewley (multi-prior) preferences: an affine utility over a
//! vector outcome space plus a polytope of priors over finitely many states.
//! The crate decides the Paretian axioms on concrete act pairs, decides the
//! representation-level conditions that characterize them, and builds
//! certified counterexample acts when a condition fails. All arithmetic is
//! exact rational arithmetic.

pub mod axioms;
pub mod characterizations;
pub mod cli;
pub mod document;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod preferences;
pub mod witnesses;

pub use error::{Error, Result};
