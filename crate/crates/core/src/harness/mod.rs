//! Random profiles, axiom fuzzing, and cross-validation of condition checkers
//! against brute-force axiom evaluation.

pub mod cross;
pub mod fuzz;
pub mod generate;
pub mod rng;

pub use cross::{cross_validate, cross_validate_with, Consistency, CrossConfig};
pub use fuzz::{fuzz_axiom, FuzzConfig, FuzzReport, FuzzViolation, Sampler};
pub use generate::{random_distribution, random_profile, random_simplex_point, GenParams, SocietyRuleTag, TasteMode};
pub use rng::SplitMix64;
