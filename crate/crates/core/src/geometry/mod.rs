//! Exact rational geometry: vectors, LP, vertex-represented polytopes,
//! separation and facet enumeration.

pub mod hrep;
pub mod lp;
pub mod polytope;
pub mod vector;

pub use hrep::{hrep_vertices, intersect, lp_solve, vrep_to_hrep, HRep, DEFAULT_DIM_CAP};
pub use lp::{LinearProgram, LpOutcome, Relation};
pub use polytope::{
    hulls_intersect, membership, membership_weights, remove_redundant, separate, support, support_vertex,
    Hyperplane, Polytope,
};
pub use vector::{format_decimal, format_rational, int, parse_rational, rank, rat, Rational, Vector};
