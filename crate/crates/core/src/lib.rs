//! Tamari-compatible triangulations of the associahedron and the permutohedron.
//!
//! The associahedron `K^n` is realized as the convex hull of the integer points
//! `M(t)` of planar binary trees with `n + 1` internal vertices. It is
//! triangulated recursively as a cone with apex the right comb over the faces
//! `γ(a; p, q)` with `a ≥ 1`, each of which is a product `K^p × K^q`
//! triangulated by staircases indexed by `(p, q)`-shuffles. Every top simplex
//! carries a parking-function label, and the labelling is a bijection onto
//! the parking functions of length `n`.
//!
//! The same cone/staircase construction applied to the permutohedron gives
//! the simplices counted by [`permutohedron::zp_count`].
//!
//! All validation is done in exact integer arithmetic, see [`geometry`].

pub mod assoc;
pub mod complex;
mod error;
pub mod geometry;
pub mod numbers;
pub mod parking;
pub mod permutohedron;
pub mod rng;
pub mod shuffles;
pub mod trees;

pub use complex::{Face, PolytopeKind, Recipe, Simplex, Triangulation, Vertex, VertexKey};
pub use error::{Error, Result};
pub use parking::{ParkingFunction, PiDecomposition};
pub use shuffles::Shuffle;
pub use trees::Tree;
