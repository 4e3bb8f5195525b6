//! Antiprism triangulations of simplicial complexes.
//!
//! The crate builds `sd_A(Δ)` three independent ways (clique complex of the
//! pointed-face graph, multi-pointed ordered partitions, iterated crossing
//! operations), computes the polynomial families attached to it exactly,
//! and checks real-rootedness and interlacing with Sturm sequences.

pub mod complex;
pub mod enumeration;
pub mod error;
pub mod numbers;
pub mod polynomials;
pub mod realroot;
pub mod subdivision;

pub use complex::{face, FVector, Face, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use polynomials::IntPolynomial;
pub use subdivision::{CarrierMap, PointedFace, Subdivision};
