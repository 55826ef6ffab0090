//! Distance partitions and distance-residual graphs.
//!
//! For a connected graph `G` and a root vertex set `V_0`, the distance
//! partition groups vertices by their distance from the root. The induced
//! subgraph on the farthest class is the *distance-residual graph*. This
//! crate computes these objects, builds the four standard graph products
//! (Cartesian, strong, lexicographic, direct), provides closed-form residuals
//! of products in terms of their factors, and checks the closed forms against
//! brute-force BFS on randomly sampled instances.
//!
//! Supporting machinery: an exact isomorphism test and automorphism-orbit
//! computation (colour refinement plus individualization), a catalog of named
//! graphs, and graph6 / DOT / JSON input and output.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod metrics;
pub mod products;
pub mod rng;
pub mod theorems;
pub mod verify;

pub use catalog::{from_lcf, from_lcf_chords, named, CatalogEntry, CATALOG};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use iso::{
    are_isomorphic, automorphism_orbits, is_edge_transitive, is_semisymmetric,
    is_vertex_transitive, IsoCertificate, OrbitPartition,
};
pub use metrics::{
    distance_partition, distance_sequence, growth_polynomial, is_growth_regular, residual,
    DistancePartition, DistanceSequence, ResidualResult,
};
pub use products::{
    direct_distance, product, product_many, walk_length_profile, ProductKind, WalkLengthProfile,
};
pub use theorems::TheoremId;
pub use verify::{verify, VerificationReport, VerifyOptions};
