//! Exact, deterministic deciders for properties of graphs and their edge
//! rings: unmixedness, perfectness, shellability of the independence complex,
//! Cohen–Macaulayness over fields of any characteristic, perfect r-matchings
//! and minimal clique covers.
//!
//! Vertices are labeled `1..=n` throughout.

pub mod cm;
pub mod complex;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod homology;
mod vertex_set;

pub use cm::{cm_characteristic_profile, cm_graph, hh_bipartite_cm, reisner_cm, CMReport, HHOrdering, Witness};
pub use complex::{independence_complex, is_shellable, FVector, ShellingOutcome, SimplicialComplex};
pub use cover::{
    basic_clique_cover, class_g_membership, degree_r_minus_1_vertices, has_unique_perfect_r_matching,
    pairwise_part_matchings, perfect_r_matchings, BasicCover, CliqueCover, RMatching,
};
pub use graph::{Graph, Partition, Relabel};
pub use homology::{boundary_matrices, rank_over, reduced_betti, BettiVector, BoundaryMatrix, FieldSpec};
pub use vertex_set::{VertexSet, MAX_VERTICES};
