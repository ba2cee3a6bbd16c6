//! Numerical and brute-force evidence. Nothing here is a proof; every report
//! states the finite setting it was computed in.

pub mod chaos;
pub mod clique;
pub mod completeness;

pub use chaos::{attractor_radius, chaos_game, AttractorSample};
pub use clique::{default_clique_j_max, max_orthogonal_clique, max_orthogonal_clique_capped, CliqueReport, DEFAULT_CANDIDATE_CAP};
pub use completeness::{completeness_defect, CompletenessReport};
