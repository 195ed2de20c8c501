//! Verification of the constructions: symbolic identities, homology, Ext.

pub mod basis;
pub mod checks;
pub mod ext;
pub mod homology;
pub mod lemmas;

pub use checks::{check_chain_maps, check_q_is_power, check_d_squared, check_homogeneity, check_splitting, verify_resolution, Report, Status};
pub use homology::{homology_dims, homology_dims_multi, HomologyCell, HomologyTable, SummandBasis, DEFAULT_CUTOFF, SIZE_GUARD};
pub use ext::{ext_compute, hom_direct, hom_direct_range, ExtReport, ExtRow};
pub use lemmas::{degree_formulas, lemma_suite, lemma_suite_with, LemmaConfig};
