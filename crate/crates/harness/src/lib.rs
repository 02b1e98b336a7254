//! Exhaustive small-graph enumeration and empirical checks of theorems about
//! Cohen–Macaulay edge rings.

pub mod enumerate;
pub mod report;
pub mod verify;

pub use enumerate::{enumerate_graphs, enumerate_up_to, Filter, GraphEnsemble};
pub use verify::{
    converse_counterexample_search, verify_bipartite_equivalences, verify_implications,
    verify_main_theorem, verify_parts_equal_and_matched, verify_proposition_class_g,
    verify_uniqueness_corollary, Counterexample, TheoremVerdict,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("enumeration of {n}-vertex graphs exceeds the bound of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("r must be at least 1")]
    ZeroR,
}
