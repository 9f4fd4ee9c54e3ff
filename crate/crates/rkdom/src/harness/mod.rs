//! Corpus enumeration, canonical forms, and theorem-by-theorem verification.

mod canon;
mod enumerate;
mod verify;

pub use canon::{corpus_key, permutation_min_key, tree_key};
pub use enumerate::{
    enumerate_connected, enumerate_trees, random_tree, tree_from_pruefer, MAX_CONNECTED_N,
    MAX_TREE_N,
};
pub use verify::{
    bound_table, extremal_branch_kinds, is_c5, subdivide_pendants_at, verify_theorem,
    BoundTableRow, CorpusKind, ExtremalHit, Skipped, TheoremId, TheoremReport, VerifyGrid,
    Violation,
};

use thiserror::Error;

use crate::constructions::ConstructError;
use crate::families::FamilyError;
use crate::labeling::LabelingError;
use crate::solvers::SolveError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("corpus size {requested} out of supported range (max {max})")]
    UnsupportedSize { requested: usize, max: usize },
    #[error("no canonical key for this graph (n = {n}, not a tree)")]
    KeyUnsupported { n: usize },
    #[error("bad verification grid: {0}")]
    BadGrid(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}
