//! Exact Schur-Weyl transform for `N` qudits of local dimension `n`.
//!
//! Matrix entries `⟨f|λ t y⟩` are computed as sums over paths in a levelled
//! graph of Gelfand-Tsetlin patterns, each edge weighted by a closed-form
//! Clebsch-Gordan coefficient of the fundamental representation. All
//! arithmetic is exact: entries are rational combinations of square roots.

pub mod calculus;
pub mod crystal;
pub mod error;
pub mod gt;
pub mod par;
pub mod radical;
pub mod tableaux;
pub mod text;
pub mod transform;
pub mod verify;

pub use calculus::{fundamental_element, OperatorElement};
pub use crystal::{
    amplitude, build_graph, column_amplitudes, path_count, BranchOrder, CrystalGraph, Edge,
    ElementQuery, Method,
};
pub use error::{Result, SwtError};
pub use gt::{GtPattern, ShiftVector};
pub use par::Execution;
pub use radical::{RadicalSum, Rational, SignedRadical};
pub use tableaux::{
    Configuration, Partition, PartitionChain, StandardTableau, SystemShape, WeightVector,
    WeylTableau,
};
pub use transform::{assemble, assemble_with, AssembleOptions, ColumnKey, SwMatrix};
