//! Exact sparse vector spaces over enumerable bases.
//!
//! Spaces are built from atom spaces (a universe of individuals), powerset
//! spaces, tensor products and the unit. Every space carries a fixed
//! orthonormal basis, so duals are identified with the space itself and
//! compact closure reduces to a single pair of maps [`epsilon`] and [`eta`].

mod bialgebra;
pub mod laws;
mod map;
mod space;
mod vector;

pub use bialgebra::{delta, iota, merge_with, mu, quant_all, quant_some, zeta};
pub use map::{
    assoc, assoc_inv, compose, epsilon, eta, factors, identity, map_tensor, pipeline, swap, unit_left, unit_left_inv,
    unit_right, unit_right_inv, LinearMap,
};
pub use space::{BasisElem, Space, SpaceKind, Universe, POWER_CAP};
pub use vector::{inner, tensor, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FvectError {
    #[error("space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: String, found: String },
    #[error("basis element {elem} is not in {space}")]
    NotInSpace { elem: String, space: String },
    #[error("expected {expected}, found {found}")]
    WrongKind { expected: &'static str, found: String },
    #[error("powerset over a base of dimension {base_dim} exceeds the enumeration cap of {cap}")]
    TooLarge { base_dim: usize, cap: usize },
    #[error("unknown individual `{0}`")]
    UnknownLabel(String),
    #[error("duplicate individual `{0}`")]
    DuplicateLabel(String),
    #[error("matrix has no column for {0}")]
    IncompleteMatrix(String),
    #[error("empty pipeline")]
    EmptyPipeline,
}
