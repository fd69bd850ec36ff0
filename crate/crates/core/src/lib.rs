//! Exact invariants of normal surface singularities.
//!
//! A singularity germ is described by the weighted dual graph of the
//! exceptional locus of its minimal resolution. From that graph (and an
//! optional boundary divisor seen through the resolution) this crate
//! computes, in exact rational arithmetic:
//!
//! - the fundamental cycle `Z` and its arithmetic genus,
//! - the canonical cycle `Δ` and the boundary canonical cycle `Δ_B`,
//! - the thresholds `δ_y`, `δ_{B,y}`, `δ_min`, `δ`, `δ′` and the depth `μ`,
//! - the log-terminal / log-canonical predicates and the A/D/E shape,
//! - the continuant calculus of Hirzebruch-Jung chains.
//!
//! No floating point is used anywhere in the computations.

#![forbid(unsafe_code)]

pub mod classify;
pub mod continuant;
pub mod cycles;
pub mod enumerate;
mod error;
pub mod graph;
pub mod input;
pub mod invariants;
pub mod linalg;
pub mod rat;
pub mod report;

pub use classify::{Classification, Shape, SingularityKind};
pub use continuant::WeightChain;
pub use cycles::{BoundaryComponent, BoundaryData, CycleSet};
pub use error::{Error, Result};
pub use graph::{DualGraph, Edge, ExcDivisor, IntersectionMatrix, ValidGraph, Vertex};
pub use invariants::{DeltaMinResult, DeltaPrime, TheoremCheck};
pub use rat::Rat;
