//! Intersection matrices of closed-surface triangulations.
//!
//! Modules:
//! - [`complex`]: triangulations, the `.tri` format, surface validation and vertex stars.
//! - [`intersection`]: intersection matrices, the `.imat` format, intersection-preserving
//!   bijections and their extension to simplicial maps.
//! - [`cycles`]: n-cycle patterns, the link-type classifier and the exhaustive realization
//!   search.
//! - [`reconstruct`]: rebuilding a triangulation from its matrix and flagging the two
//!   projective-plane exceptions.
//! - [`catalog`]: the named fixture complexes.
//! - [`verify`]: corpus-level checks shared by the CLI and the acceptance tests.
//! - [`cli`]: the `trimatrix` command-line front end.

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod cycles;
pub mod error;
pub mod intersection;
pub mod reconstruct;
pub mod verify;

pub use complex::{Triangle, Triangulation, VertexLabel};
pub use cycles::CycleClass;
pub use error::{Error, Result};
pub use intersection::{ExtensionResult, IntersectionMatrix, TriangleBijection};
pub use reconstruct::{Ambiguity, ReconstructionResult};
