//! Subcubic multigraphs, their exceptional families, exact feedback vertex
//! sets, and exhaustive checks of induced-forest bounds.

pub mod blocks;
pub mod canon;
pub mod catalog;
pub mod cycles;
pub mod enumerate;
pub mod errorfn;
pub mod families;
pub mod fvs;
pub mod graph;
pub mod io;
pub mod rational;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use catalog::{named, NamedGraph};
pub use families::FamilyIndex;
pub use fvs::FvsCertificate;
pub use graph::{EdgeId, GraphError, Multigraph, Vertex};
pub use rational::Rational;
