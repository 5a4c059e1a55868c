//! Split graphs, minimal set covers, XY-graphs and bipartite posets:
//! balance classification, the bijections between the four classes,
//! the compilation maps, and exhaustive unlabeled enumeration.

pub mod biject;
pub mod canon;
pub mod classify;
pub mod cli;
pub mod coverage;
pub mod enumerate;
pub mod error;
pub mod model;
pub mod verify;

pub use error::{DomainError, Error, Result};
pub use model::{BipartitePoset, ClassTag, Graph, KSPartition, Object, SetCover, XYGraph};
