//! Vertex splittable monomial ideals, vertex decomposable simplicial
//! complexes, and graded Betti numbers computed both recursively and from
//! reduced simplicial homology.

pub mod betti;
pub mod complex;
pub mod corpus;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod split;
pub mod suites;
pub mod text;

pub use betti::{BettiTable, Subject};
pub use complex::{SimplicialComplex, VertexSet};
pub use decompose::DecompositionTree;
pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::Field;
pub use monomial::{Monomial, MonomialIdeal};
pub use split::SplitTree;
