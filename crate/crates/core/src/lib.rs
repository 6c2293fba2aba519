//! Exact computations in the graph W*-probability space of a finite directed
//! graph: the free semigroupoid, its generator algebra under two semantics,
//! diagonal-valued moments and cumulants over non-crossing partitions, and
//! checkers for semicircularity, R-diagonality, freeness and the free-product
//! decomposition into edge building blocks.

pub mod algebra;
pub mod analyzers;
pub mod cumulant;
pub mod error;
pub mod graph;
pub mod repr;
pub mod scalar;

pub use algebra::{AlgebraElement, DiagonalElement, NamedDiagonal};
pub use error::{Error, Result};
pub use graph::{parse_graph, Graph, PathWord};
pub use repr::{Backend, BackendKind, GeneratorSymbol, Monomial};
pub use scalar::Scalar;
