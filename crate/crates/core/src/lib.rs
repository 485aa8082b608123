//! Reduced Euler characteristics of simplicial complexes.
//!
//! Complexes are given by a vertex universe and their facets. The [`engine`]
//! computes the reduced Euler characteristic with the BCRT and DBMS
//! divide-and-conquer algorithms; [`oracle`] holds brute-force references.
//! The remaining modules generate benchmark families, build the counting
//! reductions, translate to square-free monomial ideals and read and write
//! the file formats used by the `eulerchar` binary.

pub mod cli;
pub mod complex;
pub mod engine;
pub mod error;
pub mod face;
pub mod format;
pub mod generators;
pub mod oracle;
pub mod reductions;
pub mod translation;
mod union_find;
pub mod value;

pub use complex::{codisjoint, Complex};
pub use engine::{euler, Algorithm, EngineConfig, EngineStats, PivotStrategy};
pub use error::{Error, Result};
pub use face::Face;
pub use value::EulerValue;
