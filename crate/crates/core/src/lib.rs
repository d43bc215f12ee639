//! Exact rational computational topology for Leray numbers of simplicial
//! projections, multiple-point complexes and Helly-type theorems.

pub mod cli;
pub mod complex;
pub mod error;
pub mod harness;
pub mod helly;
pub mod homology;
pub mod icss;
pub mod io;
pub mod leray;
pub mod linalg;
pub mod multiproj;

pub use complex::{Simplex, SimplicialComplex};
pub use error::{Error, Result};
