//! Exact uniform covers, connector decompositions and certified approximation
//! algorithms for TSP and 2-edge-connected spanning multigraphs on cubic and
//! subcubic graphs.
//!
//! All arithmetic is over arbitrary-precision rationals. Every construction
//! returns an artifact that can be re-verified independently of the code that
//! built it.

#![allow(clippy::needless_range_loop)]

pub mod approx;
pub mod classify;
pub mod connector;
pub mod cuts;
pub mod cycle_cover;
pub mod decomp;
pub mod error;
pub mod generators;
pub mod graph;
pub mod lp;
pub mod rational;
pub mod uniform;

pub use error::{Error, Result};
pub use graph::{EdgeMultiset, EdgeVector, Multigraph, NodeWeights};
pub use rational::Rat;
