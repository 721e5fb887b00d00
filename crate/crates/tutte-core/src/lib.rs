//! Exact computation of Tutte and Negami polynomials of multigraphs, and
//! evaluation of Tutte polynomials of glued graphs (n-sums) through splitting
//! formulas over the partition lattice of the shared vertices.
//!
//! The splitting machinery covers the singular regions where the classical
//! coefficient matrix is not invertible: the hyperbolas `(x-1)(y-1) = q` for
//! `q = 1, ..., n-1`, the line `x = 1`, and the line `y = 1` (where, for
//! `n >= 4`, the splitting is not even unique). All arithmetic is exact
//! rational; every splitting can be cross-checked against a direct
//! deletion-contraction computation.
//!
//! The crate is `no_std` (it requires `alloc`); IO, file formats, and the
//! command line live in the companion `tutte-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod graph;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod split;
pub mod tutte;

pub use error::Error;
pub use graph::{EdgeClass, Multigraph};
pub use matrix::Matrix;
pub use partition::{bell, stirling2, LatticeIndex, Partition};
pub use poly::{Assignment, MultiPoly, Var};
pub use rational::{parse_rational, rat, ratio, Rational};
pub use split::{CoeffMatrix, Connectivity, PreparedSplit, Region};

/// Largest ground set the partition lattice machinery accepts by default
/// (`Bell(6) = 203`).
pub const DEFAULT_MAX_GROUND: usize = 6;

/// Default cap on `|E(G)|` for the `2^|E|` subgraph-enumeration oracles.
pub const DEFAULT_MAX_ORACLE_EDGES: usize = 20;
