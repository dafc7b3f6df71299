//! Resolving sets, metric dimension and doubly resolving sets.
//!
//! The crate covers finite graphs exactly and two families of finitely
//! described infinite graphs by reducing every infinite check to a finite
//! certificate:
//!
//! * [`rayed`]: a finite core with pendant one-way infinite rays,
//! * [`tail`]: `P_∞ □ H` and `P_2∞ □ H` for a finite graph `H`.
//!
//! [`trees`] adds the branch-path dimension formula for finite and rayed
//! trees. Exact searches and sweeps run on rayon when the `parallel` feature
//! is enabled (the default) and sequentially otherwise; results are the same
//! either way.

pub mod catalogue;
pub mod error;
pub mod graph;
pub mod par;
pub mod rayed;
pub mod resolver;
mod search;
pub mod tail;
pub mod trees;

pub use error::{Error, Result};
pub use graph::{cartesian_product, make_family, Family, FiniteGraph, Verdict, VertexId, VertexPair};
