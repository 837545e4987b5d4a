//! Subgroup generating bipartite graphs of finite cyclic groups.
//!
//! For `G = Z_n` the graph `B(G)` joins every ordered pair `(a, b)` to the
//! subgroup it generates, which makes it a disjoint union of stars. The crate
//! builds that star decomposition two ways (divisor lattice and brute force),
//! computes Zagreb and degree-based indices, the A/L/Q/CN spectra exactly and
//! numerically, the four graph energies, and checks all of it against a
//! catalog of family-specific closed forms.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod group;
pub mod indices;
pub mod par;
pub mod report;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
