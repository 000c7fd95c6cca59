//! Solvers for total domination and total Roman domination on geometric
//! unit disk graphs.
//!
//! The crate provides:
//!
//! * [`geometry`] — point sets, unit disk graph construction, and the
//!   grid-cell buckets used for fixed-radius neighbor queries;
//! * [`mis`] — grid-accelerated greedy maximal independent set;
//! * [`setcover`] — set-cover instances over an independent set, the greedy
//!   cover with the harmonic-number guarantee, and a small exact oracle;
//! * [`approx`] — the two set-cover based approximation algorithms and
//!   their solution verifiers;
//! * [`exact`] — exponential exact oracles for the domination parameters on
//!   small instances;
//! * [`reduction`] — the grid-graph-to-UDG gadget construction with
//!   solution mappings in both directions;
//! * [`io`] — the JSON instance, grid, solution, and role-sidecar formats;
//! * [`generator`] — seeded random instance sampling.

pub mod approx;
pub mod error;
pub mod exact;
pub mod generator;
pub mod geometry;
pub mod io;
pub mod mis;
pub mod reduction;
pub mod setcover;

pub use error::{Error, Result};
