//! Hypermaps in three encodings (flag involutions, half-edge permutations,
//! edge-colored graphs), partial duality in each, conversions between them,
//! isomorphism testing, and a randomized property suite.
//!
//! Element labels are 1-based throughout; permutations compose right to
//! left, so `p.compose(&q)` applies `q` first.

pub mod colored;
pub mod convert;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod io;
pub mod isomorphism;
pub mod model;
pub mod perm;
pub mod rng;
pub mod sigma;
pub mod tau;

pub use colored::{parse_color_permutation, Bubble, ColoredGraph};
pub use convert::{
    colored_to_tau, minus_flag, plus_flag, sigma_to_colored, sigma_to_tau, tau_to_colored,
    tau_to_sigma, OrientedView,
};
pub use error::{Error, Result};
pub use harness::{
    random_flag_hypermap, random_oriented_hypermap, run_fixture_suite, run_property_suite,
    Dualizer, Report, SuiteConfig,
};
pub use io::{export_dot, Document};
pub use isomorphism::{are_isomorphic, canonical_form, CanonicalForm};
pub use model::{Cell, CellRef, CellType, SurfaceInfo};
pub use perm::{orbits, CycleDecomposition, Permutation, Restriction};
pub use rng::Lcg64;
pub use sigma::OrientedHypermap;
pub use tau::FlagHypermap;
