//! Exact toolkit for the maximum Wiener index of unicyclic graphs with a
//! prescribed matching number.
//!
//! The crate builds the named extremal families, evaluates every closed form
//! in exact rationals, implements the graph rewrites used to reach the
//! extremal structure, and confronts each bound with exhaustive enumeration
//! of all graphs up to isomorphism at small order.

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod random;
pub mod transforms;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{CycleInfo, Graph};
pub use matching::MatchingCertificate;
