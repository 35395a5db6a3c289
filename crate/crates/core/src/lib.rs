//! Braid monodromy, group presentations and their invariants, and exact
//! trigonal-curve geometry for plane sextics obtained by the double covering
//! construction.

pub mod braid;
pub mod cli;
pub mod curvegeom;
pub mod error;
pub mod invariants;
pub mod notation;
pub mod presentation;
pub mod registry;
pub mod word;

pub use error::{Error, Result};
