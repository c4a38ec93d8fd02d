//! Exact root-system combinatorics, weight systems and moment-map
//! invariants for reductive group actions.

pub mod cli;
pub mod error;
pub mod hamilton;
pub mod largeness;
pub mod linalg;
pub mod report;
pub mod repthy;
pub mod rootset;
pub mod rootsys;
pub mod subsys;
pub mod weyl;

pub use error::{Error, Result};
