//! Exact visibility graphs of simple polygons, ordered-graph and 0-1 matrix
//! forbidden-structure detectors, Davenport-Schinzel machinery, and
//! self-checking audits of the extremal bounds for K_{t,t}-free visibility
//! graphs.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line front end live in the companion `polyvis` crate.
#![no_std]

extern crate alloc;

pub mod audits;
pub mod budget;
pub mod ds;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod matrix;
pub mod ordered;
mod predicates;
pub mod visibility;

pub use budget::{Budget, DEFAULT_NODE_BUDGET};
