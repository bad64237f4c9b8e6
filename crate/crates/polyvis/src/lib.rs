//! File formats, report output and the command-line front end for
//! `polyvis-core`.

pub mod cli;
pub mod formats;
pub mod json;
pub mod report;
