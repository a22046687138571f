//! Command-line front end for `qhom-core`: operator files, verification
//! commands and their JSON-lines reports.

pub mod cli;
pub mod commands;
pub mod opfile;
pub mod report;
