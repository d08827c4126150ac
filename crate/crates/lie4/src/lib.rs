//! Verification front end: spec-file parsing, reports, the subcommands of
//! the `lie4` binary, and a finite-difference coordinate model used as an
//! independent numerical check.

pub mod commands;
pub mod coordinate_model;
pub mod report;
pub mod spec_file;
