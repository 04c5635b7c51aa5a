//! Library surface of the workbench CLI.
//!
//! Holds the structure file format and the DOT export, shared by the
//! `cubic` binary and its tests.

pub mod dot;
pub mod io;
