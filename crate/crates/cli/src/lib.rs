//! Command-line front end: the structure file format, the subcommands, and
//! the seeded fuzzer.

pub mod app;
pub mod format;
pub mod fuzz;
