//! Command line front end for `chargekit`: the normative text grammars, the
//! report format and the bundled selftest.
//!
//! Exit codes: 0 ok, 1 mathematical violation or witness found, 2 parse
//! error, 3 range/semantic error.

pub mod commands;
pub mod report;
pub mod selftest;
pub mod text;
