//! Expression parsing, printing, machine-readable output and the
//! verification harness behind the `mnov` command-line tool.

pub mod context;
pub mod json;
pub mod parse;
pub mod print;
pub mod sample;
pub mod table;
pub mod verify;
