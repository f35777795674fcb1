//! Command-line front end: expression parsing, dispatch and output.

pub mod algebra;
pub mod commands;
pub mod expr;
pub mod output;

pub use commands::{run_args, Outcome};
