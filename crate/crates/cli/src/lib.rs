//! Command-line front end: expression parsing, printing and the `factor`
//! command.

pub mod app;
pub mod expr;
pub mod text;

pub use app::{run, Args, EXIT_INPUT, EXIT_INTERNAL, EXIT_OK};
