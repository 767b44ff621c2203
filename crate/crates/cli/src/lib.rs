//! Command-line front end for the `polystar` kernel: an expression language
//! for series over `{x0, x1}` and `Y`, and batch verbs built on it.

pub mod commands;
pub mod elab;
pub mod error;
pub mod expr;
pub mod parse;
pub mod report;

pub use commands::run;
pub use elab::{elaborate, Value};
pub use error::CliError;
pub use expr::{BinOp, Expr};
pub use parse::parse_expr;
