//! Text format, subcommands and verification suites behind the `monideal`
//! binary.

pub mod commands;
pub mod format;
pub mod verify;

pub use commands::CliError;
pub use format::{AntichainDocument, Role};
