//! Session files, commands and report emission for the `jumploci` binary.

pub mod commands;
pub mod emit;
pub mod error;
pub mod session;

pub use commands::{run_command, Command, Outcome, RunOptions};
pub use emit::{emit, Format};
pub use error::{CliError, Result};
pub use session::{parse_session, Options, ParseError, Session};
