//! Spec files, command dispatch and reports for the `frobsep` binary.

pub mod commands;
pub mod error;
pub mod rational;
pub mod report;
pub mod spec;

pub use commands::{resolve_options, run_command, verify_report, Command};
pub use error::CliError;
pub use report::{Check, Report, Verdict, Witness};
pub use spec::{export_builtin, load_spec, parse_spec, SpecBody, SpecFile};
