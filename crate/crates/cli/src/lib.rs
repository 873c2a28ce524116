//! Library side of the `pdg-verify` harness: named checks, default
//! parameter sweeps and reports.

pub mod checks;
pub mod config;
pub mod error;
pub mod report;

pub use checks::{plan, plan_all, run, run_spec, CheckSpec, Command, Flags};
pub use config::Config;
pub use error::CliError;
pub use report::{all_passed, table, to_json, Report, Status};
