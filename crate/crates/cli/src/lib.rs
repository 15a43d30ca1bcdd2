//! Instance files, specializations and the `toric` subcommands on top of
//! [`toric_core`].

pub mod commands;
pub mod error;
pub mod expr;
pub mod instance;
pub mod sampling;

pub use commands::{Options, SpecSource};
pub use error::{CliError, CliResult};
pub use instance::{Instance, InstanceFile};
