//! Support code for the `fqh` command-line tool: run configuration, parallel
//! sweeps, CSV/JSON/SVG output, figure definitions and the verification suite.

pub mod config;
pub mod figure;
pub mod output;
pub mod sweep;
pub mod verify;

pub use config::{OutputFormat, RunConfig, Units};
