//! Library side of the `spectral` command: the triple file format, report
//! construction and rendering, and the command implementations.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use document::TripleDocument;
pub use error::{CliError, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
pub use report::{render_human, Report};
