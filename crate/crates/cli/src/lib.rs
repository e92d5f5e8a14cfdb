//! Command-line surface of the exact Hopf-algebra toolkit: the scalg file
//! format and the verify / centre / double / crosscheck commands.

pub mod commands;
pub mod format;

pub use commands::{execute, Command, EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK};
pub use format::{parse_scalg, serialize, ObjectData, ParseError, ScalgDocument, ScalgObject};
