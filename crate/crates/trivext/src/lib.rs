//! File formats, reports and the command line for `trivext-core`.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;

pub use format::{emit_presentation, parse_presentation, parse_presentation_with, ParseError, ParseErrorKind};
