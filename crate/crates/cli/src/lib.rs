//! Command-line front end for the resolvability library: argument handling,
//! label grammar for the product families, and the canonical output
//! documents (JSON, text, DOT, and a parsable edge-list format).

#![forbid(unsafe_code)]

pub mod commands;
pub mod edgefmt;
pub mod family;
pub mod output;

pub use commands::{cmd_build, cmd_construct, cmd_search, cmd_table, cmd_verify};
pub use family::{FamilyKind, FamilySpec, Format, Parameter, Property};
pub use output::{json_document, text_document, CommandOutput, SCHEMA_VERSION};
