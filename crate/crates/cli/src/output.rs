//! Document assembly. Every command emits exactly one newline-terminated
//! document; the JSON rendering is canonical (keys sorted, compact
//! separators) so identical inputs produce identical bytes.

use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// What a command hands back to the process shell: the document for standard
/// output, and for verify-style commands whether the property held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub holds: Option<bool>,
}

impl CommandOutput {
    pub fn document(stdout: String) -> CommandOutput {
        CommandOutput {
            stdout,
            holds: None,
        }
    }

    pub fn verdict(stdout: String, holds: bool) -> CommandOutput {
        CommandOutput {
            stdout,
            holds: Some(holds),
        }
    }
}

/// Canonical JSON document: `{"command":…,"parameters":…,"result":…,
/// "schema_version":1}` plus a trailing newline. serde_json maps are
/// BTree-backed, so nested keys serialize sorted as well.
pub fn json_document(command: &str, parameters: Value, result: Value) -> String {
    let doc = json!({
        "command": command,
        "parameters": parameters,
        "result": result,
        "schema_version": SCHEMA_VERSION,
    });
    let mut rendered = serde_json::to_string(&doc).expect("documents are plain data");
    rendered.push('\n');
    rendered
}

/// Joins already-rendered lines into a newline-terminated block.
pub fn text_document(lines: &[String]) -> String {
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
