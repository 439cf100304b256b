//! Browser entry points. Each takes the polynomial as typed by the user and
//! returns a JSON string `{"ok", "text", "document"}`, where `document` has
//! the same shape as the command-line tool's `--json` output.

use quatfact_core::commands::{document, execute, Command, Options};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

fn respond(command: Command, input: &str, options: Options) -> String {
    let input = input.trim();
    let outcome = execute(command, input, options);
    let text = match &outcome {
        Ok(o) => o.text.clone(),
        Err(e) => format!("error: {e}\n"),
    };
    json!({
        "ok": outcome.is_ok(),
        "text": text,
        "document": document(command, input, &outcome),
    })
    .to_string()
}

/// One factorization, linear factors in ascending norm order.
#[wasm_bindgen]
pub fn factor(input: &str) -> String {
    let options = Options {
        canonical_order: true,
        show_signatures: true,
    };
    respond(Command::Factor, input, options)
}

/// One representative per equivalence class.
#[wasm_bindgen]
pub fn classes(input: &str) -> String {
    respond(Command::Classes, input, Options::default())
}

/// Span classification per norm quadratic and the uniqueness verdict.
#[wasm_bindgen]
pub fn rulings(input: &str) -> String {
    respond(Command::Rulings, input, Options::default())
}
