use std::fs;
use std::io::Write;

use serde_json::Value;

use crate::{Cli, Format};

/// A finished report in every format the command supports.
pub struct Outcome {
    pub pass: bool,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
}

pub fn emit(cli: &Cli, o: &Outcome) -> Result<(), String> {
    let body = match cli.format {
        Format::Text => o.text.clone(),
        // Value objects are key-sorted maps.
        Format::Json => serde_json::to_string_pretty(&o.json).map_err(|e| e.to_string())? + "\n",
        Format::Csv => o.csv.clone().ok_or("this command has no CSV form")?,
    };
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}
