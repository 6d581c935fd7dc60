//! Bundled scenarios, each stored as a document in the same grammar users
//! write. `builtin_scenario` parses on demand, so the bundled files go
//! through exactly the validation path external files do.

use crate::cli::document::{build, parse_document};
use crate::error::{Error, Result};
use crate::rgroup::{FamilyPolicy, Scenario};

pub const BUILTIN_NAMES: [&str; 8] = [
    "trivial-g",
    "trivial-levi",
    "z2-corank1",
    "klein4",
    "z4-rot",
    "q8-klein",
    "a2-full",
    "b2-delta",
];

pub fn builtin_text(name: &str) -> Result<&'static str> {
    match name {
        "trivial-g" => Ok(include_str!("builtins/trivial-g.toml")),
        "trivial-levi" => Ok(include_str!("builtins/trivial-levi.toml")),
        "z2-corank1" => Ok(include_str!("builtins/z2-corank1.toml")),
        "klein4" => Ok(include_str!("builtins/klein4.toml")),
        "z4-rot" => Ok(include_str!("builtins/z4-rot.toml")),
        "q8-klein" => Ok(include_str!("builtins/q8-klein.toml")),
        "a2-full" => Ok(include_str!("builtins/a2-full.toml")),
        "b2-delta" => Ok(include_str!("builtins/b2-delta.toml")),
        other => Err(Error::UnknownBuiltin(other.to_string())),
    }
}

pub fn builtin_scenario(name: &str, policy: Option<FamilyPolicy>) -> Result<Scenario> {
    let doc = parse_document(builtin_text(name)?)?;
    build(&doc, policy)
}
