use std::collections::BTreeMap;

use clap::Parser;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::commands::{execute, Command, MapLoader, Outcome};
use crate::error::CliError;
use crate::report::InputDigest;
use crate::Cli;

const REGISTRY: &str = include_str!("registry.json");

#[derive(Debug, Deserialize)]
pub struct Case {
    pub name: String,
    pub description: String,
    /// In-memory input files referenced by `args`.
    pub files: BTreeMap<String, String>,
    pub args: Vec<String>,
    pub expected: Vec<Expectation>,
}

#[derive(Debug, Deserialize)]
pub struct Expectation {
    /// JSON pointer into the command result.
    pub path: String,
    pub value: Value,
}

#[derive(Serialize)]
struct Check<'a> {
    path: &'a str,
    expected: &'a Value,
    observed: Option<&'a Value>,
    passed: bool,
}

pub fn cases() -> Vec<Case> {
    serde_json::from_str(REGISTRY).expect("registry.json is valid")
}

pub fn reproduce(name: &str) -> Result<Outcome, CliError> {
    let all = cases();
    let Some(case) = all.iter().find(|c| c.name == name) else {
        let names: Vec<&str> = all.iter().map(|c| c.name.as_str()).collect();
        return Err(CliError::Usage(format!(
            "unknown case `{name}`; registered: {}",
            names.join(", ")
        )));
    };
    let cli = Cli::try_parse_from(
        std::iter::once("assprime").chain(case.args.iter().map(String::as_str)),
    )
    .map_err(|e| CliError::Usage(format!("registry args for `{name}`: {e}")))?;
    if matches!(cli.command, Command::Reproduce { .. }) {
        return Err(CliError::Usage(
            "registry cases cannot nest `reproduce`".into(),
        ));
    }
    let mut loader = MapLoader {
        files: &case.files,
        digest: InputDigest::default(),
    };
    let inner = execute(&cli.command, &mut loader)?;
    let checks: Vec<Check> = case
        .expected
        .iter()
        .map(|e| {
            let observed = inner.result.pointer(&e.path);
            Check {
                path: &e.path,
                expected: &e.value,
                observed,
                passed: observed == Some(&e.value),
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.passed);
    let result = json!({
        "case": case.name,
        "description": case.description,
        "args": case.args,
        "result": inner.result,
        "checks": checks,
        "all_pass": all_pass,
    });
    Ok(Outcome {
        result,
        caveats: inner.caveats,
        violation: inner.violation || !all_pass,
    })
}
