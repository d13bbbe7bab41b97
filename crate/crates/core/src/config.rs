//! Named parameter sets stored as JSON:
//! `{ "name": {"a": .., "b": .., "lambda": .., "beta": .., "gamma": .., "tau": ..} }`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::bmw::ParamValues;
use crate::error::{Error, Result};

pub type ParamSets = BTreeMap<String, ParamValues>;

pub fn parse_param_sets(json: &str) -> Result<ParamSets> {
    serde_json::from_str(json).map_err(|e| Error::Config(format!("invalid parameter file: {e}")))
}

pub fn load_param_sets(path: &Path) -> Result<ParamSets> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_param_sets(&text)
}

pub fn load_param_set(path: &Path, name: &str) -> Result<ParamValues> {
    let sets = load_param_sets(path)?;
    sets.get(name).copied().ok_or_else(|| {
        let known: Vec<&str> = sets.keys().map(String::as_str).collect();
        Error::Config(format!(
            "no parameter set '{name}' (available: {})",
            known.join(", ")
        ))
    })
}
