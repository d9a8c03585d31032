//! Line-oriented helpers shared by the automaton and grammar text formats.

use std::collections::HashMap;

use crate::{Error, Result};

/// A non-empty input line with comments stripped.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.number, 1, message)
    }

    /// Splits `key: rest` when the key is a bare identifier.
    pub fn header(&self) -> Option<(&'a str, &'a str)> {
        let (key, rest) = self.text.split_once(':')?;
        let key = key.trim();
        is_name(key).then_some((key, rest.trim()))
    }
}

/// Iterates over meaningful lines; `#` starts a comment and `;` separates
/// statements on one line.
pub(crate) fn lines(input: &str) -> impl Iterator<Item = Line<'_>> {
    input.lines().enumerate().flat_map(|(i, raw)| {
        let raw = raw.split('#').next().unwrap_or("");
        raw.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(move |text| Line { number: i + 1, text })
    })
}

pub(crate) fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whitespace- or comma-separated identifiers.
pub(crate) fn names<'a>(line: &Line<'_>, rest: &'a str) -> Result<Vec<&'a str>> {
    let out: Vec<&str> = rest
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = out.iter().find(|s| !is_name(s)) {
        return Err(line.error(format!("invalid name `{bad}`")));
    }
    Ok(out)
}

/// Name-to-index table for the `states:` header of the automaton formats.
#[derive(Debug, Default)]
pub(crate) struct StateTable {
    pub names: Vec<String>,
    index: HashMap<String, usize>,
}

impl StateTable {
    pub fn declare(&mut self, line: &Line<'_>, name: &str) -> Result<usize> {
        if self.index.contains_key(name) {
            return Err(line.error(format!("state `{name}` declared twice")));
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn lookup(&self, line: &Line<'_>, name: &str) -> Result<usize> {
        self.index
            .get(name.trim())
            .copied()
            .ok_or_else(|| line.error(format!("undeclared state `{}`", name.trim())))
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
