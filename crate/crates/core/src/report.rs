//! Report model shared by scans and theorem reproductions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::gate::GateResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetListing {
    pub name: String,
    pub members: Vec<u32>,
}

impl SetListing {
    pub fn new(name: impl Into<String>, members: Vec<u32>) -> Self {
        Self {
            name: name.into(),
            members,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Set(Vec<u32>),
    Value(String),
}

impl std::fmt::Display for CheckValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckValue::Set(xs) => {
                let items: Vec<String> = xs.iter().map(u32::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            CheckValue::Value(v) => f.write_str(v),
        }
    }
}

/// A computed value compared against its published counterpart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCheck {
    pub name: String,
    pub expected: CheckValue,
    pub actual: CheckValue,
    pub pass: bool,
}

impl GoldenCheck {
    pub fn set(name: impl Into<String>, expected: &[u32], actual: &[u32]) -> Self {
        Self {
            name: name.into(),
            pass: expected == actual,
            expected: CheckValue::Set(expected.to_vec()),
            actual: CheckValue::Set(actual.to_vec()),
        }
    }

    pub fn value(
        name: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Self {
            name: name.into(),
            pass: expected == actual,
            expected: CheckValue::Value(expected),
            actual: CheckValue::Value(actual),
        }
    }

    /// Human-readable difference; empty when the check passes.
    pub fn diff(&self) -> String {
        if self.pass {
            return String::new();
        }
        match (&self.expected, &self.actual) {
            (CheckValue::Set(exp), CheckValue::Set(act)) => {
                let missing: Vec<u32> = exp.iter().filter(|m| !act.contains(m)).copied().collect();
                let extra: Vec<u32> = act.iter().filter(|m| !exp.contains(m)).copied().collect();
                format!(
                    "{}: missing {} unexpected {}",
                    self.name,
                    CheckValue::Set(missing),
                    CheckValue::Set(extra)
                )
            }
            _ => format!(
                "{}: expected {} got {}",
                self.name, self.expected, self.actual
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generated_at: Option<String>,
    pub inputs: BTreeMap<String, String>,
    pub sets: Vec<SetListing>,
    pub rows: Vec<GateResult>,
    pub surviving_set: Vec<u32>,
    pub checks: Vec<GoldenCheck>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            generated_at: None,
            inputs: BTreeMap::new(),
            sets: Vec::new(),
            rows: Vec::new(),
            surviving_set: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) {
        self.inputs.insert(key.to_string(), value.to_string());
    }

    pub fn set(&self, name: &str) -> Option<&[u32]> {
        self.sets
            .iter()
            .find(|s| s.name == name)
            .map(|s| s.members.as_slice())
    }

    pub fn check(&self, name: &str) -> Option<&GoldenCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn golden_ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &GoldenCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Sorts rows by `(m, u, t)`, drops repeated gates, and sorts every set.
    pub fn normalize(&mut self) {
        self.rows.sort_by_key(|r| (r.m, r.u, r.t));
        self.rows.dedup_by_key(|r| (r.m, r.u, r.t));
        self.surviving_set.sort_unstable();
        self.surviving_set.dedup();
        for s in &mut self.sets {
            s.members.sort_unstable();
            s.members.dedup();
        }
    }
}
