//! Outcome of a verification suite, serialized as
//! `{check, kind, params, pass, counterexample?}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::lattice::RootSystemKind;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub kind: String,
    pub params: BTreeMap<String, Value>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Report {
    pub fn new(check: &str, kind: RootSystemKind) -> Self {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), Value::from(kind.n()));
        Report {
            check: check.to_string(),
            kind: kind.family().label().to_string(),
            params,
            pass: true,
            counterexample: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl Into<Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    /// Records a failure. Only the first counterexample is kept.
    pub fn fail(&mut self, counterexample: impl FnOnce() -> String) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(counterexample());
        }
    }

    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        if !ok {
            self.fail(counterexample);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {} {}", self.check, self.kind)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}
