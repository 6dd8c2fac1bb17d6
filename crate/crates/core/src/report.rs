//! Pass/fail records shared by every verification routine.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a verification report: `{"check": ..., "status": ..., "witness": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: Status,
    #[serde(default)]
    pub witness: Value,
}

impl CheckRecord {
    pub fn new(check: impl Into<String>, ok: bool, witness: Value) -> Self {
        CheckRecord {
            check: check.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report(pub Vec<CheckRecord>);

impl Report {
    pub fn push(&mut self, check: impl Into<String>, ok: bool, witness: Value) {
        self.0.push(CheckRecord::new(check, ok, witness));
    }

    pub fn extend(&mut self, other: Report) {
        self.0.extend(other.0);
    }

    pub fn all_passed(&self) -> bool {
        self.0.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.0.iter().filter(|r| !r.passed())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CheckRecord> {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn record_json_shape() {
        let r = CheckRecord::new("reflections-factor", true, json!({"k": 3}));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"check":"reflections-factor","status":"pass","witness":{"k":3}}"#);
        let back: CheckRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn report_is_a_plain_list() {
        let mut rep = Report::default();
        rep.push("a", true, Value::Null);
        rep.push("b", false, Value::Null);
        assert!(!rep.all_passed());
        assert_eq!(rep.failures().count(), 1);
        let text = serde_json::to_string(&rep).unwrap();
        assert!(text.starts_with('['));
    }
}
