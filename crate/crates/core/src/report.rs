//! Verification reports shared by the library checks and the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub claim_id: String,
    pub status: Status,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn new(claim_id: impl Into<String>, ok: bool, witness: Value) -> Self {
        Report {
            claim_id: claim_id.into(),
            status: if ok { Status::Verified } else { Status::Failed },
            witness,
            runtime_ms: None,
        }
    }

    pub fn skipped(claim_id: impl Into<String>, reason: impl Into<String>) -> Self {
        Report {
            claim_id: claim_id.into(),
            status: Status::Skipped,
            witness: Value::String(reason.into()),
            runtime_ms: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable report")
    }
}
