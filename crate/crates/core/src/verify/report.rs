//! Audit outcomes.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one audit item. `Erratum` is reserved for a printed fixture
/// that disagrees with the determinant construction while the construction
/// agrees with the recurrence oracle; `Fail` means the construction itself
/// is wrong somewhere and must stop the build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Erratum,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Erratum => write!(f, "ERRATUM"),
            Status::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub subject: String,
    pub status: Status,
    pub details: String,
    /// Oracle-confirmed replacement, present on every erratum.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub corrected: Option<String>,
}

impl VerifyReport {
    pub fn pass(subject: String, details: String) -> VerifyReport {
        VerifyReport {
            subject,
            status: Status::Pass,
            details,
            corrected: None,
        }
    }

    pub fn erratum(subject: String, details: String, corrected: String) -> VerifyReport {
        VerifyReport {
            subject,
            status: Status::Erratum,
            details,
            corrected: Some(corrected),
        }
    }

    pub fn fail(subject: String, details: String) -> VerifyReport {
        VerifyReport {
            subject,
            status: Status::Fail,
            details,
            corrected: None,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:7} {}: {}", self.status, self.subject, self.details)?;
        if let Some(corrected) = &self.corrected {
            write!(f, " [corrected: {corrected}]")?;
        }
        Ok(())
    }
}
