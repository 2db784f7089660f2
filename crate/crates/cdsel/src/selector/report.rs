//! The machine-readable selection report. Field and entry order is
//! deterministic, so identical inputs serialize byte-identically.

use super::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ReportConfig {
    pub model_size: usize,
    pub domain_size: usize,
    pub budget_secs: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckRecord {
    pub property: String,
    pub op: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateStatus {
    Valid,
    Rejected,
    Vacuous,
    TimedOut,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CandidateReport {
    pub container: String,
    pub status: CandidateStatus,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct DeclarationReport {
    pub type_name: String,
    pub bounds: Vec<String>,
    /// Containers that pass the syntactic filter, in catalogue order.
    pub syntactic_candidates: Vec<String>,
    pub candidates: Vec<CandidateReport>,
    /// Candidates with every check valid.
    pub valid: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SelectionReport {
    pub config: ReportConfig,
    pub declarations: Vec<DeclarationReport>,
}

impl SelectionReport {
    pub fn declaration(&self, type_name: &str) -> Option<&DeclarationReport> {
        self.declarations.iter().find(|d| d.type_name == type_name)
    }

    /// Every declaration has at least one valid implementation.
    pub fn all_satisfied(&self) -> bool {
        self.declarations.iter().all(|d| !d.valid.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("selection reports serialize")
    }

    pub fn from_json(s: &str) -> Result<SelectionReport, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// One line per (candidate, property, op) verdict, for terminal output.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for decl in &self.declarations {
            out.push_str(&format!(
                "{}: {} syntactic candidate(s), valid = [{}]\n",
                decl.type_name,
                decl.syntactic_candidates.len(),
                decl.valid.join(", ")
            ));
            for cand in &decl.candidates {
                let status = match cand.status {
                    CandidateStatus::Valid => "valid",
                    CandidateStatus::Rejected => "rejected",
                    CandidateStatus::Vacuous => "vacuous",
                    CandidateStatus::TimedOut => "timed out",
                    CandidateStatus::Error => "error",
                };
                out.push_str(&format!("  {}: {status}\n", cand.container));
                for check in &cand.checks {
                    if !check.verdict.is_valid() {
                        out.push_str(&format!(
                            "    {} x {}: {}\n",
                            check.property,
                            check.op,
                            check.verdict.label()
                        ));
                    }
                }
            }
        }
        out
    }
}
