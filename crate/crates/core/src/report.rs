//! Verification reports: per-item verdicts with strategy and seed metadata,
//! serializable as JSON (schema versioned with the tool).

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub const REPORT_SCHEMA: &str = "qmads.report/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exact zero in the free algebra (no quotient needed).
    ZeroExact,
    InIdeal,
    NotInIdeal,
    NonzeroWitness,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::ZeroExact | Verdict::InIdeal)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ZeroExact => "zero-exact",
            Verdict::InIdeal => "in-ideal",
            Verdict::NotInIdeal => "NOT-in-ideal",
            Verdict::NonzeroWitness => "NONZERO",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub strategy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub elapsed_ms: u64,
}

impl ReportItem {
    pub fn new(id: impl Into<String>, verdict: Verdict) -> Self {
        ReportItem {
            id: id.into(),
            verdict,
            detail: None,
            strategy: "exact-symbolic".into(),
            seed: None,
            degree: None,
            order: None,
            elapsed_ms: 0,
        }
    }

    pub fn with_strategy(mut self, label: String, seed: Option<u64>) -> Self {
        self.strategy = label;
        self.seed = seed;
        self
    }

    pub fn with_degree(mut self, d: usize) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn with_order(mut self, o: usize) -> Self {
        self.order = Some(o);
        self
    }

    pub fn with_detail(mut self, d: String) -> Self {
        self.detail = Some(d);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: String,
    pub tool_version: String,
    pub braiding: String,
    pub algebra: String,
    pub identity: String,
    pub check_id: String,
    pub items: Vec<ReportItem>,
    pub overall: String,
}

impl VerificationReport {
    pub fn new(
        braiding: impl Into<String>,
        algebra: impl Into<String>,
        identity: impl Into<String>,
        check_id: impl Into<String>,
        mut items: Vec<ReportItem>,
    ) -> Self {
        items.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = if items.iter().all(|i| i.verdict.passed()) {
            "pass".to_string()
        } else {
            "fail".to_string()
        };
        VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            braiding: braiding.into(),
            algebra: algebra.into(),
            identity: identity.into(),
            check_id: check_id.into(),
            items,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == "pass"
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("identity : {} [{}]\n", self.identity, self.check_id));
        out.push_str(&format!("braiding : {}\n", self.braiding));
        out.push_str(&format!("algebra  : {}\n", self.algebra));
        out.push_str(&format!(
            "{:<28} {:<14} {:<36} {:>8}\n",
            "item", "verdict", "strategy", "ms"
        ));
        for item in &self.items {
            let mut tags = String::new();
            if let Some(d) = item.degree {
                tags.push_str(&format!(" deg={d}"));
            }
            if let Some(o) = item.order {
                tags.push_str(&format!(" ord={o}"));
            }
            out.push_str(&format!(
                "{:<28} {:<14} {:<36} {:>8}{}\n",
                item.id,
                item.verdict.to_string(),
                item.strategy,
                item.elapsed_ms,
                tags
            ));
            if let Some(detail) = &item.detail {
                out.push_str(&format!("    {detail}\n"));
            }
        }
        out.push_str(&format!("overall  : {}\n", self.overall.to_uppercase()));
        out
    }
}
