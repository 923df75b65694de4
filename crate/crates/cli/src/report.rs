//! Verification reports: one record per (theorem, parameters) pair, with
//! JSON, CSV, and plain-text emitters. Field order is fixed; elapsed times
//! can be omitted for byte-identical reruns.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub theorem: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u128>,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(records: Vec<CheckRecord>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport { records, summary }
    }

    pub fn any_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,params,expected,computed,status,ms\n");
        for r in &self.records {
            let ms = r.ms.map(|v| v.to_string()).unwrap_or_default();
            let fields = [
                r.theorem.as_str(),
                r.params.as_str(),
                r.expected.as_str(),
                r.computed.as_str(),
                r.status.label(),
                ms.as_str(),
            ];
            let row: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let timing = r.ms.map(|v| format!(" ({v} ms)")).unwrap_or_default();
            out.push_str(&format!(
                "{} {} {}{}\n",
                r.status.label(),
                r.theorem,
                r.params,
                timing
            ));
            match r.status {
                Status::Fail => {
                    out.push_str(&format!("    expected: {}\n", r.expected));
                    out.push_str(&format!("    computed: {}\n", r.computed));
                }
                Status::Skipped => {
                    out.push_str(&format!("    reason: {}\n", r.computed));
                }
                Status::Pass => {}
            }
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

fn csv_field(value: &str) -> String {
    if value.contains(',') || value.contains('"') || value.contains('\n') {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}
