use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::AuditFinding;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Structured,
}

#[derive(Serialize, Deserialize)]
struct StructuredReport {
    findings: Vec<AuditFinding>,
}

/// Leading number of an id, so ids sort numerically. Ids without one go last.
fn equation_number(id: &str) -> u32 {
    id.strip_prefix("Eq")
        .map(|rest| {
            let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
            digits.parse().unwrap_or(u32::MAX)
        })
        .unwrap_or(u32::MAX)
}

fn compare(a: &AuditFinding, b: &AuditFinding) -> Ordering {
    equation_number(&a.equation_id)
        .cmp(&equation_number(&b.equation_id))
        .then_with(|| a.equation_id.cmp(&b.equation_id))
        .then_with(|| a.kind.cmp(&b.kind))
        .then_with(|| a.interpretation.cmp(&b.interpretation))
        .then_with(|| a.severity.cmp(&b.severity))
        .then_with(|| a.detail.cmp(&b.detail))
        .then_with(|| match (a.magnitude, b.magnitude) {
            (Some(x), Some(y)) => x.total_cmp(&y),
            (x, y) => x.is_some().cmp(&y.is_some()),
        })
}

/// Order by equation id, then kind.
pub fn sort_findings(findings: &mut [AuditFinding]) {
    findings.sort_by(compare);
}

pub fn render_report(findings: &[AuditFinding], format: ReportFormat) -> String {
    let mut sorted = findings.to_vec();
    sort_findings(&mut sorted);
    match format {
        ReportFormat::Structured => {
            let doc = StructuredReport { findings: sorted };
            let mut out = serde_json::to_string_pretty(&doc).expect("findings serialize");
            out.push('\n');
            out
        }
        ReportFormat::Table => render_table(&sorted),
    }
}

pub fn parse_structured(text: &str) -> serde_json::Result<Vec<AuditFinding>> {
    serde_json::from_str::<StructuredReport>(text).map(|r| r.findings)
}

fn render_table(findings: &[AuditFinding]) -> String {
    let header = [
        "equation",
        "interpretation",
        "kind",
        "severity",
        "magnitude",
        "detail",
    ];
    let rows: Vec<[String; 6]> = findings
        .iter()
        .map(|f| {
            [
                f.equation_id.clone(),
                f.interpretation.map_or("-", |i| i.as_str()).to_string(),
                f.kind.as_str().to_string(),
                f.severity.as_str().to_string(),
                f.magnitude.map_or("-".to_string(), |m| format!("{m:.16e}")),
                f.detail.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()).take(5) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let line = |cells: &[&str], out: &mut String| {
        for (i, cell) in cells.iter().enumerate() {
            if i < 5 {
                out.push_str(&format!("{cell:<width$}  ", width = widths[i]));
            } else {
                out.push_str(cell);
            }
        }
        out.push('\n');
    };
    line(&header, &mut out);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&cells, &mut out);
    }
    out
}
