//! Audit report, either as a table or as the structured document.
//!
//! cargo run --example equation_audit -- json

use vacrad::audit::{all_findings, render_report, ReportFormat, Severity};

fn main() {
    let format = match std::env::args().nth(1).as_deref() {
        Some("json") => ReportFormat::Structured,
        _ => ReportFormat::Table,
    };
    let findings = all_findings();
    print!("{}", render_report(&findings, format));

    let count = |s: Severity| findings.iter().filter(|f| f.severity == s).count();
    eprintln!(
        "{} findings: {} fail, {} warn, {} info",
        findings.len(),
        count(Severity::Fail),
        count(Severity::Warn),
        count(Severity::Info)
    );
}
