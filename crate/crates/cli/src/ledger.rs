//! The derivation ledger: one row per check, written as `ledger.csv` and a
//! plain-text summary.

use std::fmt::Write as _;

use crate::scan::fmt_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Diagnostic; not compared against a tolerance.
    Report,
}

impl Verdict {
    pub fn of(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LedgerRow {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub note: String,
}

impl LedgerRow {
    pub fn check(name: &str, max_residual: f64, tolerance: f64, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            max_residual,
            tolerance,
            verdict: Verdict::of(max_residual <= tolerance),
            note: note.into(),
        }
    }

    pub fn report(name: &str, value: f64, note: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            max_residual: value,
            tolerance: f64::NAN,
            verdict: Verdict::Report,
            note: note.into(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Ledger {
    pub rows: Vec<LedgerRow>,
    /// Free-text statements printed after the table.
    pub statements: Vec<String>,
}

impl Ledger {
    pub fn extend(&mut self, rows: impl IntoIterator<Item = LedgerRow>) {
        self.rows.extend(rows);
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail).count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,max_residual,tolerance,verdict\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                r.name,
                fmt_f64(r.max_residual),
                fmt_f64(r.tolerance),
                r.verdict.name()
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.rows {
            let tol = if r.verdict == Verdict::Report {
                "-".to_string()
            } else {
                format!("{:.1e}", r.tolerance)
            };
            let _ = writeln!(
                out,
                "{:<6} {:<width$}  max={:<12.4e} tol={:<8} {}",
                r.verdict.name().to_uppercase(),
                r.name,
                r.max_residual,
                tol,
                r.note
            );
        }
        if !self.statements.is_empty() {
            out.push('\n');
            for s in &self.statements {
                let _ = writeln!(out, "{s}");
            }
        }
        let _ = writeln!(
            out,
            "\n{} checks, {} failed",
            self.rows.iter().filter(|r| r.verdict != Verdict::Report).count(),
            self.failures()
        );
        out
    }
}
