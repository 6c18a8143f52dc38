//! Rendering of command results as aligned text or JSON.

use atl_core::CycloNumber;
use serde_json::Value;

/// How scalars are printed.
#[derive(Debug, Clone, Copy)]
pub struct ScalarFmt {
    pub approx: Option<usize>,
}

impl ScalarFmt {
    pub fn s(&self, x: &CycloNumber) -> String {
        match self.approx {
            Some(d) => x.approx_string(d),
            None => x.to_string(),
        }
    }
}

/// A command result: structured data, a text rendering, and an optional
/// pass/fail outcome used by --expect-pass.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub text: Vec<String>,
    pub check: Option<bool>,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report {
            json,
            text: Vec::new(),
            check: None,
        }
    }

    pub fn line(mut self, s: impl Into<String>) -> Self {
        self.text.push(s.into());
        self
    }

    pub fn kv(self, key: &str, value: impl std::fmt::Display) -> Self {
        self.line(format!("{key}: {value}"))
    }

    pub fn table(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.text.extend(render_table(headers, &rows));
        self
    }

    pub fn check(mut self, ok: bool) -> Self {
        self.check = Some(ok);
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(&self.json).expect("report serializes")
        } else {
            self.text.join("\n")
        }
    }
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let cols = headers.len();
    let mut width: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let fmt_row = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .take(cols)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![fmt_row(headers.to_vec())];
    out.push(fmt_row(
        width
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    out.extend(rows.iter().map(|r| fmt_row(r.iter().map(String::as_str).collect())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = render_table(&["a", "bee"], &[vec!["long".into(), "x".into()]]);
        assert_eq!(t, vec!["a     bee", "----  ---", "long  x"]);
    }
}
