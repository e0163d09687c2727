use std::collections::BTreeMap;
use std::fmt::Write;

use crate::job::{Context, TaskOutput};

/// A titled table with left-aligned columns.
#[derive(Debug, Clone, Default)]
pub struct Table {
    title: String,
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        Self { title: title.into(), headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("{}\n", self.title);
        out += &line(&self.headers);
        out.push('\n');
        out += &widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  ");
        out.push('\n');
        for row in &self.rows {
            out += &line(row);
            out.push('\n');
        }
        out
    }
}

pub(crate) fn render(ctx: &Context, output: &TaskOutput, timings: &BTreeMap<String, f64>) -> String {
    let spec = ctx.spec();
    let mut out = String::new();
    writeln!(out, "group   {} (order {})", ctx.group.label(), ctx.group.order()).unwrap();
    if let Some(ring) = &spec.ring {
        writeln!(out, "ring    {}", compact(ring)).unwrap();
        writeln!(out, "action  {}", compact(&spec.action)).unwrap();
    }
    writeln!(out, "task    {}", compact(&spec.task)).unwrap();
    for section in &output.sections {
        out.push('\n');
        out += section;
    }
    let mut verdicts = Table::new("verdicts", &["check", "result", "detail"]);
    for v in &output.verdicts {
        verdicts.row(vec![v.check.clone(), if v.pass { "pass" } else { "FAIL" }.to_string(), v.detail.clone()]);
    }
    out.push('\n');
    out += &verdicts.render();
    if !timings.is_empty() {
        let mut t = Table::new("timings", &["phase", "ms"]);
        for (phase, ms) in timings {
            t.row(vec![phase.clone(), format!("{ms:.1}")]);
        }
        out.push('\n');
        out += &t.render();
    }
    out
}

fn compact<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("specs serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new("t", &["a", "bbb"]);
        t.row(vec!["long".into(), "x".into()]);
        assert_eq!(t.render(), "t\na     bbb\n----  ---\nlong  x\n");
    }
}
