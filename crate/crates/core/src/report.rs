//! Verification reports shared by the library checks and the CLI.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Partial,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
        })
    }
}

/// One named record with an assertion flag and free-form fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub name: String,
    pub ok: bool,
    pub fields: BTreeMap<String, Value>,
}

impl Row {
    pub fn new(name: impl Into<String>, ok: bool) -> Self {
        Row {
            name: name.into(),
            ok,
            fields: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.fields.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable field"),
        );
        self
    }

    pub fn field(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub rows: Vec<Row>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            status: Status::Pass,
            rows: Vec::new(),
            seed,
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
        self.refresh_status(false);
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = Row>) {
        for r in rows {
            self.push(r);
        }
    }

    /// Recompute the status; `partial` marks an incomplete run.
    pub fn refresh_status(&mut self, partial: bool) {
        self.status = if self.rows.iter().any(|r| !r.ok) {
            Status::Fail
        } else if partial || self.status == Status::Partial {
            Status::Partial
        } else {
            Status::Pass
        };
    }

    pub fn mark_partial(&mut self) {
        self.status = Status::Partial;
        self.refresh_status(true);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text table: one line per row plus a status footer.
    pub fn to_text(&self) -> String {
        let mut keys: Vec<&str> = Vec::new();
        for r in &self.rows {
            for k in r.fields.keys() {
                if !keys.contains(&k.as_str()) {
                    keys.push(k);
                }
            }
        }
        let mut table: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["name".to_string()];
        header.extend(keys.iter().map(|k| k.to_string()));
        header.push("verified".into());
        table.push(header);
        for r in &self.rows {
            let mut line = vec![r.name.clone()];
            for k in &keys {
                line.push(r.fields.get(*k).map(render_value).unwrap_or_default());
            }
            line.push(if r.ok { "yes" } else { "NO" }.into());
            table.push(line);
        }
        let ncol = table[0].len();
        let widths: Vec<usize> = (0..ncol)
            .map(|c| {
                table
                    .iter()
                    .map(|l| l[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for l in &table {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            let _ = writeln!(out, "  {}", cells.join("  ").trim_end());
        }
        let _ = writeln!(out, "status: {}  seed: {}", self.status, self.seed);
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => a.iter().map(render_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
