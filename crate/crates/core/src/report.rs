//! The JSON / plain-text report emitted by every command.
//!
//! Exact integers and rationals are carried as decimal strings. Field order is
//! fixed and maps are ordered, so equal inputs give byte-identical output.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::recurrence_analysis::Certificate;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub target: String,
    pub range: (usize, usize),
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    pub bound_checked: String,
}

impl Report {
    pub fn new(command: &str, target: &str, range: (usize, usize), status: &str) -> Self {
        Report {
            command: command.to_string(),
            target: target.to_string(),
            range,
            status: status.to_string(),
            witness: None,
            certificate: None,
            bound_checked: range.1.to_string(),
        }
    }

    pub fn witness<T: Serialize>(mut self, w: Option<&T>) -> Self {
        self.witness = w.map(to_value);
        self
    }

    pub fn bound(mut self, bound: impl ToString) -> Self {
        self.bound_checked = bound.to_string();
        self
    }

    /// Attaches a certificate; the first failing hypothesis becomes the witness.
    pub fn certificate(mut self, cert: &Certificate) -> Self {
        self.certificate = Some(to_value(cert));
        if let Some(h) = cert.hypotheses.iter().find(|h| !h.holds) {
            self.witness = Some(serde_json::json!({
                "hypothesis": h.name,
                "index": h.witness.as_ref().map(|w| w.index),
                "detail": h.witness.as_ref().map(|w| w.detail.clone()),
            }));
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_plain(&self) -> String {
        let mut s = format!(
            "{} {}: {} (range {}..={}, bound {})\n",
            self.command, self.target, self.status, self.range.0, self.range.1, self.bound_checked
        );
        if let Some(cert) = &self.certificate {
            plain_certificate(&mut s, cert);
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(s, "witness: {w}");
        }
        s
    }
}

fn to_value<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn plain_certificate(s: &mut String, cert: &Value) {
    if let Some(hs) = cert["hypotheses"].as_array() {
        for h in hs {
            let mark = if h["holds"].as_bool() == Some(true) { "ok  " } else { "FAIL" };
            let range = match h["range"].as_array() {
                Some(r) => format!(" [{}..={}]", r[0], r[1]),
                None => String::new(),
            };
            let _ = write!(s, "  {mark} {}{range}", h["name"].as_str().unwrap_or("?"));
            if let Some(d) = h["witness"]["detail"].as_str() {
                let _ = write!(s, " at {}: {d}", h["witness"]["index"]);
            }
            s.push('\n');
        }
    }
    if let Some(values) = cert["values"].as_object() {
        for (k, v) in values {
            let _ = writeln!(s, "  {k} = {}", v.as_str().unwrap_or(""));
        }
    }
    if let Some(notes) = cert["notes"].as_array() {
        for n in notes {
            let _ = writeln!(s, "  note: {}", n.as_str().unwrap_or(""));
        }
    }
}
