use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    LogConvex,
    LogConcave,
    NotCertified,
}

/// First index at which a hypothesis failed, with the offending value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub index: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    /// Inclusive index range examined, when the hypothesis is per-index.
    pub range: Option<(usize, usize)>,
    pub witness: Option<Witness>,
}

impl Hypothesis {
    pub fn new(name: &str, holds: bool) -> Self {
        Hypothesis {
            name: name.to_string(),
            holds,
            range: None,
            witness: None,
        }
    }

    pub fn over(mut self, from: usize, to: usize) -> Self {
        self.range = Some((from, to));
        self
    }

    /// Records a witness, which also marks the hypothesis failed.
    pub fn failing_at(mut self, index: usize, detail: impl Into<String>) -> Self {
        self.holds = false;
        self.witness = Some(Witness {
            index,
            detail: detail.into(),
        });
        self
    }
}

/// The outcome of one theorem check: every hypothesis with its range and
/// first failure, plus named exact quantities. Re-running the same check on
/// the same input reproduces it field for field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub theorem: String,
    pub target: String,
    pub range: (usize, usize),
    pub verdict: Verdict,
    pub hypotheses: Vec<Hypothesis>,
    pub values: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(theorem: &str, target: &str, range: (usize, usize)) -> Self {
        Certificate {
            theorem: theorem.to_string(),
            target: target.to_string(),
            range,
            verdict: Verdict::NotCertified,
            hypotheses: Vec::new(),
            values: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, h: Hypothesis) {
        self.hypotheses.push(h);
    }

    pub fn value(&mut self, key: &str, v: impl ToString) {
        self.values.insert(key.to_string(), v.to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    /// Sets the verdict to `success` when every hypothesis holds.
    pub fn conclude(mut self, success: Verdict) -> Self {
        self.verdict = if self.hypotheses.iter().all(|h| h.holds) {
            success
        } else {
            Verdict::NotCertified
        };
        self
    }

    pub fn certified(&self) -> bool {
        self.verdict != Verdict::NotCertified
    }
}
