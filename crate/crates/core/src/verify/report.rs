use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::regularity::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Thm33,
    Thm35,
    Thm310,
    Cor312,
    Thm313,
    Thm45,
    Thm46,
    Lem27,
    Lem31,
    Rem47,
    AsregCert,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Thm33,
        Suite::Thm35,
        Suite::Thm310,
        Suite::Cor312,
        Suite::Thm313,
        Suite::Thm45,
        Suite::Thm46,
        Suite::Lem27,
        Suite::Lem31,
        Suite::Rem47,
        Suite::AsregCert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm33 => "thm33",
            Suite::Thm35 => "thm35",
            Suite::Thm310 => "thm310",
            Suite::Cor312 => "cor312",
            Suite::Thm313 => "thm313",
            Suite::Thm45 => "thm45",
            Suite::Thm46 => "thm46",
            Suite::Lem27 => "lem27",
            Suite::Lem31 => "lem31",
            Suite::Rem47 => "rem47",
            Suite::AsregCert => "asreg_cert",
        }
    }

    /// One suite by name, or every suite for `all`.
    pub fn parse(text: &str) -> Result<Vec<Suite>> {
        if text == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        Suite::ALL
            .iter()
            .find(|s| s.name() == text)
            .map(|&s| vec![s])
            .ok_or_else(|| Error::Input(format!("unknown suite `{text}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped(_) => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationCase {
    pub suite: Suite,
    /// `algebra/module`, or just the algebra.
    pub subject: String,
    pub xi: Option<Weight>,
    pub outcome: Outcome,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    /// The offending data for a failure, the confirming data otherwise.
    pub witness: Option<String>,
}

impl VerificationCase {
    pub fn new(suite: Suite, subject: impl Into<String>, xi: Option<&Weight>) -> Self {
        VerificationCase {
            suite,
            subject: subject.into(),
            xi: xi.cloned(),
            outcome: Outcome::Pass,
            lhs: None,
            rhs: None,
            witness: None,
        }
    }

    pub fn sides(mut self, lhs: impl ToString, rhs: impl ToString) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn holds(mut self, ok: bool) -> Self {
        self.outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        self
    }

    pub fn skip(mut self, reason: impl Into<String>) -> Self {
        self.outcome = Outcome::Skipped(reason.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    fn sort_key(&self) -> (String, Suite) {
        (self.subject.clone(), self.suite)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "subject": self.subject,
            "xi": self.xi.as_ref().map(Weight::to_json),
            "outcome": self.outcome.name(),
            "reason": match &self.outcome { Outcome::Skipped(r) => Some(r.clone()), _ => None },
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
        })
    }
}

/// Cases in a fixed order, with their JSON and text renderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub field: String,
    pub cases: Vec<VerificationCase>,
}

impl Report {
    pub fn new(field: String, mut cases: Vec<VerificationCase>) -> Self {
        cases.sort_by_key(VerificationCase::sort_key);
        Report { field, cases }
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationCase> {
        self.cases.iter().filter(|c| c.is_fail())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// `(pass, fail, skipped)` per suite.
    pub fn summary(&self) -> BTreeMap<Suite, (usize, usize, usize)> {
        let mut out = BTreeMap::new();
        for c in &self.cases {
            let e = out.entry(c.suite).or_insert((0, 0, 0));
            match c.outcome {
                Outcome::Pass => e.0 += 1,
                Outcome::Fail => e.1 += 1,
                Outcome::Skipped(_) => e.2 += 1,
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let summary: serde_json::Map<String, Value> = self
            .summary()
            .into_iter()
            .map(|(s, (p, f, k))| (s.name().to_string(), json!({"pass": p, "fail": f, "skipped": k})))
            .collect();
        json!({
            "schema": 1,
            "version": env!("CARGO_PKG_VERSION"),
            "field": self.field,
            "passed": self.passed(),
            "summary": summary,
            "cases": self.cases.iter().map(VerificationCase::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:<12} {:>6} {:>6} {:>8}\n", "suite", "pass", "fail", "skipped");
        for (s, (p, f, k)) in self.summary() {
            out.push_str(&format!("{:<12} {p:>6} {f:>6} {k:>8}\n", s.name()));
        }
        for c in self.failures() {
            out.push_str(&format!(
                "FAIL {} {} xi = {}: lhs = {}, rhs = {}, witness = {}\n",
                c.suite,
                c.subject,
                c.xi.as_ref().map_or("-".to_string(), Weight::to_string),
                c.lhs.as_deref().unwrap_or("-"),
                c.rhs.as_deref().unwrap_or("-"),
                c.witness.as_deref().unwrap_or("-"),
            ));
        }
        out
    }
}
