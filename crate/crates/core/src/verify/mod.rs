//! Batch verification suites with per-row reports.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

mod lemmas;
mod tables;

pub use lemmas::{lemmas, lemmas_with_seed, DEFAULT_SEED};
pub use tables::{appendix1, appendix2, table1};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Appendix1,
    Appendix2,
    Table1,
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Appendix1, Suite::Appendix2, Suite::Table1, Suite::Lemmas];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Appendix1 => "appendix1",
            Suite::Appendix2 => "appendix2",
            Suite::Table1 => "table1",
            Suite::Lemmas => "lemmas",
        }
    }

    pub fn run(self) -> Result<Report> {
        match self {
            Suite::Appendix1 => appendix1(),
            Suite::Appendix2 => appendix2(),
            Suite::Table1 => table1(),
            Suite::Lemmas => lemmas(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::parse(format!("unknown suite {s:?}")))
    }
}

/// One checked item.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub key: String,
    pub expected: String,
    pub computed: String,
    #[serde(rename = "match")]
    pub matched: bool,
    /// Pinned rows decide the outcome; others only raise warnings.
    pub pinned: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub rows: Vec<Row>,
    /// Documented discrepancies and warnings.
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.pinned).all(|r| r.matched)
    }

    pub fn matches(&self) -> usize {
        self.rows.iter().filter(|r| r.matched).count()
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.matched)
    }

    /// `key,expected,computed,match,pinned` with a header row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("rows serialize");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV is UTF-8")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "matches": self.matches(),
            "rows": self.rows,
            "notes": self.notes,
        })
    }

    /// One line such as `appendix1: 200/200 rows match`.
    pub fn summary(&self) -> String {
        format!(
            "{}: {}/{} rows match{}",
            self.suite,
            self.matches(),
            self.rows.len(),
            if self.passed() { "" } else { " (FAILED)" }
        )
    }
}
