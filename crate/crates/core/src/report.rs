//! Check records and line-oriented reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Where the expected value of a record comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// A value quoted in the reference literature.
    Reference,
    /// A value frozen from an independent brute-force computation.
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub provenance: Provenance,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Record {
    pub fn compare(
        name: impl Into<String>,
        expected: impl ToString,
        got: impl ToString,
        provenance: Provenance,
    ) -> Record {
        let (expected, got) = (expected.to_string(), got.to_string());
        let status = Status::from_bool(expected == got);
        Record { name: name.into(), expected, got, provenance, status, witness: None }
    }

    /// A pass/fail record from a check result; the error text becomes the witness.
    pub fn check(name: impl Into<String>, result: std::result::Result<(), String>, provenance: Provenance) -> Record {
        let ok = result.is_ok();
        Record {
            name: name.into(),
            expected: "holds".into(),
            got: if ok { "holds".into() } else { "violated".into() },
            provenance,
            status: Status::from_bool(ok),
            witness: result.err(),
        }
    }

    pub fn with_status(mut self, status: Status) -> Record {
        self.status = status;
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Record {
        self.witness = Some(w.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Lines,
    Table,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub records: Vec<Record>,
}

#[derive(Serialize)]
struct Summary<'a> {
    command: &'a str,
    records: usize,
    status: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report { command: command.into(), records: Vec::new() }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// Fail if any record fails, otherwise inconclusive if any is, otherwise pass.
    pub fn status(&self) -> Status {
        self.records.iter().map(|r| r.status).max().unwrap_or(Status::Pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Lines => self.to_lines(),
            Format::Table => self.to_table(),
        }
    }

    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&serde_json::to_string(r).expect("record serializes"));
            s.push('\n');
        }
        let summary = Summary { command: &self.command, records: self.records.len(), status: self.status() };
        s.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let w = self.records.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut s = String::new();
        let _ = writeln!(s, "{:<w$}  {:<12}  {:<10}  {:<9}  got", "name", "status", "source", "expected");
        for r in &self.records {
            let status = format!("{:?}", r.status).to_lowercase();
            let prov = format!("{:?}", r.provenance).to_lowercase();
            let _ = writeln!(s, "{:<w$}  {:<12}  {:<10}  {:<9}  {}", r.name, status, prov, r.expected, r.got);
            if let Some(wit) = &r.witness {
                let _ = writeln!(s, "{:<w$}    witness: {wit}", "");
            }
        }
        let _ = writeln!(s, "overall: {}", format!("{:?}", self.status()).to_lowercase());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status() {
        let mut r = Report::new("x");
        assert_eq!(r.status(), Status::Pass);
        r.push(Record::compare("a", 1, 1, Provenance::Trivial));
        r.push(Record::compare("b", 1, 1, Provenance::Trivial).with_status(Status::Inconclusive));
        assert_eq!(r.status(), Status::Inconclusive);
        r.push(Record::compare("c", 1, 2, Provenance::Derived));
        assert_eq!(r.status(), Status::Fail);
        assert_eq!(r.status().exit_code(), 1);
    }

    #[test]
    fn lines_round_trip() {
        let mut r = Report::new("dim");
        r.push(Record::check("w", Err("oops".into()), Provenance::Reference));
        let text = r.to_lines();
        let first: Record = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first, r.records[0]);
        assert!(text.lines().last().unwrap().contains("\"status\":\"fail\""));
    }
}
