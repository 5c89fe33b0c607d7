use std::fmt::Write as _;

use invariants::IrreducibilityVerdict;
use serde::{Deserialize, Serialize};

use crate::analysis::{Analysis, Certificate, ChiralityFlag, LinkingPair};
use crate::expected::EnumRow;

pub const FORMAT: &str = "census-report";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    pub inputs: usize,
    pub outputs: usize,
}

/// Reduction results for the diagrams of one crossing number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionRow {
    pub crossings: usize,
    pub diagrams: usize,
    pub reduced: usize,
    pub survivors: usize,
    pub inconclusive: usize,
    pub classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorClass {
    /// Short hash of the class id.
    pub class: String,
    pub crossings: usize,
    pub diagrams: usize,
    pub code: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeRow {
    pub code: String,
    pub trace: String,
    pub graph_crossings: usize,
    pub summands: usize,
    pub members: usize,
    pub closures: usize,
    pub capped: usize,
}

/// Invariants of one fixture diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub label: String,
    pub code: String,
    pub analysis: Analysis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibleRecord {
    pub crossings: usize,
    pub left: String,
    pub right: String,
    pub count: Option<usize>,
    pub diagrams: Vec<String>,
    /// Involves a link outside the table's rows.
    pub extra: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "from", rename_all = "kebab-case")]
pub enum Provenance {
    Enumerated { class: String },
    Composite { trace: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    pub label: String,
    pub code: String,
    pub c: usize,
    pub n: usize,
    pub e: usize,
    pub ks_a4: u64,
    pub ks_a5: Option<u64>,
    pub rank_bound: usize,
    pub deletion_ks_a4: Vec<u64>,
    pub linking: Vec<LinkingPair>,
    pub divisibility: Option<IrreducibilityVerdict>,
    pub nonsplit: Certificate,
    pub irreducible: Certificate,
    pub chirality: ChiralityFlag,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Record {
    Header { format: String, version: u32, partial: bool },
    Stage(StageCount),
    Enumeration(EnumRow),
    Reduction(ReductionRow),
    Survivor(SurvivorClass),
    Composite(CompositeRow),
    Fixture(FixtureRow),
    Entry(CensusEntry),
    Reducible(ReducibleRecord),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    /// The second KS column was skipped.
    pub partial: bool,
    pub stages: Vec<StageCount>,
    pub enumeration: Vec<EnumRow>,
    pub reductions: Vec<ReductionRow>,
    pub survivors: Vec<SurvivorClass>,
    pub composites: Vec<CompositeRow>,
    pub fixtures: Vec<FixtureRow>,
    pub entries: Vec<CensusEntry>,
    pub reducible: Vec<ReducibleRecord>,
    /// Seconds per stage; kept out of the JSON lines so that reports are
    /// reproducible byte for byte.
    pub timings: Vec<(String, f64)>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("line {0}: {1}")]
    Json(usize, serde_json::Error),
    #[error("not a {FORMAT} v{VERSION} file")]
    Header,
}

impl Report {
    pub fn to_jsonl(&self) -> String {
        let mut recs = vec![Record::Header { format: FORMAT.into(), version: VERSION, partial: self.partial }];
        recs.extend(self.stages.iter().cloned().map(Record::Stage));
        recs.extend(self.enumeration.iter().cloned().map(Record::Enumeration));
        recs.extend(self.reductions.iter().cloned().map(Record::Reduction));
        recs.extend(self.survivors.iter().cloned().map(Record::Survivor));
        recs.extend(self.composites.iter().cloned().map(Record::Composite));
        recs.extend(self.fixtures.iter().cloned().map(Record::Fixture));
        recs.extend(self.entries.iter().cloned().map(Record::Entry));
        recs.extend(self.reducible.iter().cloned().map(Record::Reducible));
        let mut out = String::new();
        for r in recs {
            out.push_str(&serde_json::to_string(&r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Report, ReportError> {
        let mut report = Report::default();
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        match lines.next().map(|(i, l)| (i, serde_json::from_str::<Record>(l))) {
            Some((_, Ok(Record::Header { format, version, partial }))) if format == FORMAT && version == VERSION => {
                report.partial = partial
            }
            _ => return Err(ReportError::Header),
        }
        for (i, l) in lines {
            match serde_json::from_str(l).map_err(|e| ReportError::Json(i + 1, e))? {
                Record::Header { .. } => return Err(ReportError::Header),
                Record::Stage(x) => report.stages.push(x),
                Record::Enumeration(x) => report.enumeration.push(x),
                Record::Reduction(x) => report.reductions.push(x),
                Record::Survivor(x) => report.survivors.push(x),
                Record::Composite(x) => report.composites.push(x),
                Record::Fixture(x) => report.fixtures.push(x),
                Record::Entry(x) => report.entries.push(x),
                Record::Reducible(x) => report.reducible.push(x),
            }
        }
        Ok(report)
    }

    pub fn entry(&self, label: &str) -> Option<&CensusEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn fixture(&self, label: &str) -> Option<&FixtureRow> {
        self.fixtures.iter().find(|e| e.label == label)
    }

    /// Human-readable tables.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        writeln!(s, "{:<6} {:>2} {:>2} {:>2} {:>6} {:>6} {:>4}  {:<9} {:<9} {:<8} source", "label", "c", "n", "e", "A4", "A5", "rank", "nonsplit", "irreduc.", "chirality").unwrap();
        for e in &self.entries {
            let chir = match &e.chirality {
                ChiralityFlag::Chiral { .. } => "chiral",
                ChiralityFlag::AchiralWitnessed { .. } => "achiral",
                ChiralityFlag::ChiralityOpen { .. } => "open",
            };
            let src = match &e.provenance {
                Provenance::Enumerated { class } => format!("enumerated {}", class),
                Provenance::Composite { trace } => trace.clone(),
            };
            let yes = |c: &Certificate| if c.certified { "yes" } else { "no" };
            writeln!(
                s,
                "{:<6} {:>2} {:>2} {:>2} {:>6} {:>6} {:>4}  {:<9} {:<9} {:<8} {}",
                e.label, e.c, e.n, e.e, e.ks_a4, opt(e.ks_a5), e.rank_bound, yes(&e.nonsplit), yes(&e.irreducible), chir, src
            )
            .unwrap();
        }
        writeln!(s).unwrap();
        writeln!(s, "reducible census").unwrap();
        for r in &self.reducible {
            let count = r.count.map_or("unverified".to_string(), |c| c.to_string());
            let tag = if r.extra { "  (outside the table's rows)" } else { "" };
            writeln!(s, "  {:>2}  {} o {}: {}{}", r.crossings, r.left, r.right, count, tag).unwrap();
        }
        writeln!(s).unwrap();
        for st in &self.stages {
            let secs = self.timings.iter().find(|t| t.0 == st.stage).map_or(String::new(), |t| format!(" in {:.1}s", t.1));
            writeln!(s, "stage {:<11} {:>7} in, {:>5} out{}", st.stage, st.inputs, st.outputs, secs).unwrap();
        }
        if self.partial {
            writeln!(s, "partial report: second KS column skipped").unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jsonl_round_trip() {
        let r = Report {
            partial: true,
            stages: vec![StageCount { stage: "reduce".into(), inputs: 3, outputs: 1 }],
            enumeration: vec![EnumRow { q: 2, total: 1, by_components: [1, 0, 0] }],
            reducible: vec![ReducibleRecord {
                crossings: 2,
                left: "unknot".into(),
                right: "Hopf".into(),
                count: Some(1),
                diagrams: vec![],
                extra: false,
            }],
            timings: vec![("reduce".into(), 1.5)],
            ..Default::default()
        };
        let text = r.to_jsonl();
        assert!(text.starts_with("{\"kind\":\"header\""));
        let back = Report::from_jsonl(&text).unwrap();
        assert_eq!(back, Report { timings: vec![], ..r });
    }

    #[test]
    fn header_is_checked() {
        assert!(matches!(Report::from_jsonl("{\"kind\":\"stage\",\"stage\":\"x\",\"inputs\":0,\"outputs\":0}"), Err(ReportError::Header)));
        assert!(Report::from_jsonl("").is_err());
    }
}
