use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::expected::ExpectedTables;
use crate::fixtures::family;
use crate::report::{Provenance, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub field: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub diffs: Vec<Diff>,
    /// Observations that are not failures.
    pub notes: Vec<String>,
    pub partial: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }

    fn diff(&mut self, field: impl Into<String>, expected: impl ToString, got: impl ToString) {
        self.diffs.push(Diff { field: field.into(), expected: expected.to_string(), got: got.to_string() });
    }

    fn check<T: PartialEq + std::fmt::Debug>(&mut self, field: impl Into<String>, expected: T, got: T) {
        if expected != got {
            self.diff(field, format!("{:?}", expected), format!("{:?}", got));
        }
    }
}

/// Labels the composite case analysis produces beyond the printed list.
pub const COMPOSITES_OUTSIDE_LIST: [&str; 1] = ["6_15"];

/// Field-by-field comparison. Blank cells are skipped, and so is every A5
/// cell of a partial report.
pub fn verify(report: &Report, expected: &ExpectedTables) -> Verification {
    let mut v = Verification { partial: report.partial, ..Default::default() };

    for row in &expected.enumeration {
        match report.enumeration.iter().find(|r| r.q == row.q) {
            Some(r) => v.check(format!("enumeration q={}", row.q), (row.total, row.by_components), (r.total, r.by_components)),
            None => v.diff(format!("enumeration q={}", row.q), row.total, "missing"),
        }
    }

    for row in &expected.ks {
        let Some(f) = report.fixture(&row.label) else {
            v.diff(format!("fixture {}", row.label), "present", "missing");
            continue;
        };
        let a = &f.analysis;
        v.check(format!("{} components", row.label), row.components, a.n);
        if let Some(k) = row.ks_a4 {
            v.check(format!("{} ks_a4", row.label), k, a.ks_a4);
        }
        match (row.ks_a5, a.ks_a5) {
            (Some(k), Some(got)) => v.check(format!("{} ks_a5", row.label), k, got),
            (Some(_), None) if report.partial => {}
            (Some(k), None) => v.diff(format!("{} ks_a5", row.label), k, "missing"),
            (None, _) => {}
        }
        if let Some(cell) = row.rank {
            if !cell.admits(a.rank_bound) {
                v.diff(format!("{} rank", row.label), format!("{:?}", cell), a.rank_bound);
            }
        }
    }

    let labels = expected.entry_labels();
    for l in &labels {
        let hits: Vec<_> = report.entries.iter().filter(|e| e.label == *l).collect();
        if hits.len() != 1 {
            v.diff(format!("entry {}", l), "one entry", format!("{} entries", hits.len()));
            continue;
        }
        let e = hits[0];
        if let Some(c) = ExpectedTables::crossings_of(l) {
            v.check(format!("{} crossings", l), c, e.c);
        }
        if !e.nonsplit.certified {
            v.diff(format!("{} nonsplit", l), "certified", &e.nonsplit.by);
        }
        if !e.irreducible.certified {
            v.diff(format!("{} irreducible", l), "certified", &e.irreducible.by);
        }
        let chiral = expected.chiral.iter().any(|x| x == l);
        match (chiral, e.chirality.is_chiral()) {
            (false, true) => v.diff(format!("{} chirality", l), "achiral", "certified chiral"),
            (true, false) => v.notes.push(format!("{}: chirality open", l)),
            _ => {}
        }
    }
    for e in &report.entries {
        if !labels.contains(&e.label.as_str()) {
            v.diff("entries", "labeled", format!("unmatched entry {}", e.code));
        }
    }
    let six: Vec<_> = report.entries.iter().filter(|e| e.c == 6).collect();
    let by_n = |n| six.iter().filter(|e| e.n == n).count();
    v.check("six-crossing entries by n", (15, 8, 6, 1), (six.len(), by_n(2), by_n(3), by_n(4)));

    for r in &report.reductions {
        v.check(format!("inconclusive searches at c={}", r.crossings), 0, r.inconclusive);
        if r.crossings < 6 {
            v.check(format!("survivors at c={}", r.crossings), 0, r.survivors);
        }
    }
    let mut survivors: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| matches!(e.provenance, Provenance::Enumerated { .. }))
        .map(|e| e.label.as_str())
        .collect();
    survivors.sort();
    let mut want: Vec<&str> = expected.survivors.iter().map(String::as_str).collect();
    want.sort();
    v.check("survivor entries", want, survivors);

    let mut composites: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| matches!(e.provenance, Provenance::Composite { .. }))
        .map(|e| e.label.as_str())
        .filter(|l| {
            let outside = COMPOSITES_OUTSIDE_LIST.contains(l);
            if outside {
                v.notes.push(format!("{} is a composite outside the printed composite list", l));
            }
            !outside
        })
        .collect();
    composites.sort();
    let mut want: Vec<&str> = expected.composites.iter().map(String::as_str).collect();
    want.sort();
    v.check("composite entries", want, composites);
    for k in &report.composites {
        if k.closures > 1 {
            v.notes.push(format!("composite class {} joins {} move-search closures", k.trace, k.closures));
        }
        if k.capped > 0 {
            v.notes.push(format!("composite class {}: {} capped searches", k.trace, k.capped));
        }
    }

    let mut rows: BTreeMap<(usize, String, String), Option<usize>> = BTreeMap::new();
    let mut totals: BTreeMap<usize, usize> = BTreeMap::new();
    for r in report.reducible.iter().filter(|r| !r.extra) {
        let (a, b) = (family(&r.left).to_string(), family(&r.right).to_string());
        let key = if a <= b { (r.crossings, a, b) } else { (r.crossings, b, a) };
        let slot = rows.entry(key).or_insert(Some(0));
        *slot = match (*slot, r.count) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        *totals.entry(r.crossings).or_insert(0) += r.count.unwrap_or(0);
    }
    for row in &expected.reducible {
        let key = if row.left <= row.right {
            (row.crossings, row.left.clone(), row.right.clone())
        } else {
            (row.crossings, row.right.clone(), row.left.clone())
        };
        match rows.remove(&key) {
            Some(Some(c)) => v.check(format!("reducible {} o {}", row.left, row.right), row.count, c),
            Some(None) => v.diff(format!("reducible {} o {}", row.left, row.right), row.count, "unverified"),
            None => v.diff(format!("reducible {} o {}", row.left, row.right), row.count, "missing"),
        }
    }
    for (k, c) in rows {
        v.diff(format!("reducible {} o {}", k.1, k.2), "no row", format!("{:?}", c));
    }
    for &(c, t) in &expected.reducible_totals {
        v.check(format!("reducible total c={}", c), t, totals.get(&c).copied().unwrap_or(0));
    }
    for r in report.reducible.iter().filter(|r| r.extra) {
        v.notes.push(format!(
            "{} o {} ({} crossings) adds {} outside the table's rows",
            r.left,
            r.right,
            r.crossings,
            r.count.map_or("?".into(), |c| c.to_string())
        ));
    }
    v
}
