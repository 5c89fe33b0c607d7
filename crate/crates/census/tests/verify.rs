use std::process::Command;

use census::{verify, ExpectedTables, Report};
use proptest::prelude::*;

const GOLDEN: &str = include_str!("data/census-report.jsonl");

fn golden() -> Report {
    Report::from_jsonl(GOLDEN).unwrap()
}

fn fields(r: &Report) -> Vec<String> {
    verify(r, &ExpectedTables::published()).diffs.into_iter().map(|d| d.field).collect()
}

#[test]
fn golden_report_passes_with_notes() {
    let v = verify(&golden(), &ExpectedTables::published());
    assert!(v.passed(), "{:?}", v.diffs);
    assert!(!v.partial);
    let notes = v.notes.join("\n");
    for label in ["5_1", "6_6", "6_7"] {
        assert!(notes.contains(&format!("{}: chirality open", label)));
    }
    assert!(notes.contains("6_15"));
    assert!(notes.contains("K4a1#Hopf"));
}

#[test]
fn fake_row_with_the_real_count_is_caught() {
    let mut r = golden();
    let real = r.fixture("6_11").unwrap().analysis.ks_a4;
    assert_eq!(real, 486);
    r.fixtures.iter_mut().find(|f| f.label == "fake_6_11").unwrap().analysis.ks_a4 = real;
    let v = verify(&r, &ExpectedTables::published());
    assert_eq!(v.diffs.len(), 1);
    let d = &v.diffs[0];
    assert_eq!((d.field.as_str(), d.expected.as_str(), d.got.as_str()), ("fake_6_11 ks_a4", "694", "486"));
}

#[test]
fn partial_report_skips_the_second_column() {
    let mut r = golden();
    r.partial = true;
    for f in &mut r.fixtures {
        f.analysis.ks_a5 = None;
    }
    for e in &mut r.entries {
        e.ks_a5 = None;
    }
    let v = verify(&r, &ExpectedTables::published());
    assert!(v.partial);
    assert!(v.passed(), "{:?}", v.diffs);

    r.partial = false;
    assert!(fields(&r).iter().any(|f| f == "6_9 ks_a5"));
}

#[test]
fn missing_entry_and_extra_survivor_are_caught() {
    let mut r = golden();
    r.entries.retain(|e| e.label != "6_9");
    let f = fields(&r);
    assert!(f.contains(&"entry 6_9".to_string()));
    assert!(f.contains(&"survivor entries".to_string()));
    assert!(f.contains(&"six-crossing entries by n".to_string()));

    let mut r = golden();
    r.reductions.iter_mut().find(|x| x.crossings == 5).unwrap().survivors = 1;
    assert_eq!(fields(&r), vec!["survivors at c=5".to_string()]);
}

#[test]
fn reducible_rows_are_order_insensitive_and_totalled() {
    let mut r = golden();
    r.reducible.reverse();
    for x in &mut r.reducible {
        std::mem::swap(&mut x.left, &mut x.right);
    }
    assert!(fields(&r).is_empty());

    let mut r = golden();
    let row = r.reducible.iter_mut().find(|x| x.right == "L4a1#Hopf").unwrap();
    row.count = Some(2);
    assert_eq!(fields(&r), vec!["reducible unknot o L4a1#Hopf".to_string(), "reducible total c=6".to_string()]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn one_wrong_cell_is_one_diff(i in 0usize..20, delta in 1u64..1000) {
        let mut r = golden();
        let expected = ExpectedTables::published();
        let row = &expected.ks[i];
        prop_assume!(row.ks_a4.is_some());
        r.fixtures.iter_mut().find(|f| f.label == row.label).unwrap().analysis.ks_a4 += delta;
        prop_assert_eq!(fields(&r), vec![format!("{} ks_a4", row.label)]);
    }
}

fn census() -> Command {
    Command::new(env!("CARGO_BIN_EXE_census"))
}

#[test]
fn cli_verify_exit_codes() {
    let dir = std::env::temp_dir().join(format!("census-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.jsonl");
    std::fs::write(&good, GOLDEN).unwrap();
    let out = census().args(["verify", "--report"]).arg(&good).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verify: pass"));

    let mut r = golden();
    r.fixtures.iter_mut().find(|f| f.label == "6_3").unwrap().analysis.ks_a5 = Some(1);
    let bad = dir.join("bad.jsonl");
    std::fs::write(&bad, r.to_jsonl()).unwrap();
    let out = census().args(["verify", "--report"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("DIFF 6_3 ks_a5: expected 469, got 1"));

    let out = census().args(["verify", "--report"]).arg(dir.join("absent.jsonl")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cli_invariant_and_enumerate() {
    let out = census().args(["invariant", "--code", "X(4,1,2,3) X(1,4,3,2)", "--group", "a4"]).output().unwrap();
    assert!(out.status.success());
    // A4 classes of Z^2: commuting pairs up to conjugation
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ks_A4 = 14");

    let out = census().args(["enumerate", "--q", "3"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("total=3"));
}
