use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use diagram::{assign_crossings, reduce_search, Budget, Diagram, MoveSet, Verdict};
use fingroup::GroupTable;
use planar_enum::{enumerate_plane_graphs, strand_component_count};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sums::{enumerate_composites, enumerate_order1_census, CompositeOptions, LinkFixture};

use crate::analysis::{analyze, chirality, irreducible_certificate, nonsplit_certificate, Analysis, Groups};
use crate::config::Config;
use crate::expected::{is_entry_label, EnumRow};
use crate::fixtures::Fixtures;
use crate::report::{
    CensusEntry, CompositeRow, FixtureRow, Provenance, ReducibleRecord, ReductionRow, Report, StageCount, SurvivorClass,
};

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("stage {stage}: {msg}")]
    Stage { stage: String, msg: String },
    #[error("stage {stage}, input {code}: {msg}")]
    Input { stage: String, code: String, msg: String },
}

fn stage_err(stage: &str, msg: impl ToString) -> PipelineError {
    PipelineError::Stage { stage: stage.into(), msg: msg.to_string() }
}

fn input_err(stage: &str, code: &str, msg: impl ToString) -> PipelineError {
    PipelineError::Input { stage: stage.into(), code: code.into(), msg: msg.to_string() }
}

#[derive(Serialize, Deserialize)]
struct StageHeader {
    format: String,
    stage: String,
    config: String,
}

/// Loads the stage file when its header matches the config, otherwise runs
/// `f` and stores the result.
fn cached<T, F>(cfg: &Config, stage: &str, f: F) -> Result<T, PipelineError>
where
    T: Serialize + DeserializeOwned,
    F: FnOnce() -> Result<T, PipelineError>,
{
    let Some(dir) = &cfg.stage_dir else { return f() };
    let path = dir.join(format!("{}.jsonl", stage));
    let header = StageHeader { format: "census-stage 1".into(), stage: stage.into(), config: cfg.fingerprint() };
    if let Ok(text) = std::fs::read_to_string(&path) {
        let mut lines = text.lines();
        let same = lines
            .next()
            .and_then(|l| serde_json::from_str::<StageHeader>(l).ok())
            .is_some_and(|h| h.format == header.format && h.stage == header.stage && h.config == header.config);
        if let (true, Some(body)) = (same, lines.next()) {
            if let Ok(v) = serde_json::from_str(body) {
                return Ok(v);
            }
        }
    }
    let v = f()?;
    let write = || -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        let text = format!(
            "{}\n{}\n",
            serde_json::to_string(&header).expect("header serializes"),
            serde_json::to_string(&v).expect("stage output serializes")
        );
        std::fs::write(&path, text)
    };
    write().map_err(|e| stage_err(stage, e))?;
    Ok(v)
}

/// Runs `f` over `items` on `workers` threads, keeping input order.
pub fn par_map<T: Sync, R: Send, F: Fn(&T) -> R + Sync>(items: &[T], workers: usize, f: F) -> Vec<R> {
    let workers = workers.max(1);
    let chunk = items.len().div_ceil(workers).max(1);
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(move || c.iter().map(f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn groups(cfg: &Config) -> Result<Groups, PipelineError> {
    let load = |s: &str| GroupTable::from_spec(s).map_err(|e| stage_err("groups", e));
    Ok(Groups { a4: load(&cfg.group_a4)?, a5: if cfg.a5 { Some(load(&cfg.group_a5)?) } else { None } })
}

pub fn enumeration_rows(max_q: usize) -> Result<Vec<EnumRow>, PipelineError> {
    let mut rows = Vec::new();
    for q in 0..=max_q {
        let gs = enumerate_plane_graphs(q).map_err(|e| stage_err("enumerate", e))?;
        let mut by = [0; 3];
        for g in &gs {
            let n = strand_component_count(g);
            if (1..=3).contains(&n) {
                by[n - 1] += 1;
            }
        }
        rows.push(EnumRow { q, total: gs.len(), by_components: by });
    }
    Ok(rows)
}

/// Every diagram with at least two components on the enumerated graphs.
pub fn link_diagrams(max_q: usize) -> Result<Vec<Diagram>, PipelineError> {
    let mut out = Vec::new();
    for q in 0..=max_q {
        for g in enumerate_plane_graphs(q).map_err(|e| stage_err("diagrams", e))? {
            out.extend(assign_crossings(&g).into_iter().filter(|d| d.component_count() >= 2));
        }
    }
    Ok(out)
}

fn short_hash(id: &[u8]) -> String {
    let h = id.iter().fold(0xcbf29ce484222325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x100000001b3));
    format!("{:016x}", h)
}

#[derive(Serialize, Deserialize)]
struct ReduceOut {
    rows: Vec<ReductionRow>,
    classes: Vec<SurvivorClass>,
}

fn reduce(cfg: &Config, diagrams: &[Diagram]) -> ReduceOut {
    let verdicts = par_map(diagrams, cfg.workers, |d| {
        let budget = Budget { max_crossings: d.crossing_count() + cfg.headroom, max_states: cfg.max_states };
        reduce_search(d, budget, MoveSet::RIH)
    });
    let mut rows: BTreeMap<usize, ReductionRow> = BTreeMap::new();
    let mut classes: Vec<(Vec<u8>, SurvivorClass)> = Vec::new();
    for (d, v) in diagrams.iter().zip(verdicts) {
        let c = d.crossing_count();
        let row = rows.entry(c).or_insert(ReductionRow {
            crossings: c,
            diagrams: 0,
            reduced: 0,
            survivors: 0,
            inconclusive: 0,
            classes: 0,
        });
        row.diagrams += 1;
        match v {
            Verdict::ReducedTo(_) => row.reduced += 1,
            Verdict::Inconclusive => row.inconclusive += 1,
            Verdict::SurvivorClass(id) => {
                row.survivors += 1;
                match classes.iter_mut().find(|k| k.0 == id) {
                    Some(k) => k.1.diagrams += 1,
                    None => {
                        row.classes += 1;
                        let class = short_hash(&id);
                        classes.push((id, SurvivorClass { class, crossings: c, diagrams: 1, code: d.to_code() }));
                    }
                }
            }
        }
    }
    ReduceOut { rows: rows.into_values().collect(), classes: classes.into_iter().map(|k| k.1).collect() }
}

fn composites(cfg: &Config, fx: &Fixtures) -> Vec<CompositeRow> {
    let opts = CompositeOptions {
        max_crossings: cfg.max_crossings,
        headroom: cfg.composite_headroom,
        max_states: cfg.composite_max_states,
        a5: cfg.a5,
        workers: cfg.workers,
        merge_headroom: cfg.composite_merge_headroom,
    };
    let r = enumerate_composites(&fx.graph_pool(), &fx.composite_pool(), &opts);
    r.classes
        .iter()
        .map(|k| CompositeRow {
            code: k.diagram.to_code(),
            trace: k.trace.clone(),
            graph_crossings: k.graph_crossings,
            summands: k.summands,
            members: k.members.len(),
            closures: k.closures,
            capped: k.capped,
        })
        .collect()
}

fn reducible(cfg: &Config, pool: &[LinkFixture], extra: &[LinkFixture]) -> Result<Vec<ReducibleRecord>, PipelineError> {
    let mut all = pool.to_vec();
    all.extend(extra.iter().cloned());
    let t = enumerate_order1_census(cfg.max_crossings, &all).map_err(|e| stage_err("reducible", e))?;
    let is_extra = |name: &str| extra.iter().any(|l| l.name == name);
    Ok(t.rows
        .into_iter()
        .map(|r| ReducibleRecord {
            crossings: r.crossings,
            extra: is_extra(&r.left) || is_extra(&r.right),
            diagrams: r.diagrams.iter().map(|d| d.to_code()).collect(),
            left: r.left,
            right: r.right,
            count: r.count,
        })
        .collect())
}

fn parse(stage: &str, code: &str) -> Result<Diagram, PipelineError> {
    code.parse().map_err(|e| input_err(stage, code, e))
}

fn entry(
    code: &str,
    a: &Analysis,
    d: &Diagram,
    g: &Groups,
    label: String,
    provenance: Provenance,
) -> CensusEntry {
    CensusEntry {
        label,
        code: code.to_string(),
        c: a.c,
        n: a.n,
        e: a.e,
        ks_a4: a.ks_a4,
        ks_a5: a.ks_a5,
        rank_bound: a.rank_bound,
        deletion_ks_a4: a.deletion_ks_a4.clone(),
        linking: a.linking.clone(),
        divisibility: a.divisibility.clone(),
        nonsplit: nonsplit_certificate(d, a, g),
        irreducible: irreducible_certificate(d, a),
        chirality: chirality(d, g.a5.as_ref().unwrap_or(&g.a4)),
        provenance,
    }
}

/// Enumeration, diagram expansion, reduction, composite construction,
/// invariants of fixtures and survivors, and the reducible census. Entries
/// are labeled by matching their invariants with the fixture diagrams.
pub fn run_pipeline(cfg: &Config) -> Result<Report, PipelineError> {
    let fx = match &cfg.fixtures {
        Some(dir) => Fixtures::load(dir).map_err(|e| stage_err("fixtures", e))?,
        None => Fixtures::embedded(),
    };
    run_with_fixtures(cfg, &fx)
}

pub fn run_with_fixtures(cfg: &Config, fx: &Fixtures) -> Result<Report, PipelineError> {
    let g = groups(cfg)?;
    let mut report = Report { partial: !cfg.a5, ..Default::default() };
    let mut clock = Instant::now();
    let mut lap = |report: &mut Report, stage: &str, inputs: usize, outputs: usize| {
        report.stages.push(StageCount { stage: stage.into(), inputs, outputs });
        report.timings.push((stage.into(), clock.elapsed().as_secs_f64()));
        clock = Instant::now();
    };

    report.enumeration = cached(cfg, "enumerate", || enumeration_rows(cfg.max_crossings))?;
    let graphs = report.enumeration.iter().map(|r| r.total).sum();
    lap(&mut report, "enumerate", cfg.max_crossings + 1, graphs);

    let diagrams = link_diagrams(cfg.max_crossings)?;
    lap(&mut report, "diagrams", graphs, diagrams.len());

    let red = cached(cfg, "reduce", || Ok(reduce(cfg, &diagrams)))?;
    report.reductions = red.rows;
    report.survivors = red.classes;
    let out = report.survivors.len();
    lap(&mut report, "reduce", diagrams.len(), out);

    report.composites = cached(cfg, "composites", || Ok(composites(cfg, fx)))?;
    let out = report.composites.len();
    lap(&mut report, "composites", fx.graphs.len() * fx.composite_links.len(), out);

    report.fixtures = cached(cfg, "fixtures", || {
        Ok(par_map(&fx.entries, cfg.workers, |e| FixtureRow {
            label: e.name.clone(),
            code: e.diagram.to_code(),
            analysis: analyze(&e.diagram, &g),
        }))
    })?;
    let out = report.fixtures.len();
    lap(&mut report, "fixtures", fx.entries.len(), out);

    let mut sources: Vec<(String, Provenance)> = report
        .survivors
        .iter()
        .map(|s| (s.code.clone(), Provenance::Enumerated { class: s.class.clone() }))
        .collect();
    sources.extend(report.composites.iter().map(|k| (k.code.clone(), Provenance::Composite { trace: k.trace.clone() })));
    let parsed = sources.iter().map(|(code, _)| parse("entries", code)).collect::<Result<Vec<_>, _>>()?;
    let analyses = par_map(&parsed, cfg.workers, |d| analyze(d, &g));
    let mut unlabeled = 0;
    for (((code, prov), d), a) in sources.into_iter().zip(&parsed).zip(&analyses) {
        let fp = a.fingerprint();
        let hits: Vec<&FixtureRow> = report
            .fixtures
            .iter()
            .filter(|f| is_entry_label(&f.label) && f.analysis.fingerprint() == fp)
            .collect();
        let label = match hits.as_slice() {
            [one] => one.label.clone(),
            _ => {
                unlabeled += 1;
                format!("?{}", unlabeled)
            }
        };
        report.entries.push(entry(&code, a, d, &g, label, prov));
    }
    report.entries.sort_by_key(|e| {
        let c = e.label.split('_').next().and_then(|x| x.parse::<usize>().ok()).unwrap_or(usize::MAX);
        let k = e.label.split('_').nth(1).and_then(|x| x.parse::<usize>().ok()).unwrap_or(usize::MAX);
        (c, k, e.code.clone())
    });
    let out = report.entries.len();
    lap(&mut report, "entries", parsed.len(), out);

    report.reducible = reducible(cfg, &fx.links, &fx.extra_links)?;
    let out = report.reducible.len();
    lap(&mut report, "reducible", fx.links.len() + fx.extra_links.len(), out);
    Ok(report)
}

/// Writes the JSON lines and the summary next to each other.
pub fn write_report(report: &Report, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, report.to_jsonl())?;
    std::fs::write(path.with_extension("summary.txt"), report.summary())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_keeps_order() {
        let v: Vec<usize> = (0..37).collect();
        for w in [1, 2, 5, 64] {
            assert_eq!(par_map(&v, w, |x| x * 2), v.iter().map(|x| x * 2).collect::<Vec<_>>());
        }
        assert!(par_map(&Vec::<usize>::new(), 3, |x| *x).is_empty());
    }

    #[test]
    fn small_pipeline_has_no_survivors() {
        let cfg = Config { max_crossings: 4, a5: false, ..Config::default() };
        let mut fx = Fixtures::embedded();
        fx.entries.truncate(2);
        let r = run_with_fixtures(&cfg, &fx).unwrap();
        assert!(r.survivors.is_empty());
        assert!(r.reductions.iter().all(|x| x.inconclusive == 0 && x.reduced == x.diagrams));
        assert!(r.partial);
        assert_eq!(r.entry("4_1").map(|e| e.c), Some(4));
    }

    #[test]
    fn stage_files_are_reused() {
        let dir = std::env::temp_dir().join(format!("census-stage-{}", std::process::id()));
        let cfg = Config { max_crossings: 3, a5: false, stage_dir: Some(dir.clone()), ..Config::default() };
        let a: Vec<EnumRow> = cached(&cfg, "enumerate", || enumeration_rows(3)).unwrap();
        let b: Vec<EnumRow> = cached(&cfg, "enumerate", || Err(stage_err("enumerate", "should not rerun"))).unwrap();
        assert_eq!(a, b);
        let other = Config { max_crossings: 2, ..cfg };
        assert!(cached::<Vec<EnumRow>, _>(&other, "enumerate", || Err(stage_err("enumerate", "rerun"))).is_err());
        std::fs::remove_dir_all(dir).unwrap();
    }
}
