use std::collections::HashSet;

use diagram::{reduce_search, reduce_search_detailed, Budget, Diagram, MoveSet, Verdict};
use fingroup::{alternating_group, GroupTable};
use invariants::{count_hom_classes, deletion_ks, irreducibility_test, Conclusion, IrreducibilityVerdict};
use wirtinger::{presentation_from_diagram, tietze_simplify};

use crate::{edge_sites, order2_sum, SumSite};

/// A named pool diagram.
#[derive(Clone, Debug)]
pub struct Summand {
    pub name: String,
    pub diagram: Diagram,
}

impl Summand {
    pub fn new(name: &str, diagram: Diagram) -> Summand {
        Summand { name: name.to_string(), diagram }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub diagram: Diagram,
    pub trace: String,
    /// Number of link summands attached to the graph.
    pub summands: usize,
    /// Crossings of the graph summand.
    pub graph_crossings: usize,
}

fn all_sums(a: &Diagram, b: &Diagram) -> Vec<(Diagram, usize, usize, bool)> {
    let mut out = Vec::new();
    for x in edge_sites(a) {
        for y in edge_sites(b) {
            for flip in [false, true] {
                let d = order2_sum(a, SumSite::Edge { dart: x, flip }, b, SumSite::Edge { dart: y, flip: false })
                    .expect("edge sites are valid");
                out.push((d, x, y, flip));
            }
        }
    }
    out
}

/// Links obtained from the pool by up to `depth - 1` knot sums, kept up to
/// relabeling (not up to mirror image).
fn link_closure(links: &[Summand], max_crossings: usize, depth: usize) -> Vec<(Summand, usize)> {
    let mut seen = HashSet::new();
    let mut out: Vec<(Summand, usize)> = Vec::new();
    for l in links {
        if l.diagram.crossing_count() <= max_crossings && seen.insert(l.diagram.oriented_code()) {
            out.push((l.clone(), 1));
        }
    }
    let mut frontier: Vec<usize> = (0..out.len()).collect();
    for _ in 1..depth {
        let mut next = Vec::new();
        for &i in &frontier {
            let (left, k) = out[i].clone();
            for l in links {
                if left.diagram.crossing_count() + l.diagram.crossing_count() > max_crossings {
                    continue;
                }
                for (d, x, y, flip) in all_sums(&left.diagram, &l.diagram) {
                    if seen.insert(d.oriented_code()) {
                        let name = format!("({}[{}{}] # {}[{}])", left.name, x, if flip { "'" } else { "" }, l.name, y);
                        out.push((Summand { name, diagram: d }, k + 1));
                        next.push(out.len() - 1);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every diagram `G # P1 # ... # Pk` (k ≥ 1, sums taken successively) with
/// `G` from the graph pool and each `Pi` a knot sum of pool links, using at
/// most three link summands in total and at most `max_crossings` crossings.
/// Results are deduplicated up to relabeling and mirror image.
pub fn enumerate_candidates(max_crossings: usize, graphs: &[Summand], links: &[Summand]) -> Vec<Candidate> {
    const MAX_SUMMANDS: usize = 3;
    let closure = link_closure(links, max_crossings, MAX_SUMMANDS);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut frontier: Vec<Candidate> = graphs
        .iter()
        .map(|g| Candidate {
            diagram: g.diagram.clone(),
            trace: g.name.clone(),
            summands: 0,
            graph_crossings: g.diagram.crossing_count(),
        })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for cur in &frontier {
            for (p, k) in &closure {
                if cur.summands + k > MAX_SUMMANDS
                    || cur.diagram.crossing_count() + p.diagram.crossing_count() > max_crossings
                {
                    continue;
                }
                for (d, x, y, flip) in all_sums(&cur.diagram, &p.diagram) {
                    if !seen.insert(d.code_mod_mirror()) {
                        continue;
                    }
                    let c = Candidate {
                        diagram: d,
                        trace: format!("{}[{}{}] # {}[{}]", cur.trace, x, if flip { "'" } else { "" }, p.name, y),
                        summands: cur.summands + k,
                        graph_crossings: cur.graph_crossings,
                    };
                    next.push(c.clone());
                    out.push(c);
                }
            }
        }
        frontier = next;
    }
    out
}

#[derive(Clone, Debug)]
pub struct CompositeOptions {
    pub max_crossings: usize,
    /// Crossings allowed above the starting diagram in the move search.
    pub headroom: usize,
    pub max_states: usize,
    /// Compute A5 counts (always done when A4 alone leaves the
    /// divisibility test open).
    pub a5: bool,
    pub workers: usize,
    /// Headroom of the deeper search used to join members of one invariant
    /// class whose closures differ.
    pub merge_headroom: usize,
}

impl Default for CompositeOptions {
    fn default() -> Self {
        CompositeOptions { max_crossings: 6, headroom: 1, max_states: 2_000_000, a5: true, workers: 1, merge_headroom: 2 }
    }
}

/// Invariants of one candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub components: usize,
    pub rank: usize,
    pub ks_a4: u64,
    pub ks_a5: Option<u64>,
    pub deletion_ks_a4: Vec<u64>,
    pub verdict: IrreducibilityVerdict,
}

impl Profile {
    pub fn key(&self) -> (usize, u64, Option<u64>, Vec<u64>) {
        (self.components, self.ks_a4, self.ks_a5, self.deletion_ks_a4.clone())
    }
}

#[derive(Clone, Debug)]
pub struct CompositeClass {
    pub diagram: Diagram,
    pub trace: String,
    pub graph_crossings: usize,
    pub summands: usize,
    pub profile: Profile,
    /// Traces of all candidates merged into this class.
    pub members: Vec<String>,
    /// Distinct move-search closures among the members; 1 means every
    /// member was reached from every other by moves.
    pub closures: usize,
    /// Members whose move search hit the state cap.
    pub capped: usize,
}

#[derive(Clone, Debug)]
pub struct Rejection {
    pub trace: String,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct CompositeReport {
    pub candidates: usize,
    pub classes: Vec<CompositeClass>,
    pub rejected: Vec<Rejection>,
}

enum Outcome {
    Kept(Profile, Option<Vec<u8>>),
    Rejected(String),
}

fn examine(c: &Candidate, opts: &CompositeOptions, a4: &GroupTable, a5: &GroupTable) -> Outcome {
    let d = &c.diagram;
    let n = d.component_count();
    if n < 2 {
        return Outcome::Rejected("one component: a handlebody knot".into());
    }
    let budget = Budget { max_crossings: d.crossing_count() + opts.headroom, max_states: opts.max_states };
    let class_id = match reduce_search(d, budget, MoveSet::RIH) {
        Verdict::ReducedTo(e) if e.crossing_count() < d.crossing_count() => {
            return Outcome::Rejected(format!("moves reach {} crossings", e.crossing_count()))
        }
        Verdict::ReducedTo(e) => {
            return Outcome::Rejected(format!("moves reach a diagram of connectivity {}", e.connectivity()))
        }
        Verdict::Inconclusive => None,
        Verdict::SurvivorClass(id) => Some(id),
    };
    let p = tietze_simplify(&presentation_from_diagram(d), 50);
    let ks_a4 = count_hom_classes(&p, a4);
    let mut verdict = irreducibility_test(ks_a4, None, n as u32, p.generators as u32);
    let mut ks_a5 = None;
    if opts.a5 || verdict.conclusion == Conclusion::Inconclusive {
        let k = count_hom_classes(&p, a5);
        ks_a5 = Some(k);
        verdict = irreducibility_test(ks_a4, ks_a5, n as u32, p.generators as u32);
    }
    let profile = Profile {
        components: n,
        rank: p.generators,
        ks_a4,
        ks_a5,
        deletion_ks_a4: deletion_ks(d, a4),
        verdict,
    };
    Outcome::Kept(profile, class_id)
}

/// Builds all candidates, drops those the move search simplifies (fewer
/// crossings, or a split or reducible diagram) and those with a single
/// component, and merges the rest by invariants. The divisibility verdict
/// is recorded for each class.
pub fn enumerate_composites(graphs: &[Summand], links: &[Summand], opts: &CompositeOptions) -> CompositeReport {
    let candidates = enumerate_candidates(opts.max_crossings, graphs, links);
    let a4 = alternating_group(4);
    let a5 = alternating_group(5);
    let workers = opts.workers.max(1);
    let mut outcomes: Vec<Option<Outcome>> = (0..candidates.len()).map(|_| None).collect();
    std::thread::scope(|s| {
        let chunks: Vec<_> = outcomes.chunks_mut(candidates.len().div_ceil(workers).max(1)).collect();
        let mut start = 0;
        for chunk in chunks {
            let len = chunk.len();
            let cands = &candidates[start..start + len];
            let (a4, a5) = (&a4, &a5);
            s.spawn(move || {
                for (slot, c) in chunk.iter_mut().zip(cands) {
                    *slot = Some(examine(c, opts, a4, a5));
                }
            });
            start += len;
        }
    });
    let mut classes: Vec<CompositeClass> = Vec::new();
    let mut ids: Vec<Vec<(Vec<u8>, Diagram)>> = Vec::new();
    let mut rejected = Vec::new();
    for (c, o) in candidates.iter().zip(outcomes) {
        match o.expect("every candidate examined") {
            Outcome::Rejected(reason) => rejected.push(Rejection { trace: c.trace.clone(), reason }),
            Outcome::Kept(profile, id) => match classes.iter().position(|k| k.profile.key() == profile.key()) {
                Some(i) => {
                    let k = &mut classes[i];
                    k.members.push(c.trace.clone());
                    match id {
                        Some(id) if !ids[i].iter().any(|x| x.0 == id) => ids[i].push((id, c.diagram.clone())),
                        Some(_) => {}
                        None => k.capped += 1,
                    }
                    k.closures = ids[i].len();
                    if c.diagram.crossing_count() < k.diagram.crossing_count() {
                        k.diagram = c.diagram.clone();
                        k.trace = c.trace.clone();
                    }
                }
                None => {
                    classes.push(CompositeClass {
                        diagram: c.diagram.clone(),
                        trace: c.trace.clone(),
                        graph_crossings: c.graph_crossings,
                        summands: c.summands,
                        profile,
                        members: vec![c.trace.clone()],
                        closures: id.is_some() as usize,
                        capped: id.is_none() as usize,
                    });
                    ids.push(id.into_iter().map(|id| (id, c.diagram.clone())).collect());
                }
            },
        }
    }
    for (k, class_ids) in classes.iter_mut().zip(&ids) {
        if class_ids.len() > 1 && opts.merge_headroom > opts.headroom {
            k.closures = merge_closures(class_ids, opts);
        }
    }
    CompositeReport { candidates: candidates.len(), classes, rejected }
}

/// Number of classes left after joining closures that a deeper search from
/// one of them reaches.
fn merge_closures(ids: &[(Vec<u8>, Diagram)], opts: &CompositeOptions) -> usize {
    let mut group: Vec<usize> = (0..ids.len()).collect();
    for i in 0..ids.len() {
        if group[i] != i {
            continue;
        }
        let d = &ids[i].1;
        let budget = Budget { max_crossings: d.crossing_count() + opts.merge_headroom, max_states: opts.max_states };
        let reached: HashSet<Vec<u8>> = reduce_search_detailed(d, budget, MoveSet::RIH).level_codes.into_iter().collect();
        for j in i + 1..ids.len() {
            if group[j] == j && reached.contains(&ids[j].0) {
                group[j] = i;
            }
        }
    }
    (0..ids.len()).filter(|&i| group[i] == i).count()
}
