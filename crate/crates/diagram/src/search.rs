use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::moves::{apply_move, enumerate_move_sites, MoveKind};
use crate::Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveSet {
    /// Generalized Reidemeister moves only (spatial-graph equivalence).
    R,
    /// Reidemeister moves plus IH (handlebody-link equivalence).
    RIH,
}

impl MoveSet {
    pub fn kinds(self) -> &'static [MoveKind] {
        match self {
            MoveSet::R => &MoveKind::REIDEMEISTER,
            MoveSet::RIH => &MoveKind::ALL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_crossings: usize,
    pub max_states: usize,
}

impl Budget {
    pub const DEFAULT_STATES: usize = 5_000_000;

    /// Two crossings of headroom above `d`.
    pub fn default_for(d: &Diagram) -> Budget {
        Budget { max_crossings: d.crossing_count() + 2, max_states: Self::DEFAULT_STATES }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A diagram with fewer crossings, or a split/reducible one, was reached.
    ReducedTo(Diagram),
    /// The closure stayed at or above the starting crossing number. The id
    /// is the least mirror-normalized code among the closure's diagrams with
    /// the starting crossing number, so equal ids mean equal closures.
    SurvivorClass(Vec<u8>),
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub states: usize,
    /// Mirror-normalized codes met at the starting crossing number.
    pub level_codes: Vec<Vec<u8>>,
}

pub(crate) fn hash128(code: &[u8]) -> u128 {
    let mut a = DefaultHasher::new();
    0u8.hash(&mut a);
    code.hash(&mut a);
    let mut b = DefaultHasher::new();
    1u8.hash(&mut b);
    code.hash(&mut b);
    ((a.finish() as u128) << 64) | b.finish() as u128
}

pub fn reduce_search(d: &Diagram, budget: Budget, moves: MoveSet) -> Verdict {
    reduce_search_detailed(d, budget, moves).verdict
}

/// Lowest-crossing-first closure of `d` under the move set, capped by the
/// budget. States are identified up to mirror image.
pub fn reduce_search_detailed(d: &Diagram, budget: Budget, moves: MoveSet) -> SearchOutcome {
    let c0 = d.crossing_count();
    assert!(budget.max_crossings >= c0, "budget below the starting crossing number");
    if d.connectivity_at_most_one() {
        return SearchOutcome { verdict: Verdict::ReducedTo(d.clone()), states: 1, level_codes: vec![] };
    }
    let kinds = moves.kinds();
    let mut visited: HashSet<u128> = HashSet::new();
    let mut buckets: Vec<Vec<Box<[u8]>>> = vec![Vec::new(); budget.max_crossings - c0 + 1];
    let start = d.code_mod_mirror();
    visited.insert(hash128(&start));
    let mut level_codes = vec![start.clone()];
    buckets[0].push(start.into_boxed_slice());
    loop {
        let Some(level) = buckets.iter().position(|b| !b.is_empty()) else {
            break;
        };
        let code = buckets[level].pop().unwrap();
        let cur = Diagram::from_code(&code).expect("stored codes decode");
        let c = cur.crossing_count();
        for step in enumerate_move_sites(&cur, kinds, c < budget.max_crossings) {
            let nc = (c as i64 + step.crossing_delta() as i64) as usize;
            if nc > budget.max_crossings {
                continue;
            }
            let next = apply_move(&cur, &step).expect("enumerated sites apply");
            if nc < c0 || next.connectivity_at_most_one() {
                return SearchOutcome { verdict: Verdict::ReducedTo(next), states: visited.len(), level_codes };
            }
            let ncode = next.code_mod_mirror();
            if visited.insert(hash128(&ncode)) {
                if visited.len() > budget.max_states {
                    return SearchOutcome { verdict: Verdict::Inconclusive, states: visited.len(), level_codes };
                }
                if nc == c0 {
                    level_codes.push(ncode.clone());
                }
                buckets[nc - c0].push(ncode.into_boxed_slice());
            }
        }
    }
    let id = level_codes.iter().min().cloned().unwrap_or_default();
    SearchOutcome { verdict: Verdict::SurvivorClass(id), states: visited.len(), level_codes }
}
