use diagram::Diagram;
use fingroup::GroupTable;
use invariants::{
    chirality_test_presentation, count_hom_classes, deletion_ks, elementary_divisors, irreducibility_test, linking_matrix,
    Conclusion, IrreducibilityVerdict,
};
use serde::{Deserialize, Serialize};
use sums::split_union;
use wirtinger::{presentation_from_diagram, tietze_simplify, Presentation};

/// Effort passed to the Tietze simplifier.
pub const TIETZE_EFFORT: usize = 50;

/// A yes/no claim with the operation behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub certified: bool,
    pub by: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "flag", rename_all = "kebab-case")]
pub enum ChiralityFlag {
    Chiral { by: String },
    AchiralWitnessed { by: String },
    ChiralityOpen { note: String },
}

impl ChiralityFlag {
    pub fn is_chiral(&self) -> bool {
        matches!(self, ChiralityFlag::Chiral { .. })
    }
}

/// Linking data between components `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingPair {
    pub a: usize,
    pub b: usize,
    pub entries: Vec<Vec<i64>>,
    pub divisors: Vec<i64>,
}

/// The invariants that identify an entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub ks_a4: u64,
    pub ks_a5: Option<u64>,
    pub deletion_ks_a4: Vec<u64>,
    /// Sorted divisor lists over all component pairs.
    pub linking: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub c: usize,
    pub n: usize,
    pub e: usize,
    pub ks_a4: u64,
    pub ks_a5: Option<u64>,
    pub rank_bound: usize,
    pub deletion_ks_a4: Vec<u64>,
    pub linking: Vec<LinkingPair>,
    pub divisibility: Option<IrreducibilityVerdict>,
}

pub struct Groups {
    pub a4: GroupTable,
    /// `None` skips the second group.
    pub a5: Option<GroupTable>,
}

fn ks(p: &Presentation, g: &GroupTable) -> u64 {
    count_hom_classes(p, g)
}

pub fn simplified(d: &Diagram) -> Presentation {
    tietze_simplify(&presentation_from_diagram(d), TIETZE_EFFORT)
}

pub fn linking_pairs(d: &Diagram) -> Vec<LinkingPair> {
    let n = d.component_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let m = linking_matrix(d, a, b).expect("components exist");
            out.push(LinkingPair { a, b, entries: m.entries, divisors: m.divisors });
        }
    }
    out
}

pub fn analyze(d: &Diagram, groups: &Groups) -> Analysis {
    let p = simplified(d);
    let n = d.component_count();
    let ks_a4 = ks(&p, &groups.a4);
    let ks_a5 = groups.a5.as_ref().map(|g| ks(&p, g));
    let divisibility = (n >= 2).then(|| irreducibility_test(ks_a4, ks_a5, n as u32, p.generators as u32));
    Analysis {
        c: d.crossing_count(),
        n,
        e: d.connectivity(),
        ks_a4,
        ks_a5,
        rank_bound: p.generators,
        deletion_ks_a4: deletion_ks(d, &groups.a4),
        linking: linking_pairs(d),
        divisibility,
    }
}

impl Analysis {
    pub fn fingerprint(&self) -> Fingerprint {
        let mut linking: Vec<Vec<i64>> = self.linking.iter().map(|p| p.divisors.clone()).collect();
        linking.sort();
        Fingerprint {
            n: self.n,
            ks_a4: self.ks_a4,
            ks_a5: self.ks_a5,
            deletion_ks_a4: self.deletion_ks_a4.clone(),
            linking,
        }
    }
}

/// Keeps only the components in `keep`.
fn restrict(d: &Diagram, keep: &[usize]) -> Diagram {
    let dead: Vec<usize> = (0..d.component_count()).filter(|c| !keep.contains(c)).collect();
    d.delete_components(&dead).expect("components exist")
}

/// No sphere separates the components: either the components are joined
/// by nonzero linking, or, for each bipartition without linking across it,
/// the KS count differs from that of the split union of the two sublinks.
pub fn nonsplit_certificate(d: &Diagram, a: &Analysis, groups: &Groups) -> Certificate {
    let n = a.n;
    let linked = |x: usize, y: usize| {
        a.linking.iter().any(|p| ((p.a == x && p.b == y) || (p.a == y && p.b == x)) && !p.divisors.is_empty())
    };
    let mut routes = Vec::new();
    // bipartitions with component 0 on the left
    for mask in 1..(1u32 << (n - 1)) {
        let right: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        let left: Vec<usize> = (0..n).filter(|i| !right.contains(i)).collect();
        if left.iter().any(|&x| right.iter().any(|&y| linked(x, y))) {
            continue;
        }
        let model = split_union(&restrict(d, &left), &restrict(d, &right)).expect("union of valid diagrams");
        let p = simplified(&model);
        let name = format!("{:?}|{:?}", left, right);
        let k4 = ks(&p, &groups.a4);
        if k4 != a.ks_a4 {
            routes.push(format!("{} {}: {} vs {}", groups.a4.name(), name, a.ks_a4, k4));
            continue;
        }
        match (&groups.a5, a.ks_a5) {
            (Some(g5), Some(mine)) if ks(&p, g5) != mine => {
                routes.push(format!("{} {}: {} vs {}", g5.name(), name, mine, ks(&p, g5)));
            }
            _ => {
                return Certificate { certified: false, by: format!("KS equals the split model {}", name) };
            }
        }
    }
    if routes.is_empty() {
        Certificate { certified: true, by: "nonzero linking joins all components".into() }
    } else {
        Certificate { certified: true, by: format!("linking, then KS against split models ({})", routes.join("; ")) }
    }
}

/// The divisibility test, then for three components the linking route: a
/// nonzero linking number between the circles excludes a two-component
/// factor, and a unimodular linking matrix between the graph cycles and
/// the circles excludes a trivial-knot factor.
pub fn irreducible_certificate(d: &Diagram, a: &Analysis) -> Certificate {
    let Some(v) = &a.divisibility else {
        return Certificate { certified: false, by: "not a link".into() };
    };
    if v.conclusion == Conclusion::Irreducible {
        let used_a5 = v.conditions.iter().any(|c| c.name.ends_with("A5"));
        let by = if used_a5 { "divisibility test (A4, A5)" } else { "divisibility test (A4)" };
        return Certificate { certified: true, by: format!("{} with rank bound {}", by, a.rank_bound) };
    }
    if a.n == 3 {
        let comps = d.components();
        let circles: Vec<usize> = (0..3).filter(|&i| comps[i].is_circle()).collect();
        let graph = (0..3).find(|&i| !comps[i].is_circle()).expect("one graph component");
        let pair = |x: usize, y: usize| {
            a.linking.iter().find(|p| (p.a, p.b) == (x.min(y), x.max(y))).expect("pair present")
        };
        let lk = &pair(circles[0], circles[1]).entries[0][0];
        let columns: Vec<Vec<i64>> = circles
            .iter()
            .map(|&c| {
                let p = pair(graph, c);
                // rows index the lower component's cycles
                if p.a == graph {
                    p.entries.iter().map(|r| r[0]).collect()
                } else {
                    p.entries[0].clone()
                }
            })
            .collect();
        let rows: Vec<Vec<i64>> = (0..columns[0].len()).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
        let onto = {
            let div = elementary_divisors(&rows);
            div.len() == 2 && div.iter().all(|&x| x == 1)
        };
        let holds = |name: &str| v.condition(name).map(|c| c.holds);
        // a trivial-knot factor: needs eq1 (both parts when known) and a
        // homology map that is not onto
        let eq1 = holds("eq1-A4") == Some(true) && holds("eq1-A5") != Some(false);
        let trivial = if !eq1 {
            Some("eq1 fails".to_string())
        } else if onto {
            Some("circles generate the homology of the graph complement".to_string())
        } else {
            None
        };
        // a 2-generator 2-component factor would separate the two circles
        let eq3 = v.conditions.iter().any(|c| c.name.starts_with("eq3-") && c.holds);
        let pair_factor = if !eq3 {
            Some("eq3 fails".to_string())
        } else if *lk != 0 {
            Some(format!("circles link {} times", lk.abs()))
        } else {
            None
        };
        if a.rank_bound <= 4 {
            if let (Some(t), Some(l)) = (trivial, pair_factor) {
                return Certificate { certified: true, by: format!("linking: {}; {}", t, l) };
            }
        }
    }
    Certificate { certified: false, by: format!("divisibility test inconclusive: {}", v.reasons.join("; ")) }
}

/// Constrained counts on every circle component.
pub fn chirality(d: &Diagram, g: &GroupTable) -> ChiralityFlag {
    let p = presentation_from_diagram(d);
    let mut seen = Vec::new();
    for (i, c) in d.components().iter().enumerate() {
        if !c.is_circle() {
            continue;
        }
        let r = chirality_test_presentation(&p, i, g).expect("circle component");
        if r.n != r.rn {
            return ChiralityFlag::Chiral {
                by: format!("constrained {} counts on component {}: N = {}, rN = {}", g.name(), i, r.n, r.rn),
            };
        }
        seen.push(format!("{}: {}", i, r.n));
    }
    ChiralityFlag::ChiralityOpen { note: format!("constrained {} counts agree ({})", g.name(), seen.join(", ")) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fingroup::alternating_group;

    fn groups() -> Groups {
        Groups { a4: alternating_group(4), a5: Some(alternating_group(5)) }
    }

    #[test]
    fn restrict_keeps_named_components() {
        let d: Diagram = "V(1,2,3) V(1,4,5) X(7,8,6,2) X(10,11,9,3) X(11,12,4,9) X(8,7,5,13) X(6,15,14,10) X(12,14,15,13)"
            .parse()
            .unwrap();
        for keep in [vec![0], vec![1, 2], vec![0, 2]] {
            assert_eq!(restrict(&d, &keep).component_count(), keep.len());
        }
    }

    #[test]
    fn hopf_is_nonsplit_by_linking() {
        let d: Diagram = "X(4,1,2,3) X(1,4,3,2)".parse().unwrap();
        let g = groups();
        let a = analyze(&d, &g);
        let c = nonsplit_certificate(&d, &a, &g);
        assert!(c.certified && c.by.starts_with("nonzero linking"));
    }

    #[test]
    fn a_split_diagram_is_not_certified() {
        let d: Diagram = "V(1,2,3) V(3,2,1) O".parse().unwrap();
        let g = groups();
        let a = analyze(&d, &g);
        assert!(!nonsplit_certificate(&d, &a, &g).certified);
        assert!(!irreducible_certificate(&d, &a).certified);
    }

    #[test]
    fn whitehead_needs_the_ks_route() {
        let d: Diagram = "X(4,1,2,3) X(6,7,3,5) X(1,4,7,8) X(9,10,8,6) X(5,2,10,9)".parse().unwrap();
        let g = groups();
        let a = analyze(&d, &g);
        let c = nonsplit_certificate(&d, &a, &g);
        assert!(c.certified && c.by.contains("split models"), "{:?}", c);
    }
}
