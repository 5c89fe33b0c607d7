//! Kitano–Suzuki counts, constrained counts for chirality, linking
//! matrices between components and the divisibility test for
//! irreducibility.

mod homcount;
mod irreducibility;
mod linking;

use diagram::Diagram;
use fingroup::GroupTable;
use serde::{Deserialize, Serialize};
use wirtinger::word::inverse;
use wirtinger::{presentation_from_diagram, tietze_simplify, Presentation};

pub use homcount::{
    count_constrained_classes, count_hom_classes, count_hom_classes_burnside, count_hom_classes_with_workers,
    count_homs, count_homs_into, search_nodes,
};
pub use irreducibility::{irreducibility_test, Condition, Conclusion, IrreducibilityVerdict};
pub use linking::{cycle_basis, elementary_divisors, linking_matrix, Cycle, LinkingMatrix};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("component {0} not found")]
    NoComponent(usize),
    #[error("component {0} is not a circle")]
    NotCircle(usize),
    #[error("linking needs two distinct components, got {0} twice")]
    SameComponent(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KsValue {
    pub group: String,
    pub count: u64,
}

/// Kitano–Suzuki invariant of the diagram's complement.
pub fn ks(d: &Diagram, g: &GroupTable) -> KsValue {
    KsValue { group: g.name().to_string(), count: count_hom_classes(&presentation_from_diagram(d), g) }
}

/// Kitano–Suzuki counts of the diagrams left after erasing each circle
/// component in turn, sorted.
pub fn deletion_ks(d: &Diagram, g: &GroupTable) -> Vec<u64> {
    let mut out: Vec<u64> = d
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_circle())
        .map(|(i, _)| {
            let e = d.delete_component(i).expect("component exists");
            count_hom_classes(&tietze_simplify(&presentation_from_diagram(&e), 50), g)
        })
        .collect();
    out.sort_unstable();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chirality {
    Chiral,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiralityResult {
    /// Classes killing m·l.
    pub n: u64,
    /// Classes killing m·l⁻¹.
    pub rn: u64,
    pub verdict: Chirality,
}

/// Compares the counts of homomorphism classes killing `m·l` and `m·l⁻¹`
/// for a circle component. A mirror image swaps the two counts, so unequal
/// counts certify chirality.
pub fn chirality_test(d: &Diagram, comp: usize, g: &GroupTable) -> Result<ChiralityResult, InvariantError> {
    let p = presentation_from_diagram(d);
    chirality_test_presentation(&p, comp, g)
}

pub fn chirality_test_presentation(p: &Presentation, comp: usize, g: &GroupTable) -> Result<ChiralityResult, InvariantError> {
    let per = p.peripheral_of(comp).ok_or(InvariantError::NotCircle(comp))?;
    let ml: Vec<i32> = per.meridian.iter().chain(&per.longitude).copied().collect();
    let mli: Vec<i32> = per.meridian.iter().copied().chain(inverse(&per.longitude)).collect();
    let n = count_constrained_classes(p, g, &ml);
    let rn = count_constrained_classes(p, g, &mli);
    let verdict = if n != rn { Chirality::Chiral } else { Chirality::Inconclusive };
    Ok(ChiralityResult { n, rn, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fingroup::{alternating_group, burnside_free_hom_classes};

    #[test]
    fn free_and_trivial_groups() {
        let a4 = alternating_group(4);
        assert_eq!(count_hom_classes(&Presentation::free(3), &a4), 178);
        let p = Presentation { generators: 1, relators: vec![vec![1]], peripheral: vec![] };
        assert_eq!(count_hom_classes(&p, &alternating_group(5)), 1);
        assert_eq!(count_hom_classes(&Presentation::free(0), &a4), 1);
    }

    #[test]
    fn split_theta_and_circle() {
        let d: Diagram = "V(1,2,3) V(3,2,1) O".parse().unwrap();
        for g in [alternating_group(4), alternating_group(5)] {
            assert_eq!(ks(&d, &g).count as u128, burnside_free_hom_classes(&g, 3));
        }
    }

    #[test]
    fn empty_kill_is_unconstrained() {
        let d: Diagram = "X(1,4,2,3) X(3,2,4,1)".parse().unwrap();
        let p = presentation_from_diagram(&d);
        let a4 = alternating_group(4);
        assert_eq!(count_constrained_classes(&p, &a4, &[]), count_hom_classes(&p, &a4));
    }

    #[test]
    fn hopf_linking() {
        let d: Diagram = "X(1,4,2,3) X(3,2,4,1)".parse().unwrap();
        assert_eq!(linking_matrix(&d, 0, 1).unwrap().divisors, vec![1]);
        assert_eq!(elementary_divisors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(elementary_divisors(&[vec![0, 0]]), Vec::<i64>::new());
    }
}
