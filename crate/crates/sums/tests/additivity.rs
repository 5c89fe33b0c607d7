use diagram::{assign_crossings, Diagram};
use planar_enum::enumerate_plane_graphs;
use proptest::prelude::*;
use sums::{edge_sites, order1_sum, order2_sum, split_union, SumSite};
use wirtinger::presentation_from_diagram;

fn pool() -> Vec<Diagram> {
    let mut out = vec![Diagram::theta(), "X(4,1,2,3) X(1,4,3,2)".parse().unwrap()];
    for q in 1..=3 {
        for g in enumerate_plane_graphs(q).unwrap() {
            out.extend(assign_crossings(&g));
        }
    }
    out
}

fn rank(d: &Diagram) -> usize {
    presentation_from_diagram(d).abelian_rank()
}

fn pick(i: usize) -> Diagram {
    let p = pool();
    p[i % p.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order2_sum_adds_crossings(i in 0usize..10_000, j in 0usize..10_000, a in 0usize..100, b in 0usize..100, flip: bool) {
        let (d1, d2) = (pick(i), pick(j));
        let (s1, s2) = (edge_sites(&d1), edge_sites(&d2));
        let s = order2_sum(
            &d1,
            SumSite::Edge { dart: s1[a % s1.len()], flip },
            &d2,
            SumSite::Edge { dart: s2[b % s2.len()], flip: false },
        ).unwrap();
        prop_assert!(s.graph().is_spherical());
        prop_assert_eq!(s.crossing_count(), d1.crossing_count() + d2.crossing_count());
        prop_assert_eq!(s.component_count(), d1.component_count() + d2.component_count() - 1);
        prop_assert_eq!(rank(&s), rank(&d1) + rank(&d2) - 1);
    }

    #[test]
    fn order1_sum_joins_two_components(i in 0usize..10_000, j in 0usize..10_000, a in 0usize..10, b in 0usize..10) {
        let (d1, d2) = (pick(i), pick(j));
        let (c1, c2) = (a % d1.component_count(), b % d2.component_count());
        let s = order1_sum(&d1, SumSite::Component(c1), &d2, SumSite::Component(c2)).unwrap();
        prop_assert_eq!(s.crossing_count(), d1.crossing_count() + d2.crossing_count());
        prop_assert_eq!(s.vertex_count(), d1.vertex_count() + d2.vertex_count() + 2);
        prop_assert_eq!(s.component_count(), d1.component_count() + d2.component_count() - 1);
        prop_assert_eq!(rank(&s), rank(&d1) + rank(&d2));
    }

    #[test]
    fn split_union_is_a_free_product(i in 0usize..10_000, j in 0usize..10_000) {
        let (d1, d2) = (pick(i), pick(j));
        let s = split_union(&d1, &d2).unwrap();
        let (p, p1, p2) = (presentation_from_diagram(&s), presentation_from_diagram(&d1), presentation_from_diagram(&d2));
        prop_assert_eq!(p.generators, p1.generators + p2.generators);
        prop_assert_eq!(p.relators.len(), p1.relators.len() + p2.relators.len());
        prop_assert_eq!(s.component_count(), d1.component_count() + d2.component_count());
    }
}
