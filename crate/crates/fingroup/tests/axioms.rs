use std::collections::HashSet;

use fingroup::{alternating_group, burnside_free_hom_classes, symmetric_group, GroupTable};
use proptest::prelude::*;

fn groups() -> Vec<GroupTable> {
    vec![alternating_group(4), alternating_group(5), symmetric_group(3), symmetric_group(4)]
}

#[test]
fn associativity_identity_inverse() {
    for g in groups() {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn class_equation() {
    for g in groups() {
        assert_eq!(g.class_sizes().iter().sum::<usize>(), g.order());
        for a in 0..g.order() {
            let size = g.class_sizes()[g.class_of(a)];
            assert_eq!(size * g.centralizer_order(a), g.order(), "{:?} element {}", g, a);
        }
    }
}

// Orbits of r-tuples under simultaneous conjugation, counted one by one.
fn direct_orbits(g: &GroupTable, r: u32) -> usize {
    let n = g.order();
    let mut seen = HashSet::new();
    let mut orbits = 0;
    for idx in 0..n.pow(r) {
        let tuple: Vec<usize> = (0..r).map(|i| idx / n.pow(i) % n).collect();
        if seen.contains(&tuple) {
            continue;
        }
        orbits += 1;
        for x in 0..n {
            seen.insert(tuple.iter().map(|&t| g.conj(x, t)).collect::<Vec<_>>());
        }
    }
    orbits
}

#[test]
fn burnside_matches_direct_orbits() {
    for g in [alternating_group(4), symmetric_group(3), symmetric_group(4)] {
        for r in 0..=2 {
            assert_eq!(burnside_free_hom_classes(&g, r) as usize, direct_orbits(&g, r), "{:?} r={}", g, r);
        }
    }
    assert_eq!(direct_orbits(&alternating_group(4), 3), 178);
}

proptest! {
    #[test]
    fn conjugation_is_an_automorphism(x in 0usize..60, a in 0usize..60, b in 0usize..60) {
        let g = alternating_group(5);
        prop_assert_eq!(g.conj(x, g.mul(a, b)), g.mul(g.conj(x, a), g.conj(x, b)));
        prop_assert_eq!(g.class_of(g.conj(x, a)), g.class_of(a));
        prop_assert_eq!(g.element_order(a), g.element_order(g.conj(x, a)));
        prop_assert_eq!(g.pow(a, -3), g.inv(g.pow(a, 3)));
    }

    #[test]
    fn permutation_images_compose(a in 0usize..12, b in 0usize..12) {
        let g = alternating_group(4);
        let (p, q, pq) = (g.permutation(a).unwrap(), g.permutation(b).unwrap(), g.permutation(g.mul(a, b)).unwrap());
        for i in 0..4 {
            prop_assert_eq!(pq[i], p[q[i] as usize]);
        }
    }
}
