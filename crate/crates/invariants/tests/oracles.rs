use diagram::{apply_move, assign_crossings, enumerate_move_sites, Diagram, MoveKind};
use fingroup::alternating_group;
use invariants::{
    chirality_test, count_hom_classes, count_hom_classes_burnside, irreducibility_test, linking_matrix, Conclusion,
};
use planar_enum::enumerate_plane_graphs;
use proptest::prelude::*;
use wirtinger::{integer_rank, presentation_from_diagram, tietze_simplify};

const HOPF: &str = "X(4,1,2,3) X(1,4,3,2)";
const FIG_4_1: &str = "V(1,2,3) V(4,5,6) X(7,2,6,8) X(8,5,3,7) X(11,4,9,10) X(1,11,10,9)";
const FIG_6_3: &str =
    "V(1,2,3) X(1,4,5,6) X(9,2,7,8) X(10,5,4,3) X(6,11,12,7) X(8,13,14,9) V(10,14,15) X(11,15,13,12)";

fn pool(max_q: usize) -> Vec<Diagram> {
    let mut out = vec![Diagram::theta(), HOPF.parse().unwrap()];
    for q in 1..=max_q {
        for g in enumerate_plane_graphs(q).unwrap() {
            out.extend(assign_crossings(&g));
        }
    }
    out
}

fn exponents(gens: usize, w: &[i32]) -> Vec<i64> {
    let mut v = vec![0; gens];
    for &l in w {
        v[(l.unsigned_abs() - 1) as usize] += l.signum() as i64;
    }
    v
}

/// Whether `w` vanishes in the rational abelianization of the complement.
fn abelian_zero(d: &Diagram, w: &[i32]) -> bool {
    let p = presentation_from_diagram(d);
    let m = p.exponent_matrix();
    let mut with = m.clone();
    with.push(exponents(p.generators, w));
    integer_rank(with) == integer_rank(m)
}

#[test]
fn hopf_links_once() {
    let d: Diagram = HOPF.parse().unwrap();
    let m = linking_matrix(&d, 0, 1).unwrap();
    assert_eq!(m.divisors, vec![1]);
    // l0 = m1^{±1} in homology
    let p = presentation_from_diagram(&d);
    let l0 = &p.peripheral_of(0).unwrap().longitude;
    let m1 = &p.peripheral_of(1).unwrap().meridian;
    assert!(!abelian_zero(&d, l0));
    let sign = m.entries[0][0] as i32;
    let mut w = l0.clone();
    w.extend(m1.iter().map(|&l| -sign * l));
    assert!(abelian_zero(&d, &w));
}

#[test]
fn fig_4_1_linking_vanishes() {
    let d: Diagram = FIG_4_1.parse().unwrap();
    assert!(linking_matrix(&d, 0, 1).unwrap().is_zero());
    assert!(linking_matrix(&d, 1, 0).unwrap().is_zero());
    let p = presentation_from_diagram(&d);
    let per = &p.peripheral[0];
    assert!(abelian_zero(&d, &per.longitude));
}

#[test]
fn mirror_swaps_constrained_counts() {
    let a5 = alternating_group(5);
    let d: Diagram = FIG_6_3.parse().unwrap();
    let m = d.mirror();
    let circle = d.components().iter().position(|c| c.is_circle()).unwrap();
    let r = chirality_test(&d, circle, &a5).unwrap();
    let rm = chirality_test(&m, circle, &a5).unwrap();
    let mut pair = [r.n, r.rn];
    pair.sort();
    assert_eq!(pair, [77, 111]);
    assert_eq!((rm.n, rm.rn), (r.rn, r.n));
}

#[test]
fn divisibility_arithmetic() {
    // 4_1: 114 + 6*9 + 2*16
    let v = irreducibility_test(114, Some(600), 2, 3);
    let c = v.condition("eq1-A4").unwrap();
    assert_eq!((c.value, c.value % 12), (200, 8));
    assert_eq!(v.conclusion, Conclusion::Irreducible);

    // 6_12: 502 + 6*27 + 2*64, then 5883 + 14*64 + 19*27 + 22*125
    let v = irreducibility_test(502, Some(5883), 3, 4);
    let c = v.condition("eq1-A4").unwrap();
    assert_eq!(c.value, 792);
    assert!(c.holds && 792 == 66 * 12);
    let c = v.condition("eq1-A5").unwrap();
    assert_eq!((c.value, c.value % 60), (10042, 22));
    assert!(!c.holds);

    // 6_9: 310 + 26*9 + 8*16 = 14 * 48
    let v = irreducibility_test(310, Some(1841), 3, 4);
    let c = v.condition("eq3-p0").unwrap();
    assert_eq!(c.value, 672);
    assert!(c.holds);
    assert_eq!(v.conclusion, Conclusion::Inconclusive);
}

#[test]
fn burnside_agrees_with_direct_count() {
    let a4 = alternating_group(4);
    for d in pool(3) {
        let p = tietze_simplify(&presentation_from_diagram(&d), 50);
        assert_eq!(count_hom_classes_burnside(&p, &a4), count_hom_classes(&p, &a4), "{}", d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ks_is_invariant_under_moves(i in 0usize..100_000, j in 0usize..100_000) {
        let pool = pool(3);
        let d = &pool[i % pool.len()];
        let sites = enumerate_move_sites(d, &MoveKind::ALL, true);
        prop_assume!(!sites.is_empty());
        let step = sites[j % sites.len()];
        let e = apply_move(d, &step).unwrap();
        let a4 = alternating_group(4);
        let ks = |x: &Diagram| count_hom_classes(&tietze_simplify(&presentation_from_diagram(x), 50), &a4);
        prop_assert_eq!(ks(d), ks(&e), "{} via {}", d, step);
    }

    #[test]
    fn longitude_vanishes_iff_linking_does(i in 0usize..100_000) {
        let pool = pool(4);
        let d = &pool[i % pool.len()];
        let comps = d.components();
        prop_assume!(comps.len() >= 2);
        let p = presentation_from_diagram(d);
        for per in &p.peripheral {
            let unlinked = (0..comps.len())
                .filter(|&b| b != per.component)
                .all(|b| linking_matrix(d, per.component, b).unwrap().is_zero());
            prop_assert_eq!(abelian_zero(d, &per.longitude), unlinked, "{} component {}", d, per.component);
        }
    }
}
