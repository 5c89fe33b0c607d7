use diagram::{assign_crossings, Diagram};
use fingroup::{symmetric_group, GroupTable};
use planar_enum::enumerate_plane_graphs;
use proptest::prelude::*;
use wirtinger::{presentation_from_diagram, tietze_simplify, Presentation};

const HOPF: &str = "X(4,1,2,3) X(1,4,3,2)";

fn hopf() -> Diagram {
    HOPF.parse().unwrap()
}

/// Every assignment of generators, checked against every relator.
fn brute_homs(p: &Presentation, g: &GroupTable) -> u64 {
    let k = p.generators;
    let mut img = vec![0usize; k];
    let mut count = 0;
    loop {
        let ok = p.relators.iter().all(|r| {
            r.iter().fold(0, |acc, &l| {
                let x = img[(l.unsigned_abs() - 1) as usize];
                g.mul(acc, if l > 0 { x } else { g.inv(x) })
            }) == 0
        });
        count += ok as u64;
        let mut i = 0;
        while i < k {
            img[i] += 1;
            if img[i] < g.order() {
                break;
            }
            img[i] = 0;
            i += 1;
        }
        if i == k {
            return count;
        }
    }
}

fn is_commutator(w: &[i32]) -> bool {
    w.len() == 4 && (0..4).any(|s| {
        let r: Vec<i32> = (0..4).map(|i| w[(i + s) % 4]).collect();
        r[0].abs() != r[1].abs() && r[2] == -r[0] && r[3] == -r[1]
    })
}

#[test]
fn hopf_simplifies_to_a_commutator() {
    let p = tietze_simplify(&presentation_from_diagram(&hopf()), 50);
    assert_eq!(p.generators, 2);
    assert_eq!(p.relators.len(), 1);
    assert!(is_commutator(&p.relators[0]), "{:?}", p.relators[0]);
}

#[test]
fn hopf_longitude_is_the_other_meridian() {
    let p = presentation_from_diagram(&hopf());
    // Wirtinger relators abelianize to x = y; merge those generators
    let mut class: Vec<usize> = (0..p.generators).collect();
    for row in p.exponent_matrix() {
        let nz: Vec<usize> = (0..row.len()).filter(|&i| row[i] != 0).collect();
        if let [a, b] = nz[..] {
            if row[a] == -row[b] {
                let (ca, cb) = (class[a], class[b]);
                for c in class.iter_mut() {
                    if *c == cb {
                        *c = ca;
                    }
                }
            }
        }
    }
    let image = |w: &[i32]| {
        let mut v = std::collections::BTreeMap::new();
        for &l in w {
            *v.entry(class[(l.unsigned_abs() - 1) as usize]).or_insert(0i64) += l.signum() as i64;
        }
        v.retain(|_, x| *x != 0);
        v
    };
    for (a, b) in [(0, 1), (1, 0)] {
        let la = image(&p.peripheral_of(a).unwrap().longitude);
        let mb = image(&p.peripheral_of(b).unwrap().meridian);
        assert_eq!(mb.len(), 1);
        let (gen, _) = mb.iter().next().unwrap();
        assert_eq!(la.len(), 1, "{:?}", la);
        assert_eq!(la[gen].abs(), 1);
    }
}

#[test]
fn theta_group_is_free_of_rank_two() {
    let p = tietze_simplify(&presentation_from_diagram(&Diagram::theta()), 50);
    assert_eq!(p.generators, 2);
    assert!(p.relators.is_empty());
}

fn small_pool() -> Vec<Diagram> {
    let mut out = vec![Diagram::theta(), hopf()];
    for q in 2..=3 {
        for g in enumerate_plane_graphs(q).unwrap() {
            out.extend(assign_crossings(&g));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tietze_keeps_s3_homs_and_abelian_rank(i in 0usize..10_000, flips in proptest::collection::vec(any::<bool>(), 6)) {
        let pool = small_pool();
        let mut d = pool[i % pool.len()].clone();
        for (v, f) in flips.into_iter().enumerate() {
            if f && v < d.vertex_count() {
                d = d.with_flipped(v);
            }
        }
        let p = presentation_from_diagram(&d);
        let s = tietze_simplify(&p, 50);
        prop_assert!(s.generators <= p.generators);
        prop_assert_eq!(s.abelian_rank(), p.abelian_rank());
        let s3 = symmetric_group(3);
        prop_assert_eq!(brute_homs(&s, &s3), brute_homs(&p, &s3));
    }
}
