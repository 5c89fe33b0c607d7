use diagram::{apply_move, assign_crossings, enumerate_move_sites, Diagram, Direction, MoveKind, MoveStep};
use planar_enum::{enumerate_plane_graphs, Kind, PlaneGraph};
use proptest::prelude::*;

fn pool(max_q: usize) -> Vec<Diagram> {
    let mut out = vec![Diagram::theta()];
    for q in 1..=max_q {
        for g in enumerate_plane_graphs(q).unwrap() {
            out.extend(assign_crossings(&g));
        }
    }
    out
}

fn inverse_kind_direction(step: &MoveStep) -> Direction {
    match step.kind {
        MoveKind::R3 | MoveKind::IH => Direction::Apply,
        _ => match step.direction {
            Direction::Apply => Direction::Inverse,
            Direction::Inverse => Direction::Apply,
        },
    }
}

#[test]
fn every_move_keeps_sphere_components_and_vertices() {
    for d in pool(3) {
        let n = d.component_count();
        for step in enumerate_move_sites(&d, &MoveKind::ALL, true) {
            let r = apply_move(&d, &step).unwrap();
            assert!(r.graph().is_spherical(), "{} via {}", d, step);
            assert_eq!(r.component_count(), n, "{} via {}", d, step);
            assert_eq!(r.vertex_count(), d.vertex_count());
            assert_eq!(
                r.crossing_count() as i64,
                d.crossing_count() as i64 + step.crossing_delta() as i64,
                "{} via {}",
                d,
                step
            );
        }
    }
}

#[test]
fn every_move_can_be_undone() {
    for d in pool(3) {
        let target = d.oriented_code();
        for step in enumerate_move_sites(&d, &MoveKind::ALL, true) {
            let r = apply_move(&d, &step).unwrap();
            let dir = inverse_kind_direction(&step);
            let undone = enumerate_move_sites(&r, &[step.kind], true)
                .into_iter()
                .filter(|s| s.direction == dir)
                .any(|s| apply_move(&r, &s).unwrap().oriented_code() == target);
            assert!(undone, "cannot undo {} on {}", step, d);
        }
    }
}

#[test]
fn r1_on_a_kink_removes_a_crossing() {
    let d: Diagram = "X(1,1,2,3) V(2,4,5) V(3,5,4)".parse().unwrap();
    let steps = enumerate_move_sites(&d, &[MoveKind::R1], false);
    assert_eq!(steps.len(), 1);
    let r = apply_move(&d, &steps[0]).unwrap();
    assert_eq!(r.crossing_count(), 0);
    assert_eq!(r.oriented_code(), Diagram::theta().oriented_code());
}

#[test]
fn ih_turns_theta_into_handcuff() {
    let theta = Diagram::theta();
    let steps = enumerate_move_sites(&theta, &[MoveKind::IH], false);
    assert_eq!(steps.len(), 3);
    let handcuff = Diagram::unknotted(PlaneGraph::new(vec![Kind::Tri, Kind::Tri], vec![3, 2, 1, 0, 5, 4]));
    for s in steps {
        let r = apply_move(&theta, &s).unwrap();
        assert_eq!(r.oriented_code(), handcuff.oriented_code());
    }
}

#[test]
fn r3_twice_is_identity() {
    let mut checked = 0;
    for d in pool(4) {
        for s in enumerate_move_sites(&d, &[MoveKind::R3], false) {
            let r = apply_move(&d, &s).unwrap();
            let back = enumerate_move_sites(&r, &[MoveKind::R3], false)
                .into_iter()
                .any(|t| apply_move(&r, &t).unwrap().oriented_code() == d.oriented_code());
            assert!(back);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn crossing_free_diagram_has_no_r3_sites() {
    assert!(enumerate_move_sites(&Diagram::theta(), &[MoveKind::R3], true).is_empty());
}

#[test]
fn mirror_is_an_involution_and_flips_kinks() {
    for d in pool(3) {
        assert_eq!(d.mirror().mirror(), d);
    }
    let kink: Diagram = "X(1,1,2,3) V(2,4,5) V(3,5,4)".parse().unwrap();
    assert_ne!(kink.oriented_code(), kink.mirror().oriented_code());
    assert_eq!(Diagram::theta().mirror(), Diagram::theta());
}

#[test]
fn turning_over_is_invisible_to_codes() {
    for d in pool(4) {
        assert_eq!(d.turned_over().oriented_code(), d.oriented_code());
        assert_eq!(Diagram::from_code(&d.oriented_code()).unwrap().oriented_code(), d.oriented_code());
    }
}

#[test]
fn text_code_roundtrip() {
    for d in pool(4) {
        let back: Diagram = d.to_code().parse().unwrap();
        assert_eq!(back.oriented_code(), d.oriented_code(), "{}", d);
    }
}

#[test]
fn handcuff_g2_1_has_no_reducing_site() {
    let d: Diagram = "V(1,2,3) V(1,4,5) X(7,2,5,6) X(6,4,3,7)".parse().unwrap();
    let reducing = |d: &Diagram| {
        enumerate_move_sites(d, &MoveKind::REIDEMEISTER, false)
            .into_iter()
            .filter(|s| s.crossing_delta() < 0)
            .count()
    };
    assert_eq!(reducing(&d), 0);
    // the other crossing choices are not minimal
    let quads: Vec<usize> = (0..d.vertex_count()).filter(|&v| d.graph().kind(v) == Kind::Quad).collect();
    for &v in &quads {
        let f = d.with_flipped(v);
        assert!(!enumerate_move_sites(&f, &[MoveKind::R2], false).is_empty(), "{}", f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_walks_stay_well_formed(start in 0usize..10_000, picks in proptest::collection::vec(0usize..1000, 1..8)) {
        let p = pool(3);
        let mut d = p[start % p.len()].clone();
        let n = d.component_count();
        for k in picks {
            let sites = enumerate_move_sites(&d, &MoveKind::ALL, d.crossing_count() < 6);
            if sites.is_empty() {
                break;
            }
            d = apply_move(&d, &sites[k % sites.len()]).unwrap();
            prop_assert!(d.graph().is_spherical());
            prop_assert_eq!(d.component_count(), n);
            let back: Diagram = d.to_code().parse().unwrap();
            prop_assert_eq!(back.oriented_code(), d.oriented_code());
        }
    }
}
