use std::collections::BTreeSet;

use planar_enum::{enumerate_plane_graphs, is_admissible, Kind, PlaneGraph};
use proptest::prelude::*;

/// All pairings of darts for the fixed vertex multiset, kept when the
/// resulting map is an admissible sphere graph.
fn brute_force_codes(q: usize) -> BTreeSet<Vec<u8>> {
    let mut kinds = vec![Kind::Tri, Kind::Tri];
    kinds.extend(std::iter::repeat_n(Kind::Quad, q));
    let mut owner = Vec::new();
    for (v, k) in kinds.iter().enumerate() {
        owner.extend(std::iter::repeat_n(v, k.degree()));
    }
    let n = owner.len();
    let mut partner = vec![usize::MAX; n];
    let mut out = BTreeSet::new();
    fn go(
        kinds: &[Kind],
        owner: &[usize],
        partner: &mut Vec<usize>,
        out: &mut BTreeSet<Vec<u8>>,
    ) {
        let Some(d) = partner.iter().position(|&p| p == usize::MAX) else {
            let g = PlaneGraph::new(kinds.to_vec(), partner.clone());
            if g.is_spherical() && is_admissible(&g) {
                out.insert(g.canonical_code());
            }
            return;
        };
        for e in (d + 1)..partner.len() {
            if partner[e] != usize::MAX || owner[e] == owner[d] {
                continue;
            }
            partner[d] = e;
            partner[e] = d;
            go(kinds, owner, partner, out);
            partner[d] = usize::MAX;
            partner[e] = usize::MAX;
        }
    }
    go(&kinds, &owner, &mut partner, &mut out);
    out
}

fn generated_codes(q: usize) -> BTreeSet<Vec<u8>> {
    enumerate_plane_graphs(q).unwrap().iter().map(|g| g.canonical_code()).collect()
}

#[test]
fn brute_force_agrees_up_to_two() {
    for q in 1..=2 {
        assert_eq!(brute_force_codes(q), generated_codes(q), "q = {}", q);
    }
}

#[test]
fn brute_force_agrees_at_three() {
    assert_eq!(brute_force_codes(3), generated_codes(3));
}

/// Isomorphism by trying every kind-preserving vertex bijection, every
/// rotation offset, and both orientations.
fn isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    if a.kinds().iter().filter(|k| **k == Kind::Tri).count() != b.tri_count()
        || a.vertex_count() != b.vertex_count()
    {
        return false;
    }
    let n = a.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let candidates = [a.clone(), a.reflect()];
    loop {
        if (0..n).all(|v| a.kind(v) == b.kind(perm[v])) {
            let mut shift = vec![0; n];
            loop {
                for c in &candidates {
                    if &c.relabel(&perm, &shift) == b {
                        return true;
                    }
                }
                let mut i = 0;
                while i < n {
                    shift[i] += 1;
                    if shift[i] < a.kind(i).degree() {
                        break;
                    }
                    shift[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn codes_separate_exactly_the_isomorphism_classes() {
    let mut pool = vec![PlaneGraph::theta()];
    for q in 2..=3 {
        pool.extend(enumerate_plane_graphs(q).unwrap());
    }
    // add relabeled copies so that equal codes are also exercised
    let extra: Vec<PlaneGraph> = pool
        .iter()
        .map(|g| {
            let n = g.vertex_count();
            let perm: Vec<usize> = (0..n).rev().collect();
            let shift: Vec<usize> = (0..n).map(|v| v % 3).collect();
            g.relabel(&perm, &shift).reflect()
        })
        .collect();
    pool.extend(extra);
    for a in &pool {
        for b in &pool {
            assert_eq!(a.canonical_code() == b.canonical_code(), isomorphic(a, b));
        }
    }
}

#[test]
fn every_generated_graph_satisfies_euler() {
    for q in 0..=6 {
        for g in enumerate_plane_graphs(q).unwrap() {
            assert_eq!(g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64, 2);
            assert_eq!(g.dart_count(), 3 * 2 + 4 * q);
        }
    }
}

#[test]
fn generation_closed_under_reflection() {
    for q in 0..=6 {
        let codes = generated_codes(q);
        for g in enumerate_plane_graphs(q).unwrap() {
            assert!(codes.contains(&g.reflect().canonical_code()));
        }
    }
}

#[test]
fn without_mirror_dedup_counts_grow_consistently() {
    use planar_enum::{enumerate_plane_graphs_with, EnumOptions};
    for q in 0..=5 {
        let with = enumerate_plane_graphs(q).unwrap();
        let without = enumerate_plane_graphs_with(q, EnumOptions { mirror_dedup: false }).unwrap();
        let chiral = with.iter().filter(|g| g.oriented_code() != g.reflect().oriented_code()).count();
        assert_eq!(without.len(), with.len() + chiral, "q = {}", q);
    }
}

fn graphs_up_to_five() -> Vec<PlaneGraph> {
    (0..=5).flat_map(|q| enumerate_plane_graphs(q).unwrap()).collect()
}

proptest! {
    #[test]
    fn code_invariant_under_relabeling(idx in 0usize..60, seed in any::<u64>(), refl in any::<bool>()) {
        let pool = graphs_up_to_five();
        let g = &pool[idx % pool.len()];
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shift: Vec<usize> = (0..n).map(|v| ((seed >> (v % 60)) as usize) % g.kind(v).degree()).collect();
        let mut h = g.relabel(&perm, &shift);
        if refl {
            h = h.reflect();
        }
        prop_assert_eq!(h.canonical_code(), g.canonical_code());
        if !refl {
            prop_assert_eq!(h.oriented_code(), g.oriented_code());
        }
    }
}
