use planar_enum::{enumerate_plane_graphs, strand_component_count};

fn split(q: usize) -> (usize, [usize; 4]) {
    let gs = enumerate_plane_graphs(q).unwrap();
    let mut by_n = [0; 4];
    for g in &gs {
        by_n[strand_component_count(g)] += 1;
    }
    (gs.len(), by_n)
}

#[test]
fn table_counts() {
    let expected = [
        (0, 1, [0, 1, 0, 0]),
        (1, 0, [0, 0, 0, 0]),
        (2, 1, [0, 1, 0, 0]),
        (3, 3, [0, 2, 1, 0]),
        (4, 10, [0, 8, 2, 0]),
        (5, 37, [0, 29, 8, 0]),
        (6, 181, [0, 144, 34, 3]),
    ];
    for (q, total, by_n) in expected {
        let got = split(q);
        assert_eq!(got, (total, by_n), "q = {}", q);
    }
}
