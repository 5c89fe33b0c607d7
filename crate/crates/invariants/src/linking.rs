use std::collections::BTreeMap;

use diagram::Diagram;
use planar_enum::Kind;
use serde::{Deserialize, Serialize};
use wirtinger::crossing_signs;

use crate::InvariantError;

/// A cycle as signed strand multiplicities.
pub type Cycle = BTreeMap<usize, i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    pub entries: Vec<Vec<i64>>,
    /// Nonzero elementary divisors, each dividing the next.
    pub divisors: Vec<i64>,
}

impl LinkingMatrix {
    pub fn is_zero(&self) -> bool {
        self.divisors.is_empty()
    }
}

/// Cycle basis of a component: its circle, or the fundamental cycles of a
/// spanning tree on its trivalent vertices.
pub fn cycle_basis(d: &Diagram, comp: usize) -> Result<Vec<Cycle>, InvariantError> {
    let comps = d.components();
    let c = comps.get(comp).ok_or(InvariantError::NoComponent(comp))?;
    if c.free {
        return Ok(vec![]);
    }
    if c.is_circle() {
        return Ok(vec![Cycle::from([(c.strands[0], 1)])]);
    }
    let g = d.graph();
    let strands = d.strands();
    let verts = &c.vertices;
    let idx = |v: usize| verts.iter().position(|&u| u == v).unwrap();
    // edges: (strand, tail index, head index)
    let edges: Vec<(usize, usize, usize)> = c
        .strands
        .iter()
        .map(|&s| {
            let st = &strands[s];
            (s, idx(g.vertex_of(st.steps[0].out)), idx(g.vertex_of(st.steps.last().unwrap().into)))
        })
        .collect();
    // BFS tree; parent edge of each vertex as (edge, sign toward the vertex)
    let mut parent: Vec<Option<(usize, i64)>> = vec![None; verts.len()];
    let mut seen = vec![false; verts.len()];
    let mut tree = vec![false; edges.len()];
    seen[0] = true;
    let mut queue = vec![0];
    while let Some(u) = queue.pop() {
        for (k, &(_, a, b)) in edges.iter().enumerate() {
            let (w, sign) = if a == u && !seen[b] {
                (b, 1)
            } else if b == u && !seen[a] {
                (a, -1)
            } else {
                continue;
            };
            seen[w] = true;
            parent[w] = Some((k, sign));
            tree[k] = true;
            queue.push(w);
        }
    }
    // path from the root to v as a signed edge sum
    let path = |mut v: usize| {
        let mut out = Cycle::new();
        while let Some((k, sign)) = parent[v] {
            *out.entry(edges[k].0).or_default() += sign;
            let (_, a, b) = edges[k];
            v = if sign == 1 { a } else { b };
        }
        out
    };
    let mut basis = Vec::new();
    for (k, &(s, a, b)) in edges.iter().enumerate() {
        if tree[k] {
            continue;
        }
        // root→a, edge a→b, then b→root
        let mut cyc = path(a);
        *cyc.entry(s).or_default() += 1;
        for (e, m) in path(b) {
            *cyc.entry(e).or_default() -= m;
        }
        cyc.retain(|_, m| *m != 0);
        basis.push(cyc);
    }
    Ok(basis)
}

/// Gauss linking numbers between cycle bases of two components, with the
/// elementary divisors of the resulting matrix.
pub fn linking_matrix(d: &Diagram, a: usize, b: usize) -> Result<LinkingMatrix, InvariantError> {
    if a == b {
        return Err(InvariantError::SameComponent(a));
    }
    let ca = cycle_basis(d, a)?;
    let cb = cycle_basis(d, b)?;
    let g = d.graph();
    let signs = crossing_signs(d);
    let strands = d.strands();
    let mut strand_of = vec![usize::MAX; g.dart_count()];
    for (i, s) in strands.iter().enumerate() {
        for st in &s.steps {
            strand_of[st.out] = i;
            strand_of[st.into] = i;
        }
    }
    let lk = |x: &Cycle, y: &Cycle| -> i64 {
        let mut sum = 0;
        for v in 0..g.vertex_count() {
            if g.kind(v) != Kind::Quad {
                continue;
            }
            let (s, t) = (strand_of[g.dart(v, 0)], strand_of[g.dart(v, 1)]);
            let e = signs[v] as i64;
            sum += e * (x.get(&s).unwrap_or(&0) * y.get(&t).unwrap_or(&0) + x.get(&t).unwrap_or(&0) * y.get(&s).unwrap_or(&0));
        }
        assert_eq!(sum % 2, 0, "Gauss sum of disjoint cycles is even");
        sum / 2
    };
    let entries: Vec<Vec<i64>> = ca.iter().map(|x| cb.iter().map(|y| lk(x, y)).collect()).collect();
    let divisors = elementary_divisors(&entries);
    Ok(LinkingMatrix { entries, divisors })
}

/// Nonzero invariant factors of an integer matrix (Smith normal form).
pub fn elementary_divisors(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero entry in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut done = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            for j in t..cols {
                a[i][j] -= q * a[t][j];
            }
            done &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            for i in t..rows {
                a[i][j] -= q * a[i][t];
            }
            done &= a[t][j] == 0;
        }
        if !done {
            continue;
        }
        // the pivot must divide the rest of the block
        let p = a[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        out.push(p.abs());
        t += 1;
    }
    out
}
