use std::collections::BTreeMap;

use crate::canon::{canonical_code_with, decode, CanonicalCode};
use crate::connectivity::edge_connectivity;
use crate::graph::{Kind, PlaneGraph, NONE};

pub const MAX_QUAD: usize = 6;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("quadrivalent count {0} outside 0..={max}", max = MAX_QUAD)]
    OutOfRange(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleArcVerdict {
    BigonQuadri,
    Forbidden,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleArc {
    pub u: usize,
    pub v: usize,
    /// One dart at `u` for each of the two parallel edges.
    pub darts: (usize, usize),
    pub verdict: DoubleArcVerdict,
}

fn bounds_bigon(g: &PlaneGraph, a1: usize, a2: usize) -> bool {
    let (b1, b2) = (g.partner(a1), g.partner(a2));
    (g.succ(b1) == b2 && g.succ(a2) == a1) || (g.succ(b2) == b1 && g.succ(a1) == a2)
}

/// Every pair of parallel edges, labeled by whether it is an admissible
/// bigon between two quadrivalent vertices.
pub fn classify_double_arcs(g: &PlaneGraph) -> Vec<DoubleArc> {
    let mut out = Vec::new();
    for u in 0..g.vertex_count() {
        for v in (u + 1)..g.vertex_count() {
            let ds: Vec<usize> =
                g.darts_of(u).filter(|&d| g.vertex_of(g.partner(d)) == v).collect();
            for i in 0..ds.len() {
                for j in (i + 1)..ds.len() {
                    let ok = g.kind(u) == Kind::Quad
                        && g.kind(v) == Kind::Quad
                        && ds.len() == 2
                        && bounds_bigon(g, ds[i], ds[j]);
                    out.push(DoubleArc {
                        u,
                        v,
                        darts: (ds[i], ds[j]),
                        verdict: if ok { DoubleArcVerdict::BigonQuadri } else { DoubleArcVerdict::Forbidden },
                    });
                }
            }
        }
    }
    out
}

/// Number of spatial components: strands go straight through quadrivalent
/// vertices and meet at trivalent ones.
pub fn strand_component_count(g: &PlaneGraph) -> usize {
    let n = g.dart_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let union = |p: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
        }
    };
    for d in 0..n {
        union(&mut parent, d, g.partner(d));
    }
    for v in 0..g.vertex_count() {
        match g.kind(v) {
            Kind::Quad => {
                union(&mut parent, g.dart(v, 0), g.dart(v, 2));
                union(&mut parent, g.dart(v, 1), g.dart(v, 3));
            }
            Kind::Tri => {
                union(&mut parent, g.dart(v, 0), g.dart(v, 1));
                union(&mut parent, g.dart(v, 0), g.dart(v, 2));
            }
        }
    }
    (0..n).filter(|&d| find(&mut parent, d) == d).count()
}

/// The census filter: 3-edge-connected, loopless, and every double arc a
/// bigon between quadrivalent vertices. The theta graph is accepted as the
/// crossing-free case.
pub fn is_admissible(g: &PlaneGraph) -> bool {
    if !g.is_spherical() || !g.is_connected() {
        return false;
    }
    if g.quad_count() == 0 {
        return g.tri_count() == 2 && g.vertex_count() == 2;
    }
    !g.has_loop()
        && classify_double_arcs(g).iter().all(|a| a.verdict == DoubleArcVerdict::BigonQuadri)
        && edge_connectivity(g) == 3
}

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub mirror_dedup: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { mirror_dedup: true }
    }
}

pub fn enumerate_plane_graphs(q: usize) -> Result<Vec<PlaneGraph>, EnumError> {
    enumerate_plane_graphs_with(q, EnumOptions::default())
}

/// All admissible plane graphs with two trivalent and `q` quadrivalent
/// vertices, one per canonical code, sorted by code.
pub fn enumerate_plane_graphs_with(q: usize, opts: EnumOptions) -> Result<Vec<PlaneGraph>, EnumError> {
    Ok(enumerate_codes(q, opts)?.into_iter().map(|(_, g)| g).collect())
}

pub fn enumerate_codes(q: usize, opts: EnumOptions) -> Result<Vec<(CanonicalCode, PlaneGraph)>, EnumError> {
    if q > MAX_QUAD {
        return Err(EnumError::OutOfRange(q));
    }
    let mut found = BTreeMap::new();
    if q == 0 {
        let t = PlaneGraph::theta();
        found.insert(code_of(&t, opts), ());
    } else {
        let mut b = Builder {
            q,
            opts,
            kinds: vec![Kind::Tri],
            offsets: vec![0, 3],
            partner: vec![NONE; 3],
            tri: 1,
            quad: 0,
        };
        b.search(0, &mut found);
    }
    Ok(found.into_keys().map(|code| {
            let g = normal_form(&code);
            (code, g)
        })
        .collect())
}

fn code_of(g: &PlaneGraph, opts: EnumOptions) -> CanonicalCode {
    canonical_code_with(g, opts.mirror_dedup, &|_, _, _| 0)
}

/// The representative rebuilt from a connected graph's code.
fn normal_form(code: &[u8]) -> PlaneGraph {
    decode(code).expect("codes produced here decode").0
}

struct Builder {
    q: usize,
    opts: EnumOptions,
    kinds: Vec<Kind>,
    offsets: Vec<usize>,
    partner: Vec<usize>,
    tri: usize,
    quad: usize,
}

impl Builder {
    fn vertex_of(&self, d: usize) -> usize {
        match self.offsets.binary_search(&d) {
            Ok(v) => v,
            Err(v) => v - 1,
        }
    }

    fn succ(&self, d: usize) -> usize {
        let v = self.vertex_of(d);
        let deg = self.kinds[v].degree();
        self.offsets[v] + (d - self.offsets[v] + 1) % deg
    }

    /// Whether `e` lies on the face through the dangling dart `d`, treating
    /// unpaired darts as leaves. Pairing across faces would raise the genus.
    fn same_face(&self, d: usize, e: usize) -> bool {
        let mut x = d;
        loop {
            x = if self.partner[x] == NONE { self.succ(x) } else { self.succ(self.partner[x]) };
            if x == e {
                return true;
            }
            if x == d {
                return false;
            }
        }
    }

    fn multiplicity_ok(&self, d: usize, e: usize) -> bool {
        let (u, v) = (self.vertex_of(d), self.vertex_of(e));
        let existing: Vec<usize> = (self.offsets[u]..self.offsets[u + 1])
            .filter(|&x| self.partner[x] != NONE && self.vertex_of(self.partner[x]) == v)
            .collect();
        match existing.len() {
            0 => true,
            1 => {
                if self.kinds[u] != Kind::Quad || self.kinds[v] != Kind::Quad {
                    return false;
                }
                let (a1, b1, a2, b2) = (existing[0], self.partner[existing[0]], d, e);
                (self.succ(b1) == b2 && self.succ(a2) == a1) || (self.succ(b2) == b1 && self.succ(a1) == a2)
            }
            _ => false,
        }
    }

    fn search(&mut self, from: usize, found: &mut BTreeMap<CanonicalCode, ()>) {
        let total = self.partner.len();
        let d = match (from..total).find(|&x| self.partner[x] == NONE) {
            Some(d) => d,
            None => {
                if self.tri == 2 && self.quad == self.q {
                    let g = PlaneGraph::new(self.kinds.clone(), self.partner.clone());
                    if is_admissible(&g) {
                        found.insert(code_of(&g, self.opts), ());
                    }
                }
                return;
            }
        };
        for kind in [Kind::Tri, Kind::Quad] {
            let room = match kind {
                Kind::Tri => self.tri < 2,
                Kind::Quad => self.quad < self.q,
            };
            if !room {
                continue;
            }
            let base = self.partner.len();
            self.kinds.push(kind);
            self.offsets.push(base + kind.degree());
            self.partner.extend(std::iter::repeat_n(NONE, kind.degree()));
            self.partner[d] = base;
            self.partner[base] = d;
            match kind {
                Kind::Tri => self.tri += 1,
                Kind::Quad => self.quad += 1,
            }
            self.search(d + 1, found);
            match kind {
                Kind::Tri => self.tri -= 1,
                Kind::Quad => self.quad -= 1,
            }
            self.partner.truncate(base);
            self.partner[d] = NONE;
            self.offsets.pop();
            self.kinds.pop();
        }
        let vd = self.vertex_of(d);
        for e in (d + 1)..total {
            if self.partner[e] != NONE || self.vertex_of(e) == vd {
                continue;
            }
            if !self.multiplicity_ok(d, e) || !self.same_face(d, e) {
                continue;
            }
            self.partner[d] = e;
            self.partner[e] = d;
            self.search(d + 1, found);
            self.partner[d] = NONE;
            self.partner[e] = NONE;
        }
    }
}
