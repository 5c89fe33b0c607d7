use serde::{Deserialize, Serialize};

pub const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "t")]
    Tri,
    #[serde(rename = "q")]
    Quad,
}

impl Kind {
    pub fn degree(self) -> usize {
        match self {
            Kind::Tri => 3,
            Kind::Quad => 4,
        }
    }
}

/// A rotation system. Vertex `v` owns darts `offsets[v]..offsets[v + 1]`,
/// listed counterclockwise, so the rotation successor of a dart is the next
/// dart of the same vertex (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    kinds: Vec<Kind>,
    offsets: Vec<usize>,
    partner: Vec<usize>,
}

impl PlaneGraph {
    /// Builds a graph from vertex kinds and a dart involution. Panics if the
    /// involution is malformed; use [`PlaneGraph::try_new`] for user input.
    pub fn new(kinds: Vec<Kind>, partner: Vec<usize>) -> Self {
        Self::try_new(kinds, partner).expect("malformed plane graph")
    }

    pub fn try_new(kinds: Vec<Kind>, partner: Vec<usize>) -> Result<Self, String> {
        let mut offsets = Vec::with_capacity(kinds.len() + 1);
        let mut total = 0;
        offsets.push(0);
        for k in &kinds {
            total += k.degree();
            offsets.push(total);
        }
        if partner.len() != total {
            return Err(format!("expected {} darts, got {}", total, partner.len()));
        }
        for (d, &p) in partner.iter().enumerate() {
            if p >= total || p == d || partner[p] != d {
                return Err(format!("dart {} has invalid partner {}", d, p));
            }
        }
        Ok(PlaneGraph { kinds, offsets, partner })
    }

    /// The theta graph: two trivalent vertices joined by three edges.
    pub fn theta() -> Self {
        PlaneGraph::new(vec![Kind::Tri, Kind::Tri], vec![5, 4, 3, 2, 1, 0])
    }

    pub fn kinds(&self) -> &[Kind] {
        &self.kinds
    }

    pub fn kind(&self, v: usize) -> Kind {
        self.kinds[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn dart_count(&self) -> usize {
        self.partner.len()
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn tri_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k == Kind::Tri).count()
    }

    pub fn quad_count(&self) -> usize {
        self.kinds.iter().filter(|k| **k == Kind::Quad).count()
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn partner(&self, d: usize) -> usize {
        self.partner[d]
    }

    pub fn dart(&self, v: usize, slot: usize) -> usize {
        let deg = self.kinds[v].degree();
        self.offsets[v] + slot % deg
    }

    pub fn darts_of(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn vertex_of(&self, d: usize) -> usize {
        match self.offsets.binary_search(&d) {
            Ok(v) => v,
            Err(v) => v - 1,
        }
    }

    pub fn slot_of(&self, d: usize) -> usize {
        d - self.offsets[self.vertex_of(d)]
    }

    /// Next dart counterclockwise around the same vertex.
    pub fn succ(&self, d: usize) -> usize {
        let v = self.vertex_of(d);
        let s = d - self.offsets[v];
        self.offsets[v] + (s + 1) % self.kinds[v].degree()
    }

    pub fn pred(&self, d: usize) -> usize {
        let v = self.vertex_of(d);
        let deg = self.kinds[v].degree();
        let s = d - self.offsets[v];
        self.offsets[v] + (s + deg - 1) % deg
    }

    /// Face permutation: travel along the edge, then turn to the next dart.
    pub fn face_next(&self, d: usize) -> usize {
        self.succ(self.partner[d])
    }

    /// Faces as cycles of the face permutation, each starting at its least dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                face.push(d);
                d = self.face_next(d);
            }
            out.push(face);
        }
        out
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Connected components as lists of vertices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![NONE; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != NONE {
                continue;
            }
            let id = out.len();
            let mut stack = vec![s];
            let mut members = Vec::new();
            comp[s] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for d in self.darts_of(v) {
                    let w = self.vertex_of(self.partner[d]);
                    if comp[w] == NONE {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.components().len() == 1
    }

    /// V - E + F summed over the whole map. Equals 2 per component exactly
    /// when every component is embedded in the sphere.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn is_spherical(&self) -> bool {
        self.euler_characteristic() == 2 * self.components().len() as i64
    }

    /// Reverses every rotation; the result is the mirror-image embedding.
    pub fn reflect(&self) -> PlaneGraph {
        let map = |d: usize| {
            let v = self.vertex_of(d);
            let deg = self.kinds[v].degree();
            let s = d - self.offsets[v];
            self.offsets[v] + (deg - s) % deg
        };
        let mut partner = vec![0; self.dart_count()];
        for d in 0..self.dart_count() {
            partner[map(d)] = map(self.partner[d]);
        }
        PlaneGraph { kinds: self.kinds.clone(), offsets: self.offsets.clone(), partner }
    }

    /// Relabels vertices by `perm` (old -> new) and rotates each rotation by
    /// `shift[v]`. Produces an isomorphic plane graph.
    pub fn relabel(&self, perm: &[usize], shift: &[usize]) -> PlaneGraph {
        let n = self.vertex_count();
        let mut kinds = vec![Kind::Tri; n];
        for v in 0..n {
            kinds[perm[v]] = self.kinds[v];
        }
        let mut offsets = vec![0; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + kinds[v].degree();
        }
        let map = |d: usize| {
            let v = self.vertex_of(d);
            let deg = self.kinds[v].degree();
            let s = d - self.offsets[v];
            offsets[perm[v]] + (s + shift[v]) % deg
        };
        let mut partner = vec![0; self.dart_count()];
        for d in 0..self.dart_count() {
            partner[map(d)] = map(self.partner[d]);
        }
        PlaneGraph { kinds, offsets, partner }
    }

    /// Number of edges joining `u` and `v` (`u != v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.darts_of(u).filter(|&d| self.vertex_of(self.partner[d]) == v).count()
    }

    pub fn has_loop(&self) -> bool {
        (0..self.dart_count()).any(|d| self.vertex_of(d) == self.vertex_of(self.partner[d]))
    }
}
