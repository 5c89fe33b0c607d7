//! Diagrams of spatial graphs: a plane graph whose quadrivalent vertices are
//! crossings with over/under data, together with Reidemeister, vertex and
//! IH moves and a bounded reduction search.

mod code;
pub mod moves;
pub mod search;

use planar_enum::canon::canonical_code_with;
use planar_enum::{connectivity_at_most_one, edge_connectivity, strand_component_count, Kind, PlaneGraph};

pub use moves::{apply_move, enumerate_move_sites, Direction, MoveError, MoveKind, MoveStep};
pub use search::{reduce_search, reduce_search_detailed, Budget, MoveSet, SearchOutcome, Verdict};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a sphere embedding")]
    NotPlanar,
    #[error("component {0} not found")]
    NoComponent(usize),
}

/// A diagram. `over[v]` is the parity of the slots forming the overstrand
/// at crossing `v` (slots `over[v]` and `over[v] + 2`); it is 0 at
/// trivalent vertices. Crossing-free circles carry no vertices and are only
/// counted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    graph: PlaneGraph,
    over: Vec<u8>,
    free_loops: usize,
}

/// One oriented edge traversal: leave through `out`, arrive at `into`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub out: usize,
    pub into: usize,
}

/// A maximal run going straight through crossings: either a closed circle or
/// a path between two trivalent darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub steps: Vec<Step>,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub strands: Vec<usize>,
    pub vertices: Vec<usize>,
    /// True for a crossing-free circle that has no darts at all.
    pub free: bool,
}

impl Component {
    pub fn is_circle(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Diagram {
    pub fn new(graph: PlaneGraph, over: Vec<u8>, free_loops: usize) -> Result<Self, DiagramError> {
        if over.len() != graph.vertex_count() {
            return Err(DiagramError::Parse("over data length mismatch".into()));
        }
        if !graph.is_spherical() {
            return Err(DiagramError::NotPlanar);
        }
        let over = over
            .iter()
            .enumerate()
            .map(|(v, &o)| if graph.kind(v) == Kind::Quad { o & 1 } else { 0 })
            .collect();
        Ok(Diagram { graph, over, free_loops })
    }

    pub(crate) fn from_parts(graph: PlaneGraph, over: Vec<u8>, free_loops: usize) -> Self {
        Diagram { graph, over, free_loops }
    }

    /// A crossing-free diagram on `g` (which must have no quadrivalent
    /// vertices for this to be a genuine diagram of `g`).
    pub fn unknotted(g: PlaneGraph) -> Self {
        let n = g.vertex_count();
        Diagram { graph: g, over: vec![0; n], free_loops: 0 }
    }

    pub fn unknot() -> Self {
        Diagram { graph: PlaneGraph::new(vec![], vec![]), over: vec![], free_loops: 1 }
    }

    pub fn theta() -> Self {
        Diagram::unknotted(PlaneGraph::theta())
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn over(&self) -> &[u8] {
        &self.over
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.graph.quad_count()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.tri_count()
    }

    /// Whether slot `s` of crossing `v` is on the overstrand.
    pub fn is_over(&self, v: usize, s: usize) -> bool {
        (s % 2) as u8 == self.over[v]
    }

    /// Opposite dart at a crossing.
    pub fn through(&self, d: usize) -> usize {
        let v = self.graph.vertex_of(d);
        self.graph.dart(v, self.graph.slot_of(d) + 2)
    }

    pub fn is_crossing_dart(&self, d: usize) -> bool {
        self.graph.kind(self.graph.vertex_of(d)) == Kind::Quad
    }

    /// All crossings flipped. The skeleton is kept: flipping every crossing
    /// and also reflecting the sphere would be a rotation in space.
    pub fn mirror(&self) -> Diagram {
        let over = (0..self.graph.vertex_count())
            .map(|v| if self.graph.kind(v) == Kind::Quad { 1 - self.over[v] } else { 0 })
            .collect();
        Diagram { graph: self.graph.clone(), over, free_loops: self.free_loops }
    }

    /// The same link seen from the other side of the sphere with crossings
    /// flipped; isotopic to `self`.
    pub fn turned_over(&self) -> Diagram {
        self.reflected().mirror()
    }

    /// Reflection of the sphere keeping over/under: a mirror image.
    pub fn reflected(&self) -> Diagram {
        // reversing a rotation maps slot s to -s, which keeps its parity
        Diagram { graph: self.graph.reflect(), over: self.over.clone(), free_loops: self.free_loops }
    }

    pub fn with_flipped(&self, v: usize) -> Diagram {
        let mut d = self.clone();
        if d.graph.kind(v) == Kind::Quad {
            d.over[v] ^= 1;
        }
        d
    }

    pub fn component_count(&self) -> usize {
        strand_component_count(&self.graph) + self.free_loops
    }

    /// Edge connectivity of the underlying plane graph; free circles make the
    /// diagram split.
    pub fn connectivity(&self) -> usize {
        if self.free_loops > 0 && self.graph.vertex_count() > 0 {
            return 0;
        }
        edge_connectivity(&self.graph)
    }

    /// Split or reducible at the diagram level.
    pub fn connectivity_at_most_one(&self) -> bool {
        (self.free_loops > 0 && self.graph.vertex_count() > 0) || connectivity_at_most_one(&self.graph)
    }

    /// Strands, paths first (ordered by least starting trivalent dart) then
    /// circles (ordered by least dart). Paths are oriented away from their
    /// lesser endpoint, circles away from their least dart.
    pub fn strands(&self) -> Vec<Strand> {
        let g = &self.graph;
        let n = g.dart_count();
        let mut used = vec![false; n];
        let mut out = Vec::new();
        for t in 0..n {
            if used[t] || self.is_crossing_dart(t) {
                continue;
            }
            let mut steps = Vec::new();
            let mut d = t;
            loop {
                let e = g.partner(d);
                used[d] = true;
                used[e] = true;
                steps.push(Step { out: d, into: e });
                if !self.is_crossing_dart(e) {
                    break;
                }
                d = self.through(e);
            }
            out.push(Strand { steps, closed: false });
        }
        for s in 0..n {
            if used[s] {
                continue;
            }
            let mut steps = Vec::new();
            let mut d = s;
            loop {
                let e = g.partner(d);
                used[d] = true;
                used[e] = true;
                steps.push(Step { out: d, into: e });
                d = self.through(e);
                if d == s {
                    break;
                }
            }
            out.push(Strand { steps, closed: true });
        }
        out
    }

    /// +1 where the dart leaves along the strand orientation, -1 where it
    /// arrives.
    pub fn dart_directions(&self) -> Vec<i8> {
        let mut dir = vec![0i8; self.graph.dart_count()];
        for s in self.strands() {
            for st in s.steps {
                dir[st.out] = 1;
                dir[st.into] = -1;
            }
        }
        dir
    }

    /// Spatial components. Strands sharing a trivalent vertex belong together.
    /// Free circles come last.
    pub fn components(&self) -> Vec<Component> {
        let g = &self.graph;
        let strands = self.strands();
        let mut strand_of = vec![usize::MAX; g.dart_count()];
        for (i, s) in strands.iter().enumerate() {
            for st in &s.steps {
                strand_of[st.out] = i;
                strand_of[st.into] = i;
            }
        }
        let mut parent: Vec<usize> = (0..strands.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for v in 0..g.vertex_count() {
            if g.kind(v) == Kind::Tri {
                let a = find(&mut parent, strand_of[g.dart(v, 0)]);
                for s in 1..3 {
                    let b = find(&mut parent, strand_of[g.dart(v, s)]);
                    if a != b {
                        parent[b] = a;
                    }
                }
            }
        }
        let mut roots: Vec<usize> = Vec::new();
        let mut comps: Vec<Component> = Vec::new();
        for i in 0..strands.len() {
            let r = find(&mut parent, i);
            let idx = match roots.iter().position(|&x| x == r) {
                Some(k) => k,
                None => {
                    roots.push(r);
                    comps.push(Component { strands: vec![], vertices: vec![], free: false });
                    roots.len() - 1
                }
            };
            comps[idx].strands.push(i);
        }
        for v in 0..g.vertex_count() {
            if g.kind(v) == Kind::Tri {
                let r = find(&mut parent, strand_of[g.dart(v, 0)]);
                let idx = roots.iter().position(|&x| x == r).unwrap();
                comps[idx].vertices.push(v);
            }
        }
        // order by least dart so that ids are stable under the strand order
        comps.sort_by_key(|c| {
            c.strands.iter().flat_map(|&s| strands[s].steps.iter().map(|st| st.out.min(st.into))).min()
        });
        for _ in 0..self.free_loops {
            comps.push(Component { strands: vec![], vertices: vec![], free: true });
        }
        comps
    }

    /// Component id of every dart.
    pub fn component_of_darts(&self) -> Vec<usize> {
        let strands = self.strands();
        let mut out = vec![usize::MAX; self.graph.dart_count()];
        for (ci, c) in self.components().iter().enumerate() {
            for &s in &c.strands {
                for st in &strands[s].steps {
                    out[st.out] = ci;
                    out[st.into] = ci;
                }
            }
        }
        out
    }

    /// Code invariant under relabeling and under turning the sphere over
    /// (reflection combined with flipping every crossing). Distinguishes a
    /// diagram from its mirror image.
    pub fn oriented_code(&self) -> Vec<u8> {
        let over = &self.over;
        let g = &self.graph;
        let decor = |v: usize, entry: usize, refl: bool| -> u8 {
            match g.kind(v) {
                Kind::Tri => 0,
                Kind::Quad => 1 + ((over[v] as usize + entry + refl as usize) % 2) as u8,
            }
        };
        let mut code = canonical_code_with(g, true, &decor);
        code.push(self.free_loops as u8);
        code
    }

    /// Code identifying the diagram up to mirror image as well.
    pub fn code_mod_mirror(&self) -> Vec<u8> {
        let a = self.oriented_code();
        let b = self.mirror().oriented_code();
        a.min(b)
    }

    /// Rebuilds a diagram from [`Diagram::oriented_code`] output.
    pub fn from_code(code: &[u8]) -> Option<Diagram> {
        let (&free, body) = code.split_last()?;
        let parts: Vec<&[u8]> = if body.is_empty() {
            vec![]
        } else if body[0] == 0xff {
            let count = *body.get(1)? as usize;
            let mut pos = 2;
            let mut v = Vec::with_capacity(count);
            for _ in 0..count {
                let len = u16::from_le_bytes([*body.get(pos)?, *body.get(pos + 1)?]) as usize;
                pos += 2;
                v.push(body.get(pos..pos + len)?);
                pos += len;
            }
            v
        } else {
            vec![body]
        };
        let mut kinds = Vec::new();
        let mut partner = Vec::new();
        let mut over = Vec::new();
        for p in parts {
            let (g, decor) = planar_enum::canon::decode(p)?;
            let base = partner.len();
            for v in 0..g.vertex_count() {
                kinds.push(g.kind(v));
                over.push(if g.kind(v) == Kind::Quad { decor[v].checked_sub(1)? } else { 0 });
            }
            partner.extend(g.partners().iter().map(|&x| x + base));
        }
        let graph = PlaneGraph::try_new(kinds, partner).ok()?;
        Some(Diagram { graph, over, free_loops: free as usize })
    }

    /// Erases component `comp`: its trivalent vertices and self-crossings
    /// vanish and the other strands pass straight through the crossings it
    /// had with them. Circles left without vertices become free circles.
    pub fn delete_component(&self, comp: usize) -> Result<Diagram, DiagramError> {
        self.delete_components(&[comp])
    }

    /// Erases every component in `comps` at once.
    pub fn delete_components(&self, comps: &[usize]) -> Result<Diagram, DiagramError> {
        let all = self.components();
        let mut free_dead = 0;
        for (i, &c) in comps.iter().enumerate() {
            if comps[..i].contains(&c) {
                continue;
            }
            match all.get(c) {
                None => return Err(DiagramError::NoComponent(c)),
                Some(t) if t.free => free_dead += 1,
                Some(_) => {}
            }
        }
        let g = &self.graph;
        let owner = self.component_of_darts();
        let dead = |d: usize| comps.contains(&owner[d]);
        let keep: Vec<bool> = (0..g.vertex_count()).map(|v| g.darts_of(v).all(|d| !dead(d))).collect();
        let mut new_id = vec![usize::MAX; g.vertex_count()];
        let mut kinds = Vec::new();
        let mut over = Vec::new();
        let mut base = Vec::new();
        let mut next = 0;
        for v in 0..g.vertex_count() {
            if keep[v] {
                new_id[v] = kinds.len();
                kinds.push(g.kind(v));
                over.push(self.over[v]);
                base.push(next);
                next += g.kind(v).degree();
            }
        }
        let map = |d: usize| {
            let v = g.vertex_of(d);
            base[new_id[v]] + g.slot_of(d)
        };
        let mut partner = vec![usize::MAX; next];
        for v in (0..g.vertex_count()).filter(|&v| keep[v]) {
            for d in g.darts_of(v) {
                let mut e = g.partner(d);
                while !keep[g.vertex_of(e)] {
                    e = g.partner(self.through(e));
                }
                partner[map(d)] = map(e);
            }
        }
        // surviving strands that met no kept vertex
        let mut free = self.free_loops - free_dead;
        for s in self.strands() {
            let d0 = s.steps[0].out;
            if !dead(d0) && s.steps.iter().all(|st| !keep[g.vertex_of(st.out)] && !keep[g.vertex_of(st.into)]) {
                free += 1;
            }
        }
        let graph = PlaneGraph::try_new(kinds, partner).map_err(DiagramError::Parse)?;
        Diagram::new(graph, over, free)
    }
}

/// All resolutions of the crossings of `g` up to the global flip: the first
/// crossing is fixed, giving 2^(c-1) diagrams (one diagram when c = 0).
pub fn assign_crossings(g: &PlaneGraph) -> Vec<Diagram> {
    let quads: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.kind(v) == Kind::Quad).collect();
    if quads.is_empty() {
        return vec![Diagram::unknotted(g.clone())];
    }
    let free = quads.len() - 1;
    (0..(1usize << free))
        .map(|mask| {
            let mut over = vec![0u8; g.vertex_count()];
            for (i, &v) in quads.iter().enumerate().skip(1) {
                over[v] = ((mask >> (i - 1)) & 1) as u8;
            }
            Diagram::from_parts(g.clone(), over, 0)
        })
        .collect()
}

pub fn component_count(d: &Diagram) -> usize {
    d.component_count()
}

pub fn diagram_connectivity(d: &Diagram) -> usize {
    d.connectivity()
}

pub fn mirror(d: &Diagram) -> Diagram {
    d.mirror()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deleting_a_hopf_component_leaves_an_unknot() {
        let hopf = Diagram::from_code_str("X(1,4,2,3) X(3,2,4,1)").unwrap();
        assert_eq!(hopf.component_count(), 2);
        for c in 0..2 {
            let d = hopf.delete_component(c).unwrap();
            assert_eq!(d.crossing_count(), 0);
            assert_eq!(d.vertex_count(), 0);
            assert_eq!(d.free_loops(), 1);
        }
    }

    #[test]
    fn deleting_a_ring_keeps_the_graph_crossings_between_survivors() {
        let d = Diagram::from_code_str(
            "V(1,2,3) V(1,4,5) X(8,2,6,7) X(11,3,9,10) X(10,12,4,11) X(7,6,5,13) X(15,9,8,14) X(14,13,12,15)",
        )
        .unwrap();
        let comps = d.components();
        assert_eq!(comps.len(), 3);
        for (i, c) in comps.iter().enumerate() {
            if !c.is_circle() {
                continue;
            }
            let e = d.delete_component(i).unwrap();
            assert_eq!(e.component_count(), 2);
            assert!(e.crossing_count() < d.crossing_count());
            assert_eq!(e.vertex_count(), 2);
        }
        assert!(d.delete_component(7).is_err());
    }

    #[test]
    fn free_circles_are_deleted_by_count() {
        let d = Diagram::from_code_str("V(1,2,3) V(3,2,1) O O").unwrap();
        let e = d.delete_component(1).unwrap();
        assert_eq!(e.free_loops(), 1);
    }
}
