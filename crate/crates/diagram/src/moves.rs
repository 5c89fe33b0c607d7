use std::fmt;

use planar_enum::{Kind, PlaneGraph, NONE};

use crate::Diagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    R4,
    R5,
    IH,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::R4, MoveKind::R5, MoveKind::IH];
    pub const REIDEMEISTER: [MoveKind; 5] = [MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::R4, MoveKind::R5];
}

/// `Apply` removes crossings (R1, R2, R4, R5) or is crossing-neutral (R3,
/// IH, which are their own inverses); `Inverse` adds crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Apply,
    Inverse,
}

/// A move at a site. `site` holds darts of the pattern (see
/// [`enumerate_move_sites`]); `flag` picks the crossing type or variant for
/// crossing-increasing moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveStep {
    pub kind: MoveKind,
    pub direction: Direction,
    pub site: [usize; 2],
    pub flag: u8,
}

impl MoveStep {
    pub fn crossing_delta(&self) -> i32 {
        let sign = if self.direction == Direction::Apply { -1 } else { 1 };
        match self.kind {
            MoveKind::R1 | MoveKind::R4 | MoveKind::R5 => sign,
            MoveKind::R2 => 2 * sign,
            MoveKind::R3 | MoveKind::IH => 0,
        }
    }
}

impl fmt::Display for MoveStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.direction == Direction::Apply { "" } else { "^-1" };
        write!(f, "{:?}{}@{},{}/{}", self.kind, dir, self.site[0], self.site[1], self.flag)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("{kind:?} pattern mismatch: {reason}")]
    Pattern { kind: MoveKind, reason: &'static str },
}

#[derive(Clone, Copy, Debug)]
enum End {
    Old(usize),
    New(usize, usize),
}

/// Local surgery: delete vertices, add vertices, let new darts take over
/// the partners of surviving darts, and wire ends together. Ports (darts of
/// deleted vertices that appear in links) are followed through their old
/// partners, so degenerate patterns resolve automatically; closed chains of
/// ports become free circles.
#[derive(Default)]
struct Rewrite {
    delete: Vec<usize>,
    add: Vec<(Kind, u8)>,
    inherit: Vec<(End, usize)>,
    links: Vec<(End, End)>,
}

impl Rewrite {
    fn link(&mut self, a: End, b: End) {
        self.links.push((a, b));
    }
}

fn run(d: &Diagram, rw: &Rewrite) -> Diagram {
    let g = d.graph();
    let n_old = g.dart_count();
    let nv = g.vertex_count();
    let mut deleted = vec![false; nv];
    for &v in &rw.delete {
        deleted[v] = true;
    }
    let mut new_off = Vec::with_capacity(rw.add.len());
    let mut total = n_old;
    for (k, _) in &rw.add {
        new_off.push(total);
        total += k.degree();
    }
    let id = |e: End| match e {
        End::Old(x) => x,
        End::New(i, s) => new_off[i] + s % rw.add[i].0.degree(),
    };
    let owner: Vec<usize> = (0..nv).flat_map(|v| g.darts_of(v).map(move |_| v)).collect();
    let in_s = |x: usize| x < n_old && deleted[owner[x]];
    let mut partner = g.partners().to_vec();
    partner.resize(total, NONE);
    for &(z, x) in &rw.inherit {
        let z = id(z);
        let y = partner[x];
        partner[z] = y;
        partner[y] = z;
        partner[x] = NONE;
    }
    let mut link = vec![NONE; total];
    for &(a, b) in &rw.links {
        let (a, b) = (id(a), id(b));
        link[a] = b;
        link[b] = a;
    }
    let mut fin = vec![NONE; total];
    let mut visited = vec![false; total];
    for x in 0..total {
        if in_s(x) {
            continue;
        }
        let (mut y, mut via_link) = if link[x] != NONE { (link[x], true) } else { (partner[x], false) };
        assert!(y != NONE, "dangling dart {}", x);
        while in_s(y) {
            visited[y] = true;
            let nxt = if via_link { partner[y] } else { link[y] };
            assert!(nxt != NONE, "walked into an internal dart");
            y = nxt;
            via_link = !via_link;
        }
        fin[x] = y;
    }
    let mut loops = 0;
    for p in 0..n_old {
        if in_s(p) && link[p] != NONE && !visited[p] {
            loops += 1;
            let mut cur = p;
            loop {
                visited[cur] = true;
                let a = link[cur];
                visited[a] = true;
                cur = partner[a];
                if cur == p {
                    break;
                }
            }
        }
    }
    let mut new_index = vec![NONE; total];
    let mut kinds = Vec::new();
    let mut over = Vec::new();
    let mut next = 0;
    for v in 0..nv {
        if deleted[v] {
            continue;
        }
        kinds.push(g.kind(v));
        over.push(d.over()[v]);
        for x in g.darts_of(v) {
            new_index[x] = next;
            next += 1;
        }
    }
    for (i, &(k, o)) in rw.add.iter().enumerate() {
        kinds.push(k);
        over.push(if k == Kind::Quad { o & 1 } else { 0 });
        for s in 0..k.degree() {
            new_index[new_off[i] + s] = next;
            next += 1;
        }
    }
    let mut part = vec![NONE; next];
    for x in 0..total {
        if new_index[x] != NONE {
            debug_assert_eq!(fin[fin[x]], x, "rewrite produced a non-involution");
            part[new_index[x]] = new_index[fin[x]];
        }
    }
    let graph = PlaneGraph::new(kinds, part);
    debug_assert!(graph.is_spherical(), "rewrite left the sphere");
    Diagram::from_parts(graph, over, d.free_loops() + loops)
}

fn mismatch(kind: MoveKind, reason: &'static str) -> MoveError {
    MoveError::Pattern { kind, reason }
}

fn build(d: &Diagram, step: &MoveStep) -> Result<Rewrite, MoveError> {
    use End::{New, Old};
    use MoveKind::*;
    let g = d.graph();
    let nd = g.dart_count();
    let kind = step.kind;
    let [a, b] = step.site;
    if a >= nd {
        return Err(mismatch(kind, "site dart out of range"));
    }
    let at = |v: usize, s: usize| g.dart(v, s);
    let quad = |v: usize| g.kind(v) == Kind::Quad;
    let vert = |x: usize| g.vertex_of(x);
    let slot = |x: usize| g.slot_of(x);
    let mut rw = Rewrite::default();
    match (kind, step.direction) {
        (R1, Direction::Apply) => {
            let (v, i) = (vert(a), slot(a));
            if !quad(v) || g.partner(a) != at(v, i + 1) {
                return Err(mismatch(kind, "no monogon at this crossing slot"));
            }
            rw.delete.push(v);
            rw.link(Old(at(v, i + 2)), Old(at(v, i + 3)));
        }
        (R1, Direction::Inverse) => {
            let y = g.partner(a);
            rw.add.push((Kind::Quad, step.flag));
            rw.link(New(0, 0), Old(a));
            if b == 0 {
                rw.link(New(0, 1), New(0, 2));
                rw.link(New(0, 3), Old(y));
            } else {
                rw.link(New(0, 2), New(0, 3));
                rw.link(New(0, 1), Old(y));
            }
        }
        (R2, Direction::Apply) => {
            let (u, i) = (vert(a), slot(a));
            let p = g.partner(a);
            let (v, j) = (vert(p), slot(p));
            if !quad(u) || !quad(v) || u == v {
                return Err(mismatch(kind, "bigon must join two distinct crossings"));
            }
            let e = at(v, j + 1);
            if g.partner(e) != at(u, i + 3) {
                return Err(mismatch(kind, "no bigon face"));
            }
            if d.is_over(u, i) != d.is_over(v, j) {
                return Err(mismatch(kind, "bigon is not coherent"));
            }
            rw.delete.extend([u, v]);
            rw.link(Old(at(u, i + 2)), Old(at(v, j + 2)));
            rw.link(Old(at(u, i + 1)), Old(at(v, j + 3)));
        }
        (R2, Direction::Inverse) => {
            if b >= nd || a == b || g.partner(a) == b {
                return Err(mismatch(kind, "need two distinct edges"));
            }
            let mut x = g.face_next(a);
            while x != a && x != b {
                x = g.face_next(x);
            }
            if x != b {
                return Err(mismatch(kind, "edges do not share a face"));
            }
            let (a1, b1, a2, b2) = (g.partner(a), a, g.partner(b), b);
            rw.add.push((Kind::Quad, step.flag));
            rw.add.push((Kind::Quad, step.flag));
            rw.link(New(0, 0), Old(a1));
            rw.link(New(1, 0), Old(b1));
            rw.link(New(1, 1), Old(a2));
            rw.link(New(0, 3), Old(b2));
            rw.link(New(0, 2), New(1, 2));
            rw.link(New(0, 1), New(1, 3));
        }
        (R3, Direction::Apply) => {
            let (u, i) = (vert(a), slot(a));
            let p = g.partner(a);
            let (v, j) = (vert(p), slot(p));
            let t1 = at(v, j + 1);
            let q = g.partner(t1);
            let (w, k) = (vert(q), slot(q));
            let t2 = at(w, k + 1);
            if !quad(u) || !quad(v) || !quad(w) || u == v || v == w || u == w {
                return Err(mismatch(kind, "triangle needs three distinct crossings"));
            }
            if g.partner(t2) != at(u, i + 3) {
                return Err(mismatch(kind, "no triangle face"));
            }
            let a_over_b = d.is_over(v, j);
            let b_over_c = d.is_over(w, k);
            let c_over_a = d.is_over(u, i + 1);
            if a_over_b == b_over_c && b_over_c == c_over_a {
                return Err(mismatch(kind, "cyclic triangle"));
            }
            // new crossings: 0 = strands a,b; 1 = b,c; 2 = c,a
            rw.delete.extend([u, v, w]);
            rw.add.push((Kind::Quad, if a_over_b { 1 } else { 0 }));
            rw.add.push((Kind::Quad, if b_over_c { 0 } else { 1 }));
            rw.add.push((Kind::Quad, if c_over_a { 0 } else { 1 }));
            rw.link(New(0, 1), Old(at(u, i + 2)));
            rw.link(New(0, 2), Old(at(w, k + 2)));
            rw.link(New(0, 3), New(2, 1));
            rw.link(New(0, 0), New(1, 2));
            rw.link(New(1, 0), Old(at(v, j + 3)));
            rw.link(New(1, 1), Old(at(u, i + 1)));
            rw.link(New(1, 3), New(2, 0));
            rw.link(New(2, 2), Old(at(w, k + 3)));
            rw.link(New(2, 3), Old(at(v, j + 2)));
        }
        (R4, Direction::Apply) => {
            let (vv, k) = (vert(a), slot(a));
            let p = g.partner(a);
            let (x, ia) = (vert(p), slot(p));
            let t1 = at(x, ia + 1);
            let q = g.partner(t1);
            let (y, ib) = (vert(q), slot(q));
            let t2 = at(y, ib + 1);
            if quad(vv) || !quad(x) || !quad(y) || x == y {
                return Err(mismatch(kind, "needs a vertex and two distinct crossings"));
            }
            if g.partner(t2) != at(vv, k + 2) {
                return Err(mismatch(kind, "no triangle face at the vertex"));
            }
            let s_over = d.is_over(x, ia + 1);
            if s_over != d.is_over(y, ib) {
                return Err(mismatch(kind, "strand not uniformly over or under"));
            }
            rw.delete.extend([x, y]);
            rw.add.push((Kind::Quad, if s_over { 0 } else { 1 }));
            rw.inherit.push((New(0, 3), at(vv, k + 1)));
            rw.link(New(0, 0), Old(at(y, ib + 2)));
            rw.link(New(0, 1), Old(at(vv, k + 1)));
            rw.link(New(0, 2), Old(at(x, ia + 3)));
            rw.link(Old(at(vv, k)), Old(at(x, ia + 2)));
            rw.link(Old(at(vv, k + 2)), Old(at(y, ib + 3)));
        }
        (R4, Direction::Inverse) => {
            let (z, c) = (vert(a), slot(a));
            let p = g.partner(a);
            let (vv, m) = (vert(p), slot(p));
            if !quad(z) || quad(vv) {
                return Err(mismatch(kind, "needs a crossing next to a vertex"));
            }
            let s_over = d.is_over(z, c + 1);
            rw.delete.push(z);
            rw.add.push((Kind::Quad, if s_over { 1 } else { 0 }));
            rw.add.push((Kind::Quad, if s_over { 0 } else { 1 }));
            rw.inherit.push((New(0, 2), at(vv, m + 2)));
            rw.inherit.push((New(1, 3), at(vv, m + 1)));
            rw.link(New(0, 0), Old(at(vv, m + 2)));
            rw.link(New(1, 1), Old(at(vv, m + 1)));
            rw.link(New(0, 1), New(1, 0));
            rw.link(New(0, 3), Old(at(z, c + 1)));
            rw.link(New(1, 2), Old(at(z, c + 3)));
            rw.link(Old(p), Old(at(z, c + 2)));
        }
        (R5, Direction::Apply) => {
            let (x, s) = (vert(a), slot(a));
            let p = g.partner(a);
            let vv = vert(p);
            if !quad(x) || quad(vv) || g.partner(at(x, s + 3)) != g.succ(p) {
                return Err(mismatch(kind, "no twisted pair at a vertex"));
            }
            rw.delete.push(x);
            rw.link(Old(p), Old(at(x, s + 1)));
            rw.link(Old(g.succ(p)), Old(at(x, s + 2)));
        }
        (R5, Direction::Inverse) => {
            let vv = vert(a);
            if quad(vv) {
                return Err(mismatch(kind, "needs a vertex"));
            }
            let (vi, vj) = (a, g.succ(a));
            rw.add.push((Kind::Quad, step.flag));
            rw.inherit.push((New(0, 2), vi));
            rw.inherit.push((New(0, 3), vj));
            rw.link(New(0, 0), Old(vj));
            rw.link(New(0, 1), Old(vi));
        }
        (IH, _) => {
            let (vv, j) = (vert(a), slot(a));
            let p = g.partner(a);
            let (w, l) = (vert(p), slot(p));
            if quad(vv) || quad(w) || vv == w {
                return Err(mismatch(kind, "needs an edge between two distinct vertices"));
            }
            rw.delete.extend([vv, w]);
            rw.add.push((Kind::Tri, 0));
            rw.add.push((Kind::Tri, 0));
            rw.link(New(0, 0), New(1, 0));
            rw.link(New(0, 1), Old(at(w, l + 2)));
            rw.link(New(0, 2), Old(at(vv, j + 1)));
            rw.link(New(1, 1), Old(at(vv, j + 2)));
            rw.link(New(1, 2), Old(at(w, l + 1)));
        }
        (R3, Direction::Inverse) => {
            return Err(mismatch(kind, "R3 is its own inverse; use Apply"));
        }
    }
    Ok(rw)
}

pub fn apply_move(d: &Diagram, step: &MoveStep) -> Result<Diagram, MoveError> {
    let rw = build(d, step)?;
    Ok(run(d, &rw))
}

/// Every applicable step of the requested kinds. Crossing-increasing steps
/// are included only when `allow_increase` is set. Sites are listed once per
/// face or edge; flags enumerate crossing types and kink sides.
pub fn enumerate_move_sites(d: &Diagram, kinds: &[MoveKind], allow_increase: bool) -> Vec<MoveStep> {
    use MoveKind::*;
    let g = d.graph();
    let mut out = Vec::new();
    let want = |k: MoveKind| kinds.contains(&k);
    let push = |out: &mut Vec<MoveStep>, kind, direction, site: [usize; 2], flag| {
        let st = MoveStep { kind, direction, site, flag };
        if build(d, &st).is_ok() {
            out.push(st);
        }
    };
    let faces = if want(R2) || want(R3) || want(R4) { g.faces() } else { vec![] };
    for x in 0..g.dart_count() {
        let quad = g.kind(g.vertex_of(x)) == Kind::Quad;
        if want(R1) && quad {
            push(&mut out, R1, Direction::Apply, [x, 0], 0);
        }
        if want(R1) && allow_increase && x < g.partner(x) {
            for variant in 0..2 {
                for o in 0..2 {
                    push(&mut out, R1, Direction::Inverse, [x, variant], o);
                }
            }
        }
        if want(R4) && allow_increase && quad {
            push(&mut out, R4, Direction::Inverse, [x, 0], 0);
        }
        if want(R5) && quad {
            push(&mut out, R5, Direction::Apply, [x, 0], 0);
        }
        if want(R5) && allow_increase && !quad {
            for o in 0..2 {
                push(&mut out, R5, Direction::Inverse, [x, 0], o);
            }
        }
        if want(IH) && !quad && x < g.partner(x) {
            push(&mut out, IH, Direction::Apply, [x, 0], 0);
        }
    }
    for f in &faces {
        match f.len() {
            2 if want(R2) => push(&mut out, R2, Direction::Apply, [f[0], 0], 0),
            3 => {
                if want(R3) {
                    push(&mut out, R3, Direction::Apply, [f[0], 0], 0);
                }
                if want(R4) {
                    for &t in f {
                        if g.kind(g.vertex_of(t)) == Kind::Tri {
                            push(&mut out, R4, Direction::Apply, [t, 0], 0);
                        }
                    }
                }
            }
            _ => {}
        }
        if want(R2) && allow_increase {
            for i in 0..f.len() {
                for j in (i + 1)..f.len() {
                    for o in 0..2 {
                        push(&mut out, R2, Direction::Inverse, [f[i], f[j]], o);
                    }
                }
            }
        }
    }
    out
}
