use crate::graph::{Kind, PlaneGraph, NONE};

/// Byte string identifying a plane graph up to relabeling (and, when
/// requested, reflection). Comparable and hashable.
pub type CanonicalCode = Vec<u8>;

/// Emits the breadth-first code of the component containing `root`.
/// `decor(v, entry_slot, reflected)` contributes one byte per vertex so that
/// callers can attach extra structure such as crossing information.
pub fn rooted_code<F>(g: &PlaneGraph, root: usize, reflect: bool, decor: &F, out: &mut Vec<u8>)
where
    F: Fn(usize, usize, bool) -> u8,
{
    let n = g.vertex_count();
    assert!(n < 255, "graph too large for byte codes");
    let mut label = vec![NONE; n];
    let mut entry = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let r = g.vertex_of(root);
    label[r] = 0;
    entry[r] = g.slot_of(root);
    order.push(r);
    let step = |v: usize, e: usize, k: usize| -> usize {
        let deg = g.kind(v).degree();
        if reflect {
            (e + deg * 4 - k) % deg
        } else {
            (e + k) % deg
        }
    };
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for k in 0..g.kind(v).degree() {
            let p = g.partner(g.dart(v, step(v, entry[v], k)));
            let w = g.vertex_of(p);
            if label[w] == NONE {
                label[w] = order.len();
                entry[w] = g.slot_of(p);
                order.push(w);
            }
        }
        i += 1;
    }
    out.push(order.len() as u8);
    for &v in &order {
        let deg = g.kind(v).degree();
        out.push(deg as u8);
        out.push(decor(v, entry[v], reflect));
        for k in 0..deg {
            let p = g.partner(g.dart(v, step(v, entry[v], k)));
            let w = g.vertex_of(p);
            let dw = g.kind(w).degree();
            let s = g.slot_of(p);
            let rel = if reflect { (entry[w] + dw - s) % dw } else { (s + dw - entry[w]) % dw };
            out.push(label[w] as u8);
            out.push(rel as u8);
        }
    }
}

/// Minimum rooted code over the component `members`, rooting only at
/// trivalent darts when the component has any.
pub fn component_code<F>(g: &PlaneGraph, members: &[usize], reflections: bool, decor: &F) -> Vec<u8>
where
    F: Fn(usize, usize, bool) -> u8,
{
    let has_tri = members.iter().any(|&v| g.kind(v) == Kind::Tri);
    let mut best: Option<Vec<u8>> = None;
    let mut buf = Vec::new();
    for &v in members {
        if has_tri && g.kind(v) != Kind::Tri {
            continue;
        }
        for root in g.darts_of(v) {
            for &refl in if reflections { &[false, true][..] } else { &[false][..] } {
                buf.clear();
                rooted_code(g, root, refl, decor, &mut buf);
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical code of a whole (possibly disconnected) map: sorted component
/// codes, each prefixed by its length.
pub fn canonical_code_with<F>(g: &PlaneGraph, reflections: bool, decor: &F) -> CanonicalCode
where
    F: Fn(usize, usize, bool) -> u8,
{
    let comps = g.components();
    if comps.len() == 1 {
        return component_code(g, &comps[0], reflections, decor);
    }
    let mut codes: Vec<Vec<u8>> =
        comps.iter().map(|c| component_code(g, c, reflections, decor)).collect();
    codes.sort();
    let mut out = vec![0xff, codes.len() as u8];
    for c in codes {
        out.extend_from_slice(&(c.len() as u16).to_le_bytes());
        out.extend(c);
    }
    out
}

impl PlaneGraph {
    /// Code invariant under relabeling and reflection.
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code_with(self, true, &|_, _, _| 0)
    }

    /// Code invariant under relabeling only.
    pub fn oriented_code(&self) -> CanonicalCode {
        canonical_code_with(self, false, &|_, _, _| 0)
    }

    /// Rebuilds a connected graph from a rooted code (no decorations kept).
    pub fn from_rooted_code(code: &[u8]) -> Option<PlaneGraph> {
        decode(code).map(|(g, _)| g)
    }
}

/// Inverse of [`rooted_code`] for unreflected codes: returns the graph with
/// vertices in code order (entry dart at slot 0) and the decoration bytes.
pub fn decode(code: &[u8]) -> Option<(PlaneGraph, Vec<u8>)> {
    let n = *code.first()? as usize;
    let mut pos = 1;
    let mut kinds = Vec::with_capacity(n);
    let mut decor = Vec::with_capacity(n);
    let mut adj: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n);
    for _ in 0..n {
        let deg = *code.get(pos)? as usize;
        let kind = match deg {
            3 => Kind::Tri,
            4 => Kind::Quad,
            _ => return None,
        };
        kinds.push(kind);
        decor.push(*code.get(pos + 1)?);
        pos += 2;
        let mut row = Vec::with_capacity(deg);
        for _ in 0..deg {
            row.push((*code.get(pos)? as usize, *code.get(pos + 1)? as usize));
            pos += 2;
        }
        adj.push(row);
    }
    let mut offsets = vec![0; n + 1];
    for v in 0..n {
        offsets[v + 1] = offsets[v] + kinds[v].degree();
    }
    let mut partner = vec![0; offsets[n]];
    for v in 0..n {
        for (k, &(w, s)) in adj[v].iter().enumerate() {
            if w >= n {
                return None;
            }
            partner[offsets[v] + k] = offsets[w] + s;
        }
    }
    PlaneGraph::try_new(kinds, partner).ok().map(|g| (g, decor))
}
