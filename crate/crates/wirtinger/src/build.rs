use diagram::Diagram;
use planar_enum::Kind;

use crate::presentation::{Peripheral, Presentation};
use crate::word::{letter, power, Word};
use crate::WirtingerError;

/// Arc of every dart: maximal pieces of strands that do not pass under a
/// crossing. Free circles get the ids after `count - free_loops`.
#[derive(Clone, Debug)]
pub struct Arcs {
    pub arc_of_dart: Vec<usize>,
    pub count: usize,
}

pub fn arcs(d: &Diagram) -> Arcs {
    let g = d.graph();
    let n = g.dart_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for x in 0..n {
        union(x, g.partner(x));
    }
    for v in 0..g.vertex_count() {
        if g.kind(v) == Kind::Quad {
            let o = d.over()[v] as usize;
            union(g.dart(v, o), g.dart(v, o + 2));
        }
    }
    let mut id = vec![usize::MAX; n];
    let mut arc_of_dart = vec![0; n];
    let mut count = 0;
    for x in 0..n {
        let r = find(&mut parent, x);
        if id[r] == usize::MAX {
            id[r] = count;
            count += 1;
        }
        arc_of_dart[x] = id[r];
    }
    Arcs { arc_of_dart, count: count + d.free_loops() }
}

/// Under-outgoing slot of a crossing.
fn under_out_slot(d: &Diagram, dir: &[i8], v: usize) -> usize {
    let g = d.graph();
    let o = d.over()[v] as usize;
    if dir[g.dart(v, o + 1)] > 0 {
        o + 1
    } else {
        o + 3
    }
}

/// Right-handed crossing signs under the strand orientations of
/// [`Diagram::strands`]; 0 at trivalent vertices.
pub fn crossing_signs(d: &Diagram) -> Vec<i8> {
    let g = d.graph();
    let dir = d.dart_directions();
    (0..g.vertex_count())
        .map(|v| {
            if g.kind(v) == Kind::Tri {
                return 0;
            }
            let s = under_out_slot(d, &dir, v);
            -dir[g.dart(v, s + 1)]
        })
        .collect()
}

/// One generator per arc: a loop passing under the arc from its right to
/// its left. A small circle below the diagram around a crossing or vertex
/// bounds a disk, so the product of its passages is a relator: at every
/// vertex the product, counterclockwise, of each dart's arc raised to +1
/// (outgoing) or -1 (incoming). Crossing relators are rotated to start at
/// the outgoing understrand, giving `x_out · x_over^(-e) · x_in^-1 ·
/// x_over^e` for the crossing sign `e`.
pub fn presentation_from_diagram(d: &Diagram) -> Presentation {
    let g = d.graph();
    let dir = d.dart_directions();
    let a = arcs(d);
    let x = |dart: usize| a.arc_of_dart[dart];
    let mut relators = Vec::new();
    for v in 0..g.vertex_count() {
        match g.kind(v) {
            Kind::Quad => {
                let s = under_out_slot(d, &dir, v);
                let r: Word = (0..4)
                    .map(|k| {
                        let dart = g.dart(v, s + k);
                        letter(x(dart), dir[dart] as i32)
                    })
                    .collect();
                relators.push(r);
            }
            Kind::Tri => {
                relators.push(g.darts_of(v).map(|dart| letter(x(dart), dir[dart] as i32)).collect());
            }
        }
    }
    let mut p = Presentation { generators: a.count, relators, peripheral: vec![] };
    for (ci, c) in d.components().iter().enumerate() {
        if c.is_circle() {
            let (m, l) = peripheral_with(d, &a, &dir, ci).expect("circle component");
            p.peripheral.push(Peripheral { component: ci, meridian: m, longitude: l });
        }
    }
    p
}

/// Meridian and preferred longitude of circle component `comp`, in the
/// generators of [`presentation_from_diagram`].
pub fn peripheral_words(d: &Diagram, comp: usize) -> Result<(Word, Word), WirtingerError> {
    let a = arcs(d);
    let dir = d.dart_directions();
    peripheral_with(d, &a, &dir, comp)
}

fn peripheral_with(d: &Diagram, a: &Arcs, dir: &[i8], comp: usize) -> Result<(Word, Word), WirtingerError> {
    let comps = d.components();
    let c = comps.get(comp).ok_or(WirtingerError::NoComponent(comp))?;
    if !c.is_circle() {
        return Err(WirtingerError::NotCircle(comp));
    }
    if c.free {
        let k = comps[..comp].iter().filter(|c| c.free).count();
        let gen = a.count - d.free_loops() + k;
        return Ok((vec![letter(gen, 1)], vec![]));
    }
    let g = d.graph();
    let strands = d.strands();
    let strand = &strands[c.strands[0]];
    let signs = crossing_signs(d);
    let comp_of = d.component_of_darts();
    let m = a.arc_of_dart[strand.steps[0].out];
    let mut l = Vec::new();
    let mut writhe = 0i64;
    for st in &strand.steps {
        let e = st.into;
        let v = g.vertex_of(e);
        if d.is_over(v, g.slot_of(e)) {
            continue;
        }
        let s = under_out_slot(d, dir, v);
        let over_dart = g.dart(v, s + 1);
        l.push(letter(a.arc_of_dart[over_dart], signs[v] as i32));
        if comp_of[over_dart] == comp {
            writhe += signs[v] as i64;
        }
    }
    l.extend(power(m, -writhe));
    Ok((vec![letter(m, 1)], crate::word::free_reduce(&l)))
}
