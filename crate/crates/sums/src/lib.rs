//! Connected sums of diagrams: order-2 vertex sums along edges (knot sums
//! of a spatial graph with links) and order-1 sums joining two components
//! by a bridge.

pub mod composites;
pub mod order1;

use diagram::{Diagram, DiagramError};
use planar_enum::{Kind, PlaneGraph};

pub use composites::{
    enumerate_candidates, enumerate_composites, Candidate, CompositeClass, CompositeOptions, CompositeReport, Profile,
    Rejection, Summand,
};
pub use order1::{enumerate_order1_census, LinkFixture, Order1Row, Order1Table};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SumError {
    #[error("invalid site: {0}")]
    InvalidSite(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Where a summand is attached. `Edge` names an edge by one of its darts
/// (the dart fixes a direction along the edge); `flip` reverses the gluing.
/// `Component` selects a spatial component by id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumSite {
    Edge { dart: usize, flip: bool },
    Component(usize),
}

/// One dart per edge, the lesser of the pair.
pub fn edge_sites(d: &Diagram) -> Vec<usize> {
    let g = d.graph();
    (0..g.dart_count()).filter(|&x| x < g.partner(x)).collect()
}

fn check_edge(d: &Diagram, s: SumSite) -> Result<(usize, bool), SumError> {
    match s {
        SumSite::Edge { dart, flip } if dart < d.graph().dart_count() => Ok((dart, flip)),
        SumSite::Edge { dart, .. } => Err(SumError::InvalidSite(format!("no dart {}", dart))),
        SumSite::Component(_) => Err(SumError::InvalidSite("component site in an order-2 sum".into())),
    }
}

fn disjoint_union(d1: &Diagram, d2: &Diagram) -> (Vec<Kind>, Vec<usize>, Vec<u8>) {
    let g1 = d1.graph();
    let g2 = d2.graph();
    let off = g1.dart_count();
    let mut kinds = g1.kinds().to_vec();
    kinds.extend_from_slice(g2.kinds());
    let mut partner = g1.partners().to_vec();
    partner.extend(g2.partners().iter().map(|&p| p + off));
    let mut over = d1.over().to_vec();
    over.extend_from_slice(d2.over());
    (kinds, partner, over)
}

/// Cuts the edge of `d1` at `s1` and the edge of `d2` at `s2` and joins the
/// loose ends crosswise. With both flags clear, the head of `s1`'s dart
/// meets the tail of `s2`'s dart. A free circle of `d2` (dart-free) can be
/// selected by summing `d1` with a crossing-free circle, which changes
/// nothing but the free-circle count.
pub fn order2_sum(d1: &Diagram, s1: SumSite, d2: &Diagram, s2: SumSite) -> Result<Diagram, SumError> {
    let (a, f1) = check_edge(d1, s1)?;
    let (b, f2) = check_edge(d2, s2)?;
    let off = d1.graph().dart_count();
    let (kinds, mut partner, over) = disjoint_union(d1, d2);
    let a2 = partner[a];
    let (b, b2) = (b + off, partner[b + off]);
    let (x, y) = if f1 ^ f2 { (b, b2) } else { (b2, b) };
    partner[a] = x;
    partner[x] = a;
    partner[a2] = y;
    partner[y] = a2;
    let graph = PlaneGraph::try_new(kinds, partner).map_err(SumError::InvalidSite)?;
    Ok(Diagram::new(graph, over, d1.free_loops() + d2.free_loops())?)
}

/// The split diagram with `d1` and `d2` side by side.
pub fn split_union(d1: &Diagram, d2: &Diagram) -> Result<Diagram, SumError> {
    let (kinds, partner, over) = disjoint_union(d1, d2);
    let graph = PlaneGraph::try_new(kinds, partner).map_err(SumError::InvalidSite)?;
    Ok(Diagram::new(graph, over, d1.free_loops() + d2.free_loops())?)
}

/// Sum with a summand that is a single crossing-free circle.
pub fn order2_sum_with_unknot(d1: &Diagram, s1: SumSite) -> Result<Diagram, SumError> {
    check_edge(d1, s1)?;
    Ok(d1.clone())
}

/// A dart on component `comp`, or `None` for a free circle.
pub(crate) fn dart_on_component(d: &Diagram, comp: usize) -> Result<Option<usize>, SumError> {
    let comps = d.components();
    let c = comps.get(comp).ok_or_else(|| SumError::InvalidSite(format!("no component {}", comp)))?;
    if c.free {
        return Ok(None);
    }
    let strands = d.strands();
    Ok(c.strands.iter().map(|&s| strands[s].steps[0].out).min())
}

/// Joins component `s1` of `d1` to component `s2` of `d2` by a new edge
/// whose ends are new trivalent vertices on the two components.
pub fn order1_sum(d1: &Diagram, s1: SumSite, d2: &Diagram, s2: SumSite) -> Result<Diagram, SumError> {
    let comp = |s: SumSite| match s {
        SumSite::Component(c) => Ok(c),
        _ => Err(SumError::InvalidSite("edge site in an order-1 sum".into())),
    };
    let (c1, c2) = (comp(s1)?, comp(s2)?);
    let (e1, e2) = (dart_on_component(d1, c1)?, dart_on_component(d2, c2)?);
    let off = d1.graph().dart_count();
    let (mut kinds, mut partner, mut over) = disjoint_union(d1, d2);
    let mut attach = |e: Option<usize>| -> usize {
        let u = partner.len();
        kinds.push(Kind::Tri);
        over.push(0);
        partner.extend([0, 0, 0]);
        match e {
            Some(e) => {
                let e2 = partner[e];
                partner[u] = e;
                partner[e] = u;
                partner[u + 1] = e2;
                partner[e2] = u + 1;
            }
            None => {
                partner[u] = u + 1;
                partner[u + 1] = u;
            }
        }
        u + 2
    };
    let p = attach(e1);
    let q = attach(e2.map(|e| e + off));
    partner[p] = q;
    partner[q] = p;
    let free = d1.free_loops() + d2.free_loops() - e1.is_none() as usize - e2.is_none() as usize;
    let graph = PlaneGraph::try_new(kinds, partner).map_err(SumError::InvalidSite)?;
    Ok(Diagram::new(graph, over, free)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> Diagram {
        Diagram::from_code_str("X(1,4,2,3) X(3,2,4,1)").unwrap()
    }

    #[test]
    fn order2_sum_of_two_hopf_links_is_a_chain() {
        let h = hopf();
        for flip in [false, true] {
            let d = order2_sum(&h, SumSite::Edge { dart: 0, flip }, &h, SumSite::Edge { dart: 0, flip: false }).unwrap();
            assert_eq!(d.crossing_count(), 4);
            assert_eq!(d.component_count(), 3);
            assert_eq!(d.connectivity(), 2);
        }
    }

    #[test]
    fn order1_sum_of_unknot_and_hopf() {
        let d = order1_sum(&Diagram::unknot(), SumSite::Component(0), &hopf(), SumSite::Component(0)).unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.vertex_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.free_loops(), 0);
        assert_eq!(d.connectivity(), 1);
    }

    #[test]
    fn split_union_of_hopf_links() {
        let d = split_union(&hopf(), &hopf()).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 4);
        assert_eq!(d.connectivity(), 0);
        let e = split_union(&Diagram::theta(), &Diagram::unknot()).unwrap();
        assert_eq!(e.code_mod_mirror(), "V(1,2,3) V(3,2,1) O".parse::<Diagram>().unwrap().code_mod_mirror());
    }

    #[test]
    fn bad_sites_are_rejected() {
        let h = hopf();
        assert!(order2_sum(&h, SumSite::Component(0), &h, SumSite::Edge { dart: 0, flip: false }).is_err());
        assert!(order2_sum(&h, SumSite::Edge { dart: 99, flip: false }, &h, SumSite::Edge { dart: 0, flip: false }).is_err());
        assert!(order1_sum(&h, SumSite::Component(5), &h, SumSite::Component(0)).is_err());
    }
}
