use std::collections::BTreeMap;

use diagram::Diagram;
use planar_enum::{Kind, PlaneGraph};

use crate::{order1_sum, SumError, SumSite};

/// A pool link for the order-1 census. `orbits` groups component ids into
/// classes that an ambient isotopy of the link can exchange; `None` means
/// the annotation is missing.
#[derive(Clone, Debug)]
pub struct LinkFixture {
    pub name: String,
    pub crossings: usize,
    pub components: usize,
    pub diagram: Option<Diagram>,
    pub orbits: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order1Row {
    pub crossings: usize,
    pub left: String,
    pub right: String,
    /// Number of inequivalent sums; `None` when an annotation is missing.
    pub count: Option<usize>,
    /// One diagram per counted sum, when both pool diagrams are known.
    pub diagrams: Vec<Diagram>,
}

#[derive(Clone, Debug, Default)]
pub struct Order1Table {
    pub rows: Vec<Order1Row>,
}

impl Order1Table {
    /// Per-crossing totals over annotated rows.
    pub fn totals(&self) -> BTreeMap<usize, usize> {
        let mut t = BTreeMap::new();
        for r in &self.rows {
            *t.entry(r.crossings).or_insert(0) += r.count.unwrap_or(0);
        }
        t
    }

    pub fn unverified(&self) -> impl Iterator<Item = &Order1Row> {
        self.rows.iter().filter(|r| r.count.is_none())
    }

    pub fn row(&self, left: &str, right: &str) -> Option<&Order1Row> {
        self.rows.iter().find(|r| (r.left == left && r.right == right) || (r.left == right && r.right == left))
    }
}

/// Pairs of pool links (taken without order) whose crossing numbers add up
/// to at most `max_crossings` and whose sum has at least two components.
/// Inequivalent sums of a pair correspond to pairs of selected component
/// orbits.
pub fn enumerate_order1_census(max_crossings: usize, pool: &[LinkFixture]) -> Result<Order1Table, SumError> {
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by_key(|&i| (pool[i].crossings, i));
    let mut rows = Vec::new();
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a..] {
            let (l, r) = (&pool[i], &pool[j]);
            if l.crossings + r.crossings > max_crossings || l.components + r.components < 3 {
                continue;
            }
            let count = match (&l.orbits, &r.orbits) {
                (Some(x), Some(_)) if i == j => Some(x.len() * (x.len() + 1) / 2),
                (Some(x), Some(y)) => Some(x.len() * y.len()),
                _ => None,
            };
            let mut diagrams = Vec::new();
            if let (Some(dl), Some(dr), Some(ol), Some(or)) = (&l.diagram, &r.diagram, &l.orbits, &r.orbits) {
                for (p, x) in ol.iter().enumerate() {
                    for (q, y) in or.iter().enumerate() {
                        if i == j && q < p {
                            continue;
                        }
                        diagrams.push(order1_sum(dl, SumSite::Component(x[0]), dr, SumSite::Component(y[0]))?);
                    }
                }
            }
            rows.push(Order1Row {
                crossings: l.crossings + r.crossings,
                left: l.name.clone(),
                right: r.name.clone(),
                count,
                diagrams,
            });
        }
    }
    rows.sort_by_key(|r| r.crossings);
    Ok(Order1Table { rows })
}

/// Closure of a braid on `strands` strands. Letter `k > 0` is the generator
/// crossing positions `k - 1` and `k` with the strand coming from the left
/// passing over; `-k` is its inverse. Strands untouched by the word become
/// free circles.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram, SumError> {
    let c = word.len();
    let mut partner = vec![usize::MAX; 4 * c];
    let mut over = vec![0u8; c];
    // darts at a crossing, counterclockwise: in-left, in-right, out-right, out-left
    let mut first_in: Vec<Option<usize>> = vec![None; strands];
    let mut open: Vec<Option<usize>> = vec![None; strands];
    let link = |p: &mut Vec<usize>, a: usize, b: usize| {
        p[a] = b;
        p[b] = a;
    };
    for (v, &k) in word.iter().enumerate() {
        let i = k.unsigned_abs() as usize;
        if i == 0 || i >= strands {
            return Err(SumError::InvalidSite(format!("generator {} on {} strands", k, strands)));
        }
        let base = 4 * v;
        for (pos, dart) in [(i - 1, base), (i, base + 1)] {
            match open[pos] {
                Some(d) => link(&mut partner, d, dart),
                None => first_in[pos] = Some(dart),
            }
        }
        open[i - 1] = Some(base + 3);
        open[i] = Some(base + 2);
        // the left-in strand runs in-left -> out-right (slots 0 and 2)
        over[v] = if k > 0 { 0 } else { 1 };
    }
    let mut free = 0;
    for pos in 0..strands {
        match (open[pos], first_in[pos]) {
            (Some(a), Some(b)) => link(&mut partner, a, b),
            _ => free += 1,
        }
    }
    let graph = PlaneGraph::try_new(vec![Kind::Quad; c], partner).map_err(SumError::InvalidSite)?;
    Ok(Diagram::new(graph, over, free)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_closures_have_the_expected_components() {
        assert_eq!(braid_closure(2, &[1, 1]).unwrap().component_count(), 2);
        assert_eq!(braid_closure(2, &[1, 1, 1]).unwrap().component_count(), 1);
        assert_eq!(braid_closure(3, &[1, -2, 1, -2, 1, -2]).unwrap().component_count(), 3);
        assert_eq!(braid_closure(3, &[1, 1]).unwrap().free_loops(), 1);
        assert!(braid_closure(2, &[2]).is_err());
    }

    #[test]
    fn mirrored_braid_is_the_mirror_diagram() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let m = braid_closure(2, &[-1, -1, -1]).unwrap();
        assert_eq!(d.mirror().oriented_code(), m.oriented_code());
    }

    fn fixture(name: &str, c: usize, n: usize, d: Option<Diagram>, orbits: Option<Vec<Vec<usize>>>) -> LinkFixture {
        LinkFixture { name: name.into(), crossings: c, components: n, diagram: d, orbits }
    }

    #[test]
    fn small_census() {
        let pool = vec![
            fixture("unknot", 0, 1, Some(Diagram::unknot()), Some(vec![vec![0]])),
            fixture("Hopf", 2, 2, Some(braid_closure(2, &[1, 1]).unwrap()), Some(vec![vec![0, 1]])),
            fixture("mystery", 4, 2, None, None),
        ];
        let t = enumerate_order1_census(4, &pool).unwrap();
        assert_eq!(t.row("unknot", "Hopf").unwrap().count, Some(1));
        assert_eq!(t.row("Hopf", "Hopf").unwrap().count, Some(1));
        assert_eq!(t.unverified().count(), 1);
        assert_eq!(t.totals()[&2], 1);
        for r in &t.rows {
            for d in &r.diagrams {
                assert_eq!(d.crossing_count(), r.crossings);
                assert_eq!(d.connectivity(), 1);
            }
        }
    }
}
