use std::collections::HashMap;
use std::fmt;

use planar_enum::{Kind, PlaneGraph};

use crate::{Diagram, DiagramError};

impl Diagram {
    /// Text code: `X(a,b,c,d)` lists a crossing counterclockwise starting at
    /// the incoming understrand (so `b`,`d` is the overstrand), `V(a,b,c)` a
    /// trivalent vertex counterclockwise, `O` a crossing-free circle. Labels
    /// name edges and each occurs twice.
    pub fn to_code(&self) -> String {
        let g = &self.graph;
        let mut label = vec![0usize; g.dart_count()];
        let mut next = 1;
        for d in 0..g.dart_count() {
            if label[d] == 0 {
                label[d] = next;
                label[g.partner(d)] = next;
                next += 1;
            }
        }
        let dir = self.dart_directions();
        let mut parts = Vec::new();
        for v in 0..g.vertex_count() {
            match g.kind(v) {
                Kind::Tri => {
                    let l: Vec<String> = g.darts_of(v).map(|d| label[d].to_string()).collect();
                    parts.push(format!("V({})", l.join(",")));
                }
                Kind::Quad => {
                    let o = self.over[v] as usize;
                    let start = [o + 1, o + 3]
                        .into_iter()
                        .find(|&s| dir[g.dart(v, s)] < 0)
                        .unwrap_or(o + 1);
                    let l: Vec<String> = (0..4).map(|k| label[g.dart(v, start + k)].to_string()).collect();
                    parts.push(format!("X({})", l.join(",")));
                }
            }
        }
        for _ in 0..self.free_loops {
            parts.push("O".to_string());
        }
        parts.join(" ")
    }

    pub fn from_code_str(s: &str) -> Result<Diagram, DiagramError> {
        let err = |m: &str| DiagramError::Parse(format!("{}: {}", m, s));
        let mut kinds = Vec::new();
        let mut labels: Vec<usize> = Vec::new();
        let mut free = 0;
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ';');
            if rest.is_empty() {
                break;
            }
            let head = rest.chars().next().unwrap();
            match head {
                'O' => {
                    free += 1;
                    rest = &rest[1..];
                }
                'X' | 'V' => {
                    let open = rest.find('(').ok_or_else(|| err("missing '('"))?;
                    let close = rest.find(')').ok_or_else(|| err("missing ')'"))?;
                    let body = &rest[open + 1..close];
                    let ls: Result<Vec<usize>, _> =
                        body.split(',').map(|x| x.trim().parse::<usize>()).collect();
                    let ls = ls.map_err(|_| err("bad label"))?;
                    let kind = if head == 'X' { Kind::Quad } else { Kind::Tri };
                    if ls.len() != kind.degree() || ls.contains(&0) {
                        return Err(err("wrong arity or zero label"));
                    }
                    kinds.push(kind);
                    labels.extend(ls);
                    rest = &rest[close + 1..];
                }
                _ => return Err(err("unexpected token")),
            }
        }
        let mut seen: HashMap<usize, Vec<usize>> = HashMap::new();
        for (d, &l) in labels.iter().enumerate() {
            seen.entry(l).or_default().push(d);
        }
        let mut partner = vec![0; labels.len()];
        for (l, ds) in &seen {
            if ds.len() != 2 {
                return Err(err(&format!("label {} occurs {} times", l, ds.len())));
            }
            partner[ds[0]] = ds[1];
            partner[ds[1]] = ds[0];
        }
        // the understrand starts each X entry, so slots 1 and 3 are over
        let over = kinds.iter().map(|k| if *k == Kind::Quad { 1 } else { 0 }).collect();
        let graph = PlaneGraph::try_new(kinds, partner).map_err(|m| err(&m))?;
        Diagram::new(graph, over, free)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_code())
    }
}

impl std::str::FromStr for Diagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Diagram::from_code_str(s)
    }
}
