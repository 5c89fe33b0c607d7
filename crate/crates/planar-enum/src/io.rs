use serde::{Deserialize, Serialize};

use crate::graph::{Kind, PlaneGraph};

#[derive(Debug, thiserror::Error)]
#[error("bad plane graph line: {0}")]
pub struct ParseError(pub String);

impl PlaneGraph {
    /// One-line text form, rotations counterclockwise.
    pub fn to_text(&self) -> String {
        let verts: Vec<String> = (0..self.vertex_count())
            .map(|v| {
                let tag = match self.kind(v) {
                    Kind::Tri => 't',
                    Kind::Quad => 'q',
                };
                let ds: Vec<String> = self.darts_of(v).map(|d| d.to_string()).collect();
                format!("v{}({}): {}", v, tag, ds.join(" "))
            })
            .collect();
        let mut pairs = String::new();
        for d in 0..self.dart_count() {
            if d < self.partner(d) {
                pairs.push_str(&format!("({},{})", d, self.partner(d)));
            }
        }
        format!("T={} Q={} | {} | pairs: {}", self.tri_count(), self.quad_count(), verts.join(" ; "), pairs)
    }

    pub fn from_text(line: &str) -> Result<PlaneGraph, ParseError> {
        let err = |m: &str| ParseError(format!("{}: {}", m, line));
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(err("expected three '|' separated fields"));
        }
        let mut kinds = Vec::new();
        let mut dart_ids: Vec<Vec<usize>> = Vec::new();
        for chunk in parts[1].split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (head, body) = chunk.split_once(':').ok_or_else(|| err("vertex without ':'"))?;
            let kind = if head.contains("(t)") {
                Kind::Tri
            } else if head.contains("(q)") {
                Kind::Quad
            } else {
                return Err(err("unknown vertex kind"));
            };
            let ds: Result<Vec<usize>, _> = body.split_whitespace().map(str::parse).collect();
            let ds = ds.map_err(|_| err("bad dart id"))?;
            if ds.len() != kind.degree() {
                return Err(err("rotation length does not match kind"));
            }
            kinds.push(kind);
            dart_ids.push(ds);
        }
        let total: usize = dart_ids.iter().map(Vec::len).sum();
        // map arbitrary dart ids to positions in vertex order
        let mut pos = std::collections::HashMap::new();
        for (i, d) in dart_ids.iter().flatten().enumerate() {
            if pos.insert(*d, i).is_some() {
                return Err(err("dart listed twice"));
            }
        }
        let body = parts[2].strip_prefix("pairs:").ok_or_else(|| err("missing pairs"))?;
        let mut partner = vec![usize::MAX; total];
        for p in body.split(')').map(str::trim).filter(|s| !s.is_empty()) {
            let p = p.trim_start_matches('(');
            let (a, b) = p.split_once(',').ok_or_else(|| err("bad pair"))?;
            let a: usize = a.trim().parse().map_err(|_| err("bad pair"))?;
            let b: usize = b.trim().parse().map_err(|_| err("bad pair"))?;
            let (a, b) = (
                *pos.get(&a).ok_or_else(|| err("unknown dart"))?,
                *pos.get(&b).ok_or_else(|| err("unknown dart"))?,
            );
            partner[a] = b;
            partner[b] = a;
        }
        PlaneGraph::try_new(kinds, partner).map_err(|m| err(&m))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            t: self.tri_count(),
            q: self.quad_count(),
            vertices: (0..self.vertex_count())
                .map(|v| VertexJson { kind: self.kind(v), darts: self.darts_of(v).collect() })
                .collect(),
            pairs: (0..self.dart_count())
                .filter(|&d| d < self.partner(d))
                .map(|d| [d, self.partner(d)])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VertexJson {
    pub kind: Kind,
    pub darts: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphJson {
    pub t: usize,
    pub q: usize,
    pub vertices: Vec<VertexJson>,
    pub pairs: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<PlaneGraph, ParseError> {
        let mut pos = std::collections::HashMap::new();
        let mut kinds = Vec::new();
        for v in &self.vertices {
            for d in &v.darts {
                let n = pos.len();
                pos.insert(*d, n);
            }
            kinds.push(v.kind);
        }
        let mut partner = vec![usize::MAX; pos.len()];
        for [a, b] in &self.pairs {
            let (a, b) = match (pos.get(a), pos.get(b)) {
                (Some(&a), Some(&b)) => (a, b),
                _ => return Err(ParseError("unknown dart in pairs".into())),
            };
            partner[a] = b;
            partner[b] = a;
        }
        PlaneGraph::try_new(kinds, partner).map_err(ParseError)
    }
}
