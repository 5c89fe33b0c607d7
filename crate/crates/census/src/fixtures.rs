use std::path::Path;

use diagram::Diagram;
use sums::{LinkFixture, Summand};

pub const HEADER: &str = "# census-fixtures 1";

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("{file}: missing or unknown header (want '{HEADER}')")]
    Header { file: String },
    #[error("{file}:{line}: {msg}")]
    Line { file: String, line: usize, msg: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// A named diagram from a fixture file.
#[derive(Clone, Debug)]
pub struct Named {
    pub name: String,
    pub diagram: Diagram,
}

#[derive(Clone, Debug)]
pub struct Fixtures {
    /// Table entries plus the comparison rows (`split`, `fake_*`).
    pub entries: Vec<Named>,
    pub graphs: Vec<Named>,
    /// Link pool of the composite search.
    pub composite_links: Vec<Named>,
    /// Pool of the reducible census.
    pub links: Vec<LinkFixture>,
    /// Links outside the table's rows, kept for comparison.
    pub extra_links: Vec<LinkFixture>,
}

const FILES: [&str; 5] = ["entries.txt", "graphs.txt", "composite-links.txt", "links.txt", "links-extra.txt"];

fn embedded(file: &str) -> &'static str {
    match file {
        "entries.txt" => include_str!("../fixtures/entries.txt"),
        "graphs.txt" => include_str!("../fixtures/graphs.txt"),
        "composite-links.txt" => include_str!("../fixtures/composite-links.txt"),
        "links.txt" => include_str!("../fixtures/links.txt"),
        "links-extra.txt" => include_str!("../fixtures/links-extra.txt"),
        _ => unreachable!("unknown fixture file"),
    }
}

/// Non-comment lines with their line numbers, after checking the header.
fn lines<'a>(file: &str, text: &'a str) -> Result<Vec<(usize, &'a str)>, FixtureError> {
    if text.lines().next().map(str::trim) != Some(HEADER) {
        return Err(FixtureError::Header { file: file.into() });
    }
    Ok(text
        .lines()
        .enumerate()
        .skip(1)
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn err(file: &str, line: usize, msg: impl ToString) -> FixtureError {
    FixtureError::Line { file: file.into(), line, msg: msg.to_string() }
}

fn parse_named(file: &str, text: &str) -> Result<Vec<Named>, FixtureError> {
    let mut out: Vec<Named> = Vec::new();
    for (n, l) in lines(file, text)? {
        let (name, code) = l.split_once(' ').ok_or_else(|| err(file, n, "expected 'name code'"))?;
        let diagram = match code.trim().strip_prefix("mirror ") {
            Some(other) => match out.iter().find(|x| x.name == other.trim()) {
                Some(x) => x.diagram.mirror(),
                None => return Err(err(file, n, format!("no earlier line named {}", other))),
            },
            None => code.trim().parse().map_err(|e| err(file, n, e))?,
        };
        out.push(Named { name: name.to_string(), diagram });
    }
    Ok(out)
}

fn parse_orbits(s: &str) -> Option<Vec<Vec<usize>>> {
    if s == "-" {
        return None;
    }
    s.split('|').map(|g| g.split(',').map(|x| x.parse().ok()).collect()).collect()
}

fn parse_links(file: &str, text: &str) -> Result<Vec<LinkFixture>, FixtureError> {
    let mut out = Vec::new();
    for (n, l) in lines(file, text)? {
        let mut it = l.splitn(5, ' ');
        let mut field = || it.next().ok_or_else(|| err(file, n, "expected 'name crossings components orbits code'"));
        let name = field()?.to_string();
        let crossings = field()?.parse().map_err(|e| err(file, n, e))?;
        let components = field()?.parse().map_err(|e| err(file, n, e))?;
        let orbits = field()?;
        let code = field()?.trim();
        let diagram = match code {
            "-" => None,
            c => Some(c.parse::<Diagram>().map_err(|e| err(file, n, e))?),
        };
        if let Some(d) = &diagram {
            if d.crossing_count() != crossings || d.component_count() != components {
                return Err(err(file, n, "diagram disagrees with the stated counts"));
            }
        }
        let orbits = parse_orbits(orbits);
        if let Some(o) = &orbits {
            let mut ids: Vec<usize> = o.iter().flatten().copied().collect();
            ids.sort_unstable();
            if ids != (0..components).collect::<Vec<_>>() {
                return Err(err(file, n, "orbits must partition the components"));
            }
        }
        out.push(LinkFixture { name, crossings, components, diagram, orbits });
    }
    Ok(out)
}

impl Fixtures {
    fn from_texts(texts: &[String; 5]) -> Result<Fixtures, FixtureError> {
        Ok(Fixtures {
            entries: parse_named(FILES[0], &texts[0])?,
            graphs: parse_named(FILES[1], &texts[1])?,
            composite_links: parse_named(FILES[2], &texts[2])?,
            links: parse_links(FILES[3], &texts[3])?,
            extra_links: parse_links(FILES[4], &texts[4])?,
        })
    }

    /// The fixture set compiled into the crate.
    pub fn embedded() -> Fixtures {
        Self::from_texts(&FILES.map(|f| embedded(f).to_string())).expect("embedded fixtures parse")
    }

    /// Reads the five fixture files from `dir`.
    pub fn load(dir: &Path) -> Result<Fixtures, FixtureError> {
        let mut texts: [String; 5] = Default::default();
        for (t, f) in texts.iter_mut().zip(FILES) {
            *t = std::fs::read_to_string(dir.join(f))?;
        }
        Self::from_texts(&texts)
    }

    pub fn entry(&self, label: &str) -> Option<&Diagram> {
        self.entries.iter().find(|e| e.name == label).map(|e| &e.diagram)
    }

    pub fn graph_pool(&self) -> Vec<Summand> {
        self.graphs.iter().map(|g| Summand::new(&g.name, g.diagram.clone())).collect()
    }

    pub fn composite_pool(&self) -> Vec<Summand> {
        self.composite_links.iter().map(|g| Summand::new(&g.name, g.diagram.clone())).collect()
    }
}

/// Row family of a pool link: the part of its name before ':'.
pub fn family(name: &str) -> &str {
    name.split(':').next().unwrap_or(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_parse() {
        let f = Fixtures::embedded();
        assert_eq!(f.entries.len(), 20);
        assert_eq!(f.graphs.len(), 8);
        assert_eq!(f.composite_links.len(), 7);
        assert!(f.links.iter().any(|l| l.diagram.is_none() && l.orbits.is_some()));
    }

    #[test]
    fn header_is_required() {
        assert!(matches!(parse_named("x", "a O\n"), Err(FixtureError::Header { .. })));
        assert!(parse_named("x", &format!("{}\na O\n", HEADER)).is_ok());
    }

    #[test]
    fn mirror_lines_refer_backwards() {
        let t = format!("{}\nH X(4,1,2,3) X(1,4,3,2)\nH* mirror H\n", HEADER);
        let v = parse_named("x", &t).unwrap();
        assert_eq!(v[1].diagram.oriented_code(), v[0].diagram.mirror().oriented_code());
        assert!(parse_named("x", &format!("{}\nH* mirror H\n", HEADER)).is_err());
    }

    #[test]
    fn bad_orbits_are_rejected() {
        let t = format!("{}\nHopf 2 2 0 X(4,1,2,3) X(1,4,3,2)\n", HEADER);
        assert!(parse_links("x", &t).is_err());
        let t = format!("{}\nHopf 2 2 0|1 -\n", HEADER);
        assert_eq!(parse_links("x", &t).unwrap()[0].orbits, Some(vec![vec![0], vec![1]]));
    }

    #[test]
    fn families() {
        assert_eq!(family("(Hopf#Hopf)#Hopf:star"), "(Hopf#Hopf)#Hopf");
        assert_eq!(family("Hopf"), "Hopf");
    }
}
