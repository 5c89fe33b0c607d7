use std::fmt::Write as _;

use crate::word::{cyclic_reduce, format_word, gen_of, parse_word, Word};
use crate::WirtingerError;

/// Meridian and preferred longitude of a circle component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peripheral {
    pub component: usize,
    pub meridian: Word,
    pub longitude: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<Word>,
    pub peripheral: Vec<Peripheral>,
}

impl Presentation {
    pub fn free(rank: usize) -> Presentation {
        Presentation { generators: rank, relators: vec![], peripheral: vec![] }
    }

    pub fn validate(&self) -> Result<(), WirtingerError> {
        let words = self.relators.iter().chain(self.peripheral.iter().flat_map(|p| [&p.meridian, &p.longitude]));
        for w in words {
            if let Some(&l) = w.iter().find(|&&l| l == 0 || gen_of(l) >= self.generators) {
                return Err(WirtingerError::Malformed(format!("letter {} out of range", l)));
            }
        }
        Ok(())
    }

    pub fn peripheral_of(&self, component: usize) -> Option<&Peripheral> {
        self.peripheral.iter().find(|p| p.component == component)
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators];
                for &l in r {
                    row[gen_of(l)] += l.signum() as i64;
                }
                row
            })
            .collect()
    }

    /// Free rank of the abelianization.
    pub fn abelian_rank(&self) -> usize {
        self.generators - integer_rank(self.exponent_matrix())
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// `gens N`, one relator per line, then peripheral lines.
    pub fn to_text(&self) -> String {
        let mut s = format!("gens {}\n", self.generators);
        for r in &self.relators {
            s.push_str(&format_word(r));
            s.push('\n');
        }
        for p in &self.peripheral {
            let _ = writeln!(
                s,
                "peripheral comp={} m={} l={}",
                p.component,
                format_word(&p.meridian).replace(' ', ","),
                format_word(&p.longitude).replace(' ', ",")
            );
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Presentation, WirtingerError> {
        let bad = |m: String| WirtingerError::Malformed(m);
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| bad("empty presentation".into()))?;
        let generators = head
            .strip_prefix("gens")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| bad(format!("bad header {:?}", head)))?;
        let mut p = Presentation { generators, ..Default::default() };
        for line in lines {
            if let Some(rest) = line.strip_prefix("peripheral") {
                let mut comp = None;
                let mut m = None;
                let mut l = None;
                for field in rest.split_whitespace() {
                    let (k, v) = field.split_once('=').ok_or_else(|| bad(format!("bad field {:?}", field)))?;
                    match k {
                        "comp" => comp = v.parse().ok(),
                        "m" => m = parse_word(v),
                        "l" => l = parse_word(v),
                        _ => return Err(bad(format!("unknown key {:?}", k))),
                    }
                }
                match (comp, m, l) {
                    (Some(component), Some(meridian), Some(longitude)) => {
                        p.peripheral.push(Peripheral { component, meridian, longitude })
                    }
                    _ => return Err(bad(format!("incomplete peripheral line {:?}", line))),
                }
            } else {
                p.relators.push(parse_word(line).ok_or_else(|| bad(format!("bad relator {:?}", line)))?);
            }
        }
        p.validate()?;
        Ok(p)
    }

    /// Cyclically reduced relators with empties removed.
    pub fn reduced(&self) -> Presentation {
        let mut p = self.clone();
        p.relators = p.relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
        p
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank over the rationals by integer row elimination.
pub fn integer_rank(mut m: Vec<Vec<i64>>) -> usize {
    let mut rows: Vec<Vec<i128>> = m.drain(..).map(|r| r.into_iter().map(i128::from).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i == rank || rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[i][c]);
            let g = gcd(a, b);
            let (fa, fb) = (b / g, a / g);
            for k in 0..cols {
                rows[i][k] = rows[i][k] * fb - rows[rank][k] * fa;
            }
            let h = rows[i].iter().fold(0, |acc, &x| gcd(acc, x));
            if h > 1 {
                rows[i].iter_mut().for_each(|x| *x /= h);
            }
        }
        rank += 1;
    }
    rank
}
