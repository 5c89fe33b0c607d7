//! Finite groups as dense multiplication tables.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use itertools::Itertools;

#[derive(Debug, thiserror::Error)]
pub enum GroupError {
    #[error("malformed group table: {0}")]
    Malformed(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unknown group spec {0:?} (expected a4, a5, s3, s4 or file:PATH)")]
    UnknownSpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Element 0 is the identity. Products are `mul(a, b) = a·b`.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    n: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    class_of: Vec<u16>,
    class_reps: Vec<usize>,
    class_sizes: Vec<usize>,
    centralizer: Vec<Vec<u64>>,
    perms: Option<Vec<Vec<u8>>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.n)
    }
}

fn compose(p: &[u8], q: &[u8]) -> Vec<u8> {
    // apply q first, then p: (p·q)(i) = p(q(i))
    q.iter().map(|&i| p[i as usize]).collect()
}

fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

impl GroupTable {
    /// Builds from a product table after checking the group axioms.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<GroupTable, GroupError> {
        let n = table.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(GroupError::Malformed(format!("order {}", n)));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::Malformed("rows must have N entries in 0..N".into()));
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(GroupError::NotAGroup("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!("({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                    }
                }
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == 0)
                .ok_or_else(|| GroupError::NotAGroup(format!("{} has no inverse", a)))?;
            if table[b][a] != 0 {
                return Err(GroupError::NotAGroup(format!("{} has no two-sided inverse", a)));
            }
            inv[a] = b as u16;
        }
        let flat = table.iter().flatten().map(|&x| x as u16).collect();
        Ok(Self::finish(name, n, flat, inv, None))
    }

    fn finish(name: &str, n: usize, table: Vec<u16>, inv: Vec<u16>, perms: Option<Vec<Vec<u8>>>) -> GroupTable {
        let mul = |a: usize, b: usize| table[a * n + b] as usize;
        let words = n.div_ceil(64);
        let mut centralizer = vec![vec![0u64; words]; n];
        for a in 0..n {
            for b in 0..n {
                if mul(a, b) == mul(b, a) {
                    centralizer[a][b / 64] |= 1 << (b % 64);
                }
            }
        }
        let mut class_of = vec![u16::MAX; n];
        let mut class_reps = Vec::new();
        let mut class_sizes = Vec::new();
        for a in 0..n {
            if class_of[a] != u16::MAX {
                continue;
            }
            let id = class_reps.len() as u16;
            class_reps.push(a);
            let mut size = 0;
            for g in 0..n {
                let c = mul(mul(g, a), inv[g] as usize);
                if class_of[c] == u16::MAX {
                    class_of[c] = id;
                    size += 1;
                }
            }
            class_sizes.push(size);
        }
        GroupTable { name: name.to_string(), n, table, inv, class_of, class_reps, class_sizes, centralizer, perms }
    }

    /// The group generated by permutations of `0..degree` (images listed).
    pub fn from_permutations(name: &str, degree: usize, gens: &[Vec<u8>]) -> GroupTable {
        let id: Vec<u8> = (0..degree as u8).collect();
        let mut elems = vec![id];
        let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        Self::from_elements(name, elems)
    }

    fn from_elements(name: &str, elems: Vec<Vec<u8>>) -> GroupTable {
        let n = elems.len();
        let index: HashMap<&[u8], usize> = elems.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut table = vec![0u16; n * n];
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                let c = index[compose(&elems[a], &elems[b]).as_slice()];
                table[a * n + b] = c as u16;
                if c == 0 {
                    inv[a] = b as u16;
                }
            }
        }
        Self::finish(name, n, table, inv, Some(elems))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// g·a·g⁻¹
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.centralizer[a][b / 64] >> (b % 64) & 1 == 1
    }

    /// Bitset of the centralizer of `a`, 64 elements per word.
    pub fn centralizer_bits(&self, a: usize) -> &[u64] {
        &self.centralizer[a]
    }

    pub fn centralizer_order(&self, a: usize) -> usize {
        self.centralizer[a].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.n).filter(|&b| self.commutes(a, b)).collect()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a] as usize
    }

    pub fn class_count(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Permutation images, when the group was built from permutations.
    pub fn permutation(&self, a: usize) -> Option<&[u8]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    /// Product table rows, as accepted by [`GroupTable::from_table`].
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    /// `order N` followed by N rows of N indices.
    pub fn to_table_text(&self) -> String {
        let mut s = format!("order {}\n", self.n);
        for row in self.table_rows() {
            s.push_str(&row.iter().join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_table_text(name: &str, text: &str) -> Result<GroupTable, GroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| GroupError::Malformed("empty file".into()))?;
        let n: usize = head
            .strip_prefix("order")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| GroupError::Malformed(format!("bad header {:?}", head)))?;
        let mut rows = Vec::with_capacity(n);
        for line in lines {
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            rows.push(row.map_err(|e| GroupError::Malformed(e.to_string()))?);
        }
        if rows.len() != n {
            return Err(GroupError::Malformed(format!("expected {} rows, found {}", n, rows.len())));
        }
        Self::from_table(name, rows)
    }

    pub fn load(path: &Path) -> Result<GroupTable, GroupError> {
        let text = std::fs::read_to_string(path)?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("G");
        Self::parse_table_text(name, &text)
    }

    /// `a4`, `a5`, `s3`, `s4` or `file:PATH`.
    pub fn from_spec(spec: &str) -> Result<GroupTable, GroupError> {
        match spec.to_ascii_lowercase().as_str() {
            "a4" => Ok(alternating_group(4)),
            "a5" => Ok(alternating_group(5)),
            "s3" => Ok(symmetric_group(3)),
            "s4" => Ok(symmetric_group(4)),
            _ => match spec.strip_prefix("file:") {
                Some(p) => Self::load(Path::new(p)),
                None => Err(GroupError::UnknownSpec(spec.to_string())),
            },
        }
    }
}

fn permutations_of(k: usize, even_only: bool) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = (0..k as u8)
        .permutations(k)
        .filter(|p| !even_only || is_even(p))
        .collect();
    // identity first
    out.sort();
    out
}

/// Even permutations of `k` letters.
pub fn alternating_group(k: usize) -> GroupTable {
    assert!((1..=7).contains(&k), "alternating group degree out of range");
    GroupTable::from_elements(&format!("A{}", k), permutations_of(k, true))
}

pub fn symmetric_group(k: usize) -> GroupTable {
    assert!((1..=6).contains(&k), "symmetric group degree out of range");
    GroupTable::from_elements(&format!("S{}", k), permutations_of(k, false))
}

/// Conjugacy classes of homomorphisms from the free group of rank `r`:
/// (1/|G|) Σ_g |C(g)|^r.
pub fn burnside_free_hom_classes(g: &GroupTable, rank: u32) -> u128 {
    let total: u128 = (0..g.order()).map(|a| (g.centralizer_order(a) as u128).pow(rank)).sum();
    total / g.order() as u128
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a4_and_a5_structure() {
        let a4 = alternating_group(4);
        assert_eq!((a4.order(), a4.class_count()), (12, 4));
        let a5 = alternating_group(5);
        assert_eq!((a5.order(), a5.class_count()), (60, 5));
        assert_eq!(a5.centralizer_order(0), 60);
        let mut sizes = a5.class_sizes().to_vec();
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn split_row_values() {
        assert_eq!(burnside_free_hom_classes(&alternating_group(4), 3), 178);
        assert_eq!(burnside_free_hom_classes(&alternating_group(5), 3), 3675);
        assert_eq!(burnside_free_hom_classes(&alternating_group(5), 0), 1);
    }

    #[test]
    fn rank_one_counts_classes() {
        for g in [alternating_group(4), alternating_group(5), symmetric_group(4)] {
            assert_eq!(burnside_free_hom_classes(&g, 1), g.class_count() as u128);
        }
    }

    #[test]
    fn table_text_roundtrip() {
        let a4 = alternating_group(4);
        let back = GroupTable::parse_table_text("A4", &a4.to_table_text()).unwrap();
        assert_eq!(back.table_rows(), a4.table_rows());
        assert_eq!(back.class_count(), 4);
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(GroupTable::parse_table_text("x", "order 2\n0 1\n1 1\n").is_err());
        assert!(GroupTable::parse_table_text("x", "order 2\n0 1\n").is_err());
        assert!(matches!(GroupTable::from_spec("q8"), Err(GroupError::UnknownSpec(_))));
    }

    #[test]
    fn generated_group_matches_listing() {
        let g = GroupTable::from_permutations("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]);
        assert_eq!(g.order(), 12);
        assert_eq!(burnside_free_hom_classes(&g, 3), 178);
    }
}
