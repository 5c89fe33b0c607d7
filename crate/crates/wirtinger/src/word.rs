//! Words in free groups. A letter is a nonzero `i32`: `g + 1` for generator
//! `g`, `-(g + 1)` for its inverse. The empty word is written `e`.

pub type Letter = i32;
pub type Word = Vec<Letter>;

#[inline]
pub fn letter(g: usize, exp: i32) -> Letter {
    if exp < 0 {
        -(g as i32 + 1)
    } else {
        g as i32 + 1
    }
}

#[inline]
pub fn gen_of(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

#[inline]
pub fn exp_of(l: Letter) -> i32 {
    l.signum()
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn power(g: usize, e: i64) -> Word {
    vec![letter(g, e.signum() as i32); e.unsigned_abs() as usize]
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut i = 0;
    let mut j = w.len();
    while j > i + 1 && w[i] == -w[j - 1] {
        i += 1;
        j -= 1;
    }
    w[i..j].to_vec()
}

/// Least rotation of `w` or of its inverse; equal for relators that define
/// the same normal closure in the obvious way.
pub fn cyclic_canonical(w: &[Letter]) -> Word {
    let inv = inverse(w);
    let mut best: Option<Word> = None;
    for base in [w, inv.as_slice()] {
        for r in 0..base.len().max(1) {
            let cand: Word = base[r..].iter().chain(&base[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_word(s: &str) -> Option<Word> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Some(vec![]);
    }
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().ok().filter(|&l| l != 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(free_reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(&[-1, 2, 3, 1]), vec![2, 3]);
        assert_eq!(cyclic_reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(cyclic_canonical(&[2, 1]), cyclic_canonical(&[-1, -2]));
    }

    #[test]
    fn word_text() {
        assert_eq!(parse_word("e"), Some(vec![]));
        assert_eq!(parse_word("1"), Some(vec![1]));
        assert_eq!(parse_word(&format_word(&[1, -3])), Some(vec![1, -3]));
        assert_eq!(parse_word("1 0"), None);
    }
}
