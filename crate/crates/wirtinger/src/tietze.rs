use std::collections::HashSet;

use crate::presentation::Presentation;
use crate::word::{cyclic_canonical, cyclic_reduce, free_reduce, gen_of, inverse, Letter, Word};

fn normalize(p: &mut Presentation) {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in &p.relators {
        let r = cyclic_reduce(r);
        if r.is_empty() {
            continue;
        }
        if seen.insert(cyclic_canonical(&r)) {
            out.push(r);
        }
    }
    out.sort_by_key(|r| r.len());
    p.relators = out;
    for q in &mut p.peripheral {
        q.meridian = free_reduce(&q.meridian);
        q.longitude = free_reduce(&q.longitude);
    }
}

fn occurrences(w: &[Letter], x: usize) -> usize {
    w.iter().filter(|&&l| gen_of(l) == x).count()
}

fn substitute(w: &[Letter], x: usize, value: &[Letter]) -> Word {
    let inv = inverse(value);
    let mut out = Vec::with_capacity(w.len());
    for &l in w {
        if gen_of(l) != x {
            let g = gen_of(l);
            // generators above x shift down once x is gone
            let g2 = if g > x { g - 1 } else { g };
            out.push(if l > 0 { g2 as i32 + 1 } else { -(g2 as i32 + 1) });
        } else {
            let v = if l > 0 { value } else { &inv };
            out.extend(v.iter().map(|&m| {
                let g = gen_of(m);
                let g2 = if g > x { g - 1 } else { g };
                if m > 0 {
                    g2 as i32 + 1
                } else {
                    -(g2 as i32 + 1)
                }
            }));
        }
    }
    free_reduce(&out)
}

/// Eliminates the cheapest generator occurring exactly once in some
/// relator. Returns false if there is none.
fn eliminate_one(p: &mut Presentation) -> bool {
    let mut best: Option<(usize, usize, usize, usize)> = None; // (cost, relator, position, generator)
    for (ri, r) in p.relators.iter().enumerate() {
        for (pos, &l) in r.iter().enumerate() {
            let x = gen_of(l);
            if occurrences(r, x) != 1 {
                continue;
            }
            let elsewhere: usize = p
                .relators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != ri)
                .map(|(_, w)| occurrences(w, x))
                .sum::<usize>()
                + p.peripheral.iter().map(|q| occurrences(&q.meridian, x) + occurrences(&q.longitude, x)).sum::<usize>();
            let cost = elsewhere * (r.len() - 1);
            if best.is_none_or(|b| cost < b.0) {
                best = Some((cost, ri, pos, x));
            }
        }
    }
    let Some((_, ri, pos, x)) = best else {
        return false;
    };
    let r = p.relators.remove(ri);
    let (u, v) = (&r[..pos], &r[pos + 1..]);
    // u x v = 1 gives x = u^-1 v^-1; u x^-1 v = 1 gives x = v u
    let value: Word = if r[pos] > 0 {
        inverse(u).into_iter().chain(inverse(v)).collect()
    } else {
        v.iter().chain(u).copied().collect()
    };
    // value mentions no x, but is still in the old numbering
    p.relators = p.relators.iter().map(|w| substitute(w, x, &value)).collect();
    for q in &mut p.peripheral {
        q.meridian = substitute(&q.meridian, x, &value);
        q.longitude = substitute(&q.longitude, x, &value);
    }
    p.generators -= 1;
    true
}

fn rotations(w: &[Letter]) -> impl Iterator<Item = Word> + '_ {
    (0..w.len()).map(move |r| w[r..].iter().chain(&w[..r]).copied().collect())
}

/// Replaces a relator by a shorter one using a long common cyclic piece
/// with another relator (or its inverse). Returns false if nothing helps.
fn shorten_one(p: &mut Presentation) -> bool {
    let n = p.relators.len();
    let mut best: Option<(usize, usize, Word)> = None; // (gain, target, replacement)
    for i in 0..n {
        for j in 0..n {
            if i == j || p.relators[j].len() > p.relators[i].len() {
                continue;
            }
            let ri = &p.relators[i];
            for base in [p.relators[j].clone(), inverse(&p.relators[j])] {
                for rj in rotations(&base) {
                    for ri_rot in rotations(ri) {
                        let k = ri_rot.iter().zip(&rj).take_while(|(a, b)| a == b).count();
                        if 2 * k <= rj.len() {
                            continue;
                        }
                        // ri_rot = P S with P = rj[..k]; rj = P Q, so P = Q^-1 and ri ~ Q^-1 S
                        let replacement: Word = inverse(&rj[k..]).into_iter().chain(ri_rot[k..].iter().copied()).collect();
                        let replacement = cyclic_reduce(&replacement);
                        let gain = ri.len() - replacement.len().min(ri.len());
                        if gain > 0 && best.as_ref().is_none_or(|b| gain > b.0) {
                            best = Some((gain, i, replacement));
                        }
                    }
                }
            }
        }
    }
    match best {
        Some((_, i, w)) => {
            p.relators[i] = w;
            true
        }
        None => false,
    }
}

/// Applies the free-group automorphism `x_i -> x_i x_j^e` (or
/// `x_j^e x_i` when `left`) to every relator and peripheral word.
fn nielsen(p: &Presentation, i: usize, j: usize, e: i32, left: bool) -> Presentation {
    let xi = i as i32 + 1;
    let xj = (j as i32 + 1) * e;
    let image: Word = if left { vec![xj, xi] } else { vec![xi, xj] };
    let sub = |w: &[Letter]| -> Word {
        let mut out = Vec::with_capacity(w.len() + 4);
        for &l in w {
            if gen_of(l) != i {
                out.push(l);
            } else if l > 0 {
                out.extend_from_slice(&image);
            } else {
                out.extend(inverse(&image));
            }
        }
        free_reduce(&out)
    };
    let mut q = p.clone();
    q.relators = p.relators.iter().map(|r| sub(r)).collect();
    for per in &mut q.peripheral {
        per.meridian = sub(&per.meridian);
        per.longitude = sub(&per.longitude);
    }
    q
}

fn greedy(p: &mut Presentation, effort: usize) {
    normalize(p);
    let mut rounds = 0;
    loop {
        while eliminate_one(p) {
            normalize(p);
        }
        if rounds >= effort || !shorten_one(p) {
            break;
        }
        rounds += 1;
        normalize(p);
    }
}

/// Greedy Tietze simplification: generator elimination through relators
/// where a generator occurs once, with relator shortening between rounds.
/// When that stalls, single Nielsen moves on the generators are tried and
/// kept if they let a further generator go. `effort` bounds the number of
/// shortening rounds and of Nielsen steps. The result presents an
/// isomorphic group; peripheral words are carried along.
pub fn tietze_simplify(p: &Presentation, effort: usize) -> Presentation {
    let mut p = p.clone();
    greedy(&mut p, effort);
    for _ in 0..effort {
        let n = p.generators;
        let mut best: Option<Presentation> = None;
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                for e in [1, -1] {
                    for left in [false, true] {
                        let mut q = nielsen(&p, i, j, e, left);
                        greedy(&mut q, effort);
                        let better = match &best {
                            None => q.generators < n,
                            Some(b) => (q.generators, q.total_length()) < (b.generators, b.total_length()),
                        };
                        if better {
                            best = Some(q);
                        }
                    }
                }
            }
        }
        match best {
            Some(b) => p = b,
            None => break,
        }
    }
    p
}
