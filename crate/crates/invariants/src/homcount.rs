use fingroup::GroupTable;
use wirtinger::word::{gen_of, Letter};
use wirtinger::Presentation;

const UNSET: u16 = u16::MAX;

/// A presentation compiled for homomorphism search.
struct Compiled {
    gens: usize,
    rels: Vec<Vec<Letter>>,
    rel_gens: Vec<Vec<usize>>,
    gen_rels: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl Compiled {
    fn new(p: &Presentation) -> Compiled {
        let gens = p.generators;
        let rels: Vec<Vec<Letter>> = p.relators.iter().filter(|r| !r.is_empty()).cloned().collect();
        let rel_gens: Vec<Vec<usize>> = rels
            .iter()
            .map(|r| {
                let mut g: Vec<usize> = r.iter().map(|&l| gen_of(l)).collect();
                g.sort();
                g.dedup();
                g
            })
            .collect();
        let mut gen_rels = vec![Vec::new(); gens];
        for (i, gs) in rel_gens.iter().enumerate() {
            for &g in gs {
                gen_rels[g].push(i);
            }
        }
        let mut c = Compiled { gens, rels, rel_gens, gen_rels, order: vec![] };
        c.order = c.branch_order();
        c
    }

    /// Generators a relator can solve for once all others are known.
    fn solvable(&self, r: usize, g: usize) -> bool {
        self.rels[r].iter().filter(|&&l| gen_of(l) == g).count() == 1
    }

    fn closure(&self, known: &mut [bool]) {
        let mut changed = true;
        while changed {
            changed = false;
            for r in 0..self.rels.len() {
                let unknown: Vec<usize> = self.rel_gens[r].iter().copied().filter(|&g| !known[g]).collect();
                if unknown.len() == 1 && self.solvable(r, unknown[0]) {
                    known[unknown[0]] = true;
                    changed = true;
                }
            }
        }
    }

    /// Greedy static branching order: each step picks the generator whose
    /// choice determines the most others by propagation.
    fn branch_order(&self) -> Vec<usize> {
        let mut known = vec![false; self.gens];
        let mut order = Vec::new();
        loop {
            let mut best: Option<(usize, usize)> = None;
            for g in (0..self.gens).filter(|&g| !known[g]) {
                let mut k = known.clone();
                k[g] = true;
                self.closure(&mut k);
                let gain = k.iter().filter(|&&b| b).count();
                if best.is_none_or(|b| gain > b.1) {
                    best = Some((g, gain));
                }
            }
            let Some((g, _)) = best else { break };
            order.push(g);
            known[g] = true;
            self.closure(&mut known);
        }
        // generators fixed by propagation still get a slot, in case a
        // relator check fails to solve them at run time
        let rest: Vec<usize> = (0..self.gens).filter(|g| !order.contains(g)).collect();
        order.extend(rest);
        order
    }
}

struct Search<'a> {
    c: &'a Compiled,
    g: &'a GroupTable,
    domain: Vec<bool>,
    val: Vec<u16>,
    trail: Vec<usize>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(c: &'a Compiled, g: &'a GroupTable, domain: Vec<bool>) -> Self {
        Search { c, g, domain, val: vec![UNSET; c.gens], trail: vec![], nodes: 0 }
    }

    fn eval(&self, w: &[Letter]) -> usize {
        w.iter().fold(0, |acc, &l| {
            let x = self.val[gen_of(l)] as usize;
            self.g.mul(acc, if l > 0 { x } else { self.g.inv(x) })
        })
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.val[x] = UNSET;
        }
    }

    /// Assigns `x := v` and propagates. False on a violated relator.
    fn assign(&mut self, x: usize, v: usize) -> bool {
        self.val[x] = v as u16;
        self.trail.push(x);
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            for &r in &self.c.gen_rels[y] {
                let mut unknown = None;
                let mut count = 0;
                for &h in &self.c.rel_gens[r] {
                    if self.val[h] == UNSET {
                        unknown = Some(h);
                        count += 1;
                    }
                }
                match (count, unknown) {
                    (0, _) => {
                        if self.eval(&self.c.rels[r]) != 0 {
                            return false;
                        }
                    }
                    (1, Some(h)) if self.c.solvable(r, h) => {
                        let w = &self.c.rels[r];
                        let pos = w.iter().position(|&l| gen_of(l) == h).unwrap();
                        let (u, v) = (self.eval(&w[..pos]), self.eval(&w[pos + 1..]));
                        let mut z = self.g.mul(self.g.inv(u), self.g.inv(v));
                        if w[pos] < 0 {
                            z = self.g.inv(z);
                        }
                        if !self.domain[z] {
                            return false;
                        }
                        self.val[h] = z as u16;
                        self.trail.push(h);
                        queue.push(h);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    /// Visits every solution extending the current partial assignment.
    fn run(&mut self, depth: usize, leaf: &mut dyn FnMut(&[u16])) {
        self.nodes += 1;
        let next = self.c.order[depth..].iter().position(|&x| self.val[x] == UNSET).map(|k| depth + k);
        let Some(d) = next else {
            leaf(&self.val);
            return;
        };
        let x = self.c.order[d];
        for v in 0..self.g.order() {
            if !self.domain[v] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, v) {
                self.run(d + 1, leaf);
            }
            self.undo(mark);
        }
    }
}

/// Number of homomorphisms into the subgroup `domain` (a membership mask).
pub fn count_homs_into(p: &Presentation, g: &GroupTable, domain: &[bool]) -> u64 {
    let c = Compiled::new(p);
    let mut s = Search::new(&c, g, domain.to_vec());
    let mut n = 0u64;
    s.run(0, &mut |_| n += 1);
    n
}

pub fn count_homs(p: &Presentation, g: &GroupTable) -> u64 {
    count_homs_into(p, g, &vec![true; g.order()])
}

fn stabilizer_order(g: &GroupTable, val: &[u16]) -> u64 {
    let mut acc: Vec<u64> = g.centralizer_bits(0).to_vec();
    for &x in val {
        for (a, b) in acc.iter_mut().zip(g.centralizer_bits(x as usize)) {
            *a &= b;
        }
    }
    acc.iter().map(|w| w.count_ones() as u64).sum()
}

/// Conjugacy classes of homomorphisms. The first branched generator is
/// fixed to class representatives; a solution `ρ` with `ρ(x) = r` stands
/// for `|Stab ρ| / |C(r)|` orbits, and these add up to whole numbers per
/// representative.
pub fn count_hom_classes(p: &Presentation, g: &GroupTable) -> u64 {
    count_hom_classes_with_workers(p, g, 1)
}

/// As [`count_hom_classes`], splitting class representatives over
/// `workers` threads. The result does not depend on `workers`.
pub fn count_hom_classes_with_workers(p: &Presentation, g: &GroupTable, workers: usize) -> u64 {
    let c = Compiled::new(p);
    let Some(&first) = c.order.first() else {
        return 1;
    };
    let reps = g.class_reps();
    let per_rep = |r: usize| -> u64 {
        let mut s = Search::new(&c, g, vec![true; g.order()]);
        let mut weight = 0u64;
        if s.assign(first, r) {
            s.run(1, &mut |val| weight += stabilizer_order(g, val));
        }
        let cr = g.centralizer_order(r) as u64;
        assert_eq!(weight % cr, 0, "orbit weights must add up to whole orbits");
        weight / cr
    };
    let workers = workers.max(1).min(reps.len());
    if workers == 1 {
        return reps.iter().map(|&r| per_rep(r)).sum();
    }
    let chunks: Vec<Vec<usize>> = (0..workers).map(|w| reps.iter().copied().skip(w).step_by(workers).collect()).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| scope.spawn(|| chunk.iter().map(|&r| per_rep(r)).sum::<u64>()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    })
}

/// Burnside's lemma: (1/|G|) Σ_g #Hom(π, C(g)), grouped by classes.
pub fn count_hom_classes_burnside(p: &Presentation, g: &GroupTable) -> u64 {
    let mut total = 0u64;
    for (k, &r) in g.class_reps().iter().enumerate() {
        let dom: Vec<bool> = (0..g.order()).map(|x| g.commutes(r, x)).collect();
        total += g.class_sizes()[k] as u64 * count_homs_into(p, g, &dom);
    }
    assert_eq!(total % g.order() as u64, 0);
    total / g.order() as u64
}

/// Classes of homomorphisms sending `kill` to the identity.
pub fn count_constrained_classes(p: &Presentation, g: &GroupTable, kill: &[Letter]) -> u64 {
    let mut q = p.clone();
    if !kill.is_empty() {
        q.relators.push(kill.to_vec());
    }
    count_hom_classes(&q, g)
}

/// Search nodes visited while counting (diagnostics).
pub fn search_nodes(p: &Presentation, g: &GroupTable) -> u64 {
    let c = Compiled::new(p);
    let mut s = Search::new(&c, g, vec![true; g.order()]);
    s.run(0, &mut |_| {});
    s.nodes
}
