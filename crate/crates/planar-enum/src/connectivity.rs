use crate::graph::PlaneGraph;

/// Minimum number of edges whose removal disconnects the underlying
/// multigraph (Stoer-Wagner). Loops never matter; parallel edges count
/// separately. Disconnected graphs give 0, single vertices `usize::MAX`.
pub fn edge_connectivity(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return usize::MAX;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut w = vec![vec![0usize; n]; n];
    for d in 0..g.dart_count() {
        let (u, v) = (g.vertex_of(d), g.vertex_of(g.partner(d)));
        if u != v {
            w[u][v] += 1;
        }
    }
    stoer_wagner(w)
}

fn stoer_wagner(mut w: Vec<Vec<usize>>) -> usize {
    let n = w.len();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    while alive.len() > 1 {
        let m = alive.len();
        let mut used = vec![false; m];
        let mut key = vec![0usize; m];
        let mut prev = 0;
        let mut last = 0;
        for step in 0..m {
            let mut sel = usize::MAX;
            for i in 0..m {
                if !used[i] && (sel == usize::MAX || key[i] > key[sel]) {
                    sel = i;
                }
            }
            used[sel] = true;
            if step == m - 1 {
                best = best.min(key[sel]);
                last = sel;
            } else {
                prev = sel;
                for i in 0..m {
                    if !used[i] {
                        key[i] += w[alive[sel]][alive[i]];
                    }
                }
            }
        }
        let (a, b) = (alive[prev], alive[last]);
        for i in 0..n {
            w[a][i] += w[b][i];
            w[i][a] = w[a][i];
        }
        w[a][a] = 0;
        alive.remove(last);
    }
    best
}

/// True when the multigraph is disconnected or has a bridge.
pub fn connectivity_at_most_one(g: &PlaneGraph) -> bool {
    let n = g.vertex_count();
    if n < 2 {
        return false;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    // iterative DFS keyed by the dart used to enter each vertex
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    let start = g.darts_of(0).start;
    stack.push((0, usize::MAX, start));
    while let Some(&mut (v, via, ref mut next)) = stack.last_mut() {
        let end = g.darts_of(v).end;
        if *next < end {
            let d = *next;
            *next += 1;
            let p = g.partner(d);
            if via != usize::MAX && p == via {
                continue;
            }
            let u = g.vertex_of(p);
            if u == v {
                continue;
            }
            if disc[u] == usize::MAX {
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
                stack.push((u, d, g.darts_of(u).start));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    return true;
                }
            }
        }
    }
    disc.contains(&usize::MAX)
}
