//! Small-graph enumeration up to isomorphism, cycle enumeration, and seeded
//! random instance generators.

use std::collections::HashSet;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::density::mad;
use crate::graph::{Sign, SignedGraph};

/// Largest order for which canonical codes fit in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

fn adjacency_masks(g: &SignedGraph) -> Vec<u16> {
    let mut adj = vec![0u16; g.n()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

/// Iterated degree refinement; colors depend only on the isomorphism type.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| color[u]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

struct Canon<'a> {
    adj: &'a [u16],
    /// Vertices in refined color order; positions may only be filled from
    /// the matching cell.
    cell_of_position: Vec<usize>,
    color: Vec<usize>,
    bits: u32,
    best: u64,
    placed: Vec<usize>,
    used: u16,
}

impl Canon<'_> {
    fn go(&mut self, code: u64, bits_used: u32) {
        let n = self.adj.len();
        let j = self.placed.len();
        if j == n {
            self.best = self.best.min(code);
            return;
        }
        let rest = self.bits - bits_used - j as u32;
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.color[v] != self.cell_of_position[j] {
                continue;
            }
            let mut c = code;
            for &u in &self.placed {
                c = c << 1 | (self.adj[v] >> u & 1) as u64;
            }
            // prefix of the best code of the same length
            if self.best != u64::MAX && c > self.best >> rest {
                continue;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.go(c, bits_used + j as u32);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// Canonical code of the underlying graph: equal iff isomorphic.
pub fn canonical_code(g: &SignedGraph) -> u64 {
    assert!(g.n() <= MAX_CANON_ORDER, "canonical codes are limited to {MAX_CANON_ORDER} vertices");
    let adj = adjacency_masks(g);
    let n = adj.len();
    let color = refine(&adj);
    let mut cell_of_position = color.clone();
    cell_of_position.sort_unstable();
    let mut c = Canon { adj: &adj, cell_of_position, color, bits: (n * n.saturating_sub(1) / 2) as u32, best: u64::MAX, placed: Vec::new(), used: 0 };
    c.go(0, 0);
    // n(n-1)/2 ≤ 55 bits, so the order fits above them
    (n as u64) << 56 | c.best
}

/// All graphs on `n` vertices up to isomorphism, as all-positive signed
/// graphs, in a deterministic order.
pub fn graphs_of_order(n: usize) -> Vec<SignedGraph> {
    let mut layer = vec![SignedGraph::unsigned(0, []).unwrap()];
    for order in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let v = order - 1;
            for mask in 0u32..1 << v {
                let edges = g.edges().iter().map(|e| (e.u, e.v)).chain((0..v).filter(|u| mask >> u & 1 == 1).map(|u| (u, v)));
                let h = SignedGraph::unsigned(order, edges).unwrap();
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Connected graphs on `n ≥ 1` vertices up to isomorphism.
pub fn connected_graphs_of_order(n: usize) -> Vec<SignedGraph> {
    graphs_of_order(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Every cycle of `g` as a bitmask over edge indices (at most 64 edges).
pub fn cycle_edge_masks(g: &SignedGraph) -> Vec<u64> {
    assert!(g.m() <= 64, "cycle masks need at most 64 edges");
    let mut index = std::collections::HashMap::new();
    for (i, e) in g.edges().iter().enumerate() {
        index.insert((e.u, e.v), i);
    }
    let eid = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut out = Vec::new();
    // rooted at the smallest vertex, each direction counted once
    for s in 0..g.n() {
        let mut path = vec![s];
        let mut on = vec![false; g.n()];
        on[s] = true;
        fn walk(g: &SignedGraph, s: usize, path: &mut Vec<usize>, on: &mut [bool], mask: u64, eid: &dyn Fn(usize, usize) -> usize, out: &mut Vec<u64>) {
            let last = *path.last().unwrap();
            for &(w, _) in g.neighbors(last) {
                if w == s && path.len() >= 3 && path[1] < last {
                    out.push(mask | 1 << eid(last, s));
                }
                if w > s && !on[w] {
                    on[w] = true;
                    path.push(w);
                    walk(g, s, path, on, mask | 1 << eid(last, w), eid, out);
                    path.pop();
                    on[w] = false;
                }
            }
        }
        walk(g, s, &mut path, &mut on, 0, &eid, &mut out);
    }
    out
}

/// Bitmask of negative edges, matching [`cycle_edge_masks`].
pub fn negative_mask(g: &SignedGraph) -> u64 {
    g.edges().iter().enumerate().filter(|(_, e)| e.sign.is_neg()).fold(0, |m, (i, _)| m | 1 << i)
}

pub fn random_signature<R: Rng>(g: &SignedGraph, rng: &mut R) -> SignedGraph {
    g.with_signs(|_| if rng.gen_bool(0.5) { Sign::Neg } else { Sign::Pos })
}

/// `G(n, p)` with independent random signs.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, if rng.gen_bool(0.5) { Sign::Neg } else { Sign::Pos }));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

fn distances_from(n: usize, adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Connected graph on `n` vertices with girth at least `girth` and
/// `mad ≤ bound`: a random tree, then random chords that keep both
/// properties until `attempts` consecutive proposals fail. All positive.
pub fn sparse_graph<R: Rng>(n: usize, girth: usize, bound: Ratio<i64>, attempts: usize, rng: &mut R) -> SignedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut failures = 0;
    while failures < attempts && n >= 2 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        // a new edge closes cycles of length dist(u, v) + 1
        if u == v || distances_from(n, &adj, u)[v] + 1 < girth {
            failures += 1;
            continue;
        }
        edges.push((u, v));
        let g = SignedGraph::unsigned(n, edges.iter().copied()).unwrap();
        if mad(&g).unwrap().mad > bound {
            edges.pop();
            failures += 1;
            continue;
        }
        adj[u].push(v);
        adj[v].push(u);
        failures = 0;
    }
    SignedGraph::unsigned(n, edges).unwrap()
}

/// Underlying girth (shortest cycle), `None` for forests.
pub fn girth(g: &SignedGraph) -> Option<usize> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect()).collect();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_graph_counts() {
        let all: Vec<usize> = (1..=6).map(|n| graphs_of_order(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs_of_order(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_graph(7, 0.4, &mut rng);
            let mut perm: Vec<usize> = (0..7).collect();
            perm.shuffle(&mut rng);
            let h = SignedGraph::new(7, g.edges().iter().map(|e| (perm[e.u], perm[e.v], e.sign))).unwrap();
            assert_eq!(canonical_code(&g), canonical_code(&h));
        }
        let p4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&p4), canonical_code(&star));
        let empty3 = SignedGraph::unsigned(3, []).unwrap();
        let empty4 = SignedGraph::unsigned(4, []).unwrap();
        assert_ne!(canonical_code(&empty3), canonical_code(&empty4));
    }

    #[test]
    fn cycle_counts() {
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cycle_edge_masks(&k4).len(), 7);
        let k5 = SignedGraph::unsigned(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(cycle_edge_masks(&k5).len(), 37);
        let masks = cycle_edge_masks(&k5);
        assert_eq!(masks.iter().collect::<HashSet<_>>().len(), masks.len());
    }

    #[test]
    fn sparse_graphs_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let bound = Ratio::new(28, 11);
        for _ in 0..5 {
            let g = sparse_graph(20, 7, bound, 200, &mut rng);
            assert!(g.is_connected());
            assert!(girth(&g).is_none_or(|l| l >= 7));
            assert!(mad(&g).unwrap().mad <= bound);
        }
        assert_eq!(girth(&SignedGraph::unsigned(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()), Some(5));
    }
}
