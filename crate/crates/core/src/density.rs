//! Exact maximum average degree via densest subgraph and max-flow.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// `mad` as an exact fraction with a subgraph attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityCertificate {
    pub mad: Ratio<i64>,
    /// Sorted vertex set whose induced subgraph has average degree `mad`.
    pub witness: Vec<usize>,
}

/// Average degree `2|E(S)| / |S|` of the subgraph induced by `s`.
pub fn average_degree(g: &SignedGraph, s: &[usize]) -> Ratio<i64> {
    if s.is_empty() {
        return Ratio::from_integer(0);
    }
    let mut inside = vec![false; g.n()];
    for &v in s {
        inside[v] = true;
    }
    let e = g.edges().iter().filter(|e| inside[e.u] && inside[e.v]).count();
    Ratio::new(2 * e as i64, s.len() as i64)
}

struct FlowEdge {
    to: usize,
    cap: i64,
}

/// Dinic's algorithm on an explicit residual graph.
struct Dinic {
    adj: Vec<Vec<usize>>,
    edges: Vec<FlowEdge>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { adj: vec![Vec::new(); n], edges: Vec::new(), level: vec![0; n], next: vec![0; n] }
    }

    fn add_edge(&mut self, a: usize, b: usize, cap: i64) {
        self.adj[a].push(self.edges.len());
        self.edges.push(FlowEdge { to: b, cap });
        self.adj[b].push(self.edges.len());
        self.edges.push(FlowEdge { to: a, cap: 0 });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &ei in &self.adj[x] {
                let e = &self.edges[ei];
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[x] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, x: usize, t: usize, pushed: i64) -> i64 {
        if x == t {
            return pushed;
        }
        while self.next[x] < self.adj[x].len() {
            let ei = self.adj[x][self.next[x]];
            let (to, cap) = (self.edges[ei].to, self.edges[ei].cap);
            if cap > 0 && self.level[to] == self.level[x] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.edges[ei].cap -= got;
                    self.edges[ei ^ 1].cap += got;
                    return got;
                }
            }
            self.next[x] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|p| *p = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual graph.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &ei in &self.adj[x] {
                let e = &self.edges[ei];
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    stack.push(e.to);
                }
            }
        }
        seen
    }
}

/// A vertex set `S` with `|E(S)| / |S| > lambda`, if one exists.
///
/// Source feeds every edge node with capacity `q`, edge nodes feed their
/// endpoints without limit, vertices drain to the sink with capacity `p`.
/// Then `max_S (q|E(S)| - p|S|) = q|E| - maxflow` and the source side of a
/// minimum cut attains it.
fn denser_than(g: &SignedGraph, lambda: Ratio<i64>) -> Option<Vec<usize>> {
    let (p, q) = (*lambda.numer(), *lambda.denom());
    let n = g.n();
    let m = g.m();
    let source = n + m;
    let sink = source + 1;
    let mut net = Dinic::new(n + m + 2);
    let inf = i64::MAX / 4;
    for (i, e) in g.edges().iter().enumerate() {
        net.add_edge(source, n + i, q);
        net.add_edge(n + i, e.u, inf);
        net.add_edge(n + i, e.v, inf);
    }
    for v in 0..n {
        net.add_edge(v, sink, p);
    }
    let flow = net.max_flow(source, sink);
    if q * m as i64 - flow > 0 {
        let side = net.source_side(source);
        Some((0..n).filter(|&v| side[v]).collect())
    } else {
        None
    }
}

/// Maximum average degree over all subgraphs, exactly, with a witness.
/// Signs are ignored.
pub fn mad(g: &SignedGraph) -> Result<DensityCertificate> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    // every density |E(S)|/|S| is one of these
    let mut cands: Vec<Ratio<i64>> = (1..=n).flat_map(|v| (0..=m.min(v * (v - 1) / 2)).map(move |e| Ratio::new(e, v))).collect();
    cands.sort();
    cands.dedup();
    // first candidate where no strictly denser subgraph exists
    let (mut lo, mut hi) = (0usize, cands.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if denser_than(g, cands[mid]).is_some() {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let rho = cands[lo];
    let witness = if lo == 0 { vec![0] } else { denser_than(g, cands[lo - 1]).expect("the previous candidate is beaten") };
    let cert = DensityCertificate { mad: rho * 2, witness };
    debug_assert_eq!(average_degree(g, &cert.witness), cert.mad);
    Ok(cert)
}

/// Whether `mad(g) < bound`; the certificate always carries the densest
/// subgraph, which violates the bound when the answer is `false`.
pub fn mad_less_than(g: &SignedGraph, bound: Ratio<i64>) -> Result<(bool, DensityCertificate)> {
    if bound <= Ratio::from_integer(0) {
        return Err(Error::InvalidParameter("bound must be positive".into()));
    }
    let cert = mad(g)?;
    Ok((cert.mad < bound, cert))
}
