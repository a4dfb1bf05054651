//! Signed graphs, switching, closed-walk signs and the girth vector.
//!
//! Vertices are `0..n` inside the library. The text format and every
//! human-readable report use `1..=n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Sign of an edge or of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }

    /// 0 for positive, 1 for negative.
    pub fn bit(self) -> usize {
        match self {
            Sign::Pos => 0,
            Sign::Neg => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Sign {
        if bit & 1 == 0 {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// A simple graph with a sign on every edge.
///
/// Values are immutable once built; the edge list is kept sorted by
/// `(min endpoint, max endpoint)` so two graphs compare equal exactly when
/// they have the same vertex count, edges and signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a graph from 0-based edges. Rejects loops, parallel edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x + 1, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a + 1));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].u == w[1].u && w[0].v == w[1].v {
                return Err(Error::ParallelEdge(w[0].u + 1, w[0].v + 1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for row in &mut adj {
            row.sort();
        }
        Ok(SignedGraph { n, edges: list, adj })
    }

    /// All-positive graph on the given edges.
    pub fn unsigned(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, Sign::Pos)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| row[i].1)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.sign.is_neg())
    }

    /// Same vertex count and same unsigned edge set.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.edges.len() == other.edges.len() && self.edges.iter().zip(&other.edges).all(|(a, b)| a.u == b.u && a.v == b.v)
    }

    /// Copy with every edge sign replaced.
    pub fn with_signs(&self, mut sign_of: impl FnMut(&Edge) -> Sign) -> SignedGraph {
        let edges: Vec<_> = self.edges.iter().map(|e| (e.u, e.v, sign_of(e))).collect();
        SignedGraph::new(self.n, edges).expect("edge set unchanged")
    }

    /// Induced subgraph on `vertices` (renumbered in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SignedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX).map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::new(vertices.len(), edges).expect("subgraph of a simple graph")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Proper 2-coloring (`false` side holds the smallest vertex of each
    /// component), or `None` when an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &(y, _) in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    /// BFS spanning forest: `(parent, sign of parent edge)` per vertex, roots
    /// have `None`. Roots are the smallest vertex of each component.
    pub fn spanning_forest(&self) -> Vec<Option<(usize, Sign)>> {
        let mut parent = vec![None; self.n];
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, sign) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, sign));
                        queue.push_back(y);
                    }
                }
            }
        }
        parent
    }

    /// Switching potential that makes the BFS spanning forest all-positive:
    /// `true` marks vertices to switch.
    fn forest_potential(&self) -> Vec<bool> {
        // BFS order guarantees parents are settled first.
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut pot = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            order.push(s);
            let mut i = order.len() - 1;
            while i < order.len() {
                let x = order[i];
                for &(y, sign) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        pot[y] = pot[x] ^ sign.is_neg();
                        order.push(y);
                    }
                }
                i += 1;
            }
        }
        pot
    }

    /// Cycle rank `m - n + c`.
    pub fn cycle_rank(&self) -> usize {
        self.m() + self.components().len() - self.n
    }

    /// Switch set after which the BFS spanning forest is all-positive.
    pub fn forest_normalizer(&self) -> SwitchSet {
        let pot = self.forest_potential();
        SwitchSet::from_sorted((0..self.n).filter(|&v| pot[v]).collect())
    }

    /// Edges outside the BFS spanning forest, in edge order.
    pub fn cotree_edges(&self) -> Vec<usize> {
        let parent = self.spanning_forest();
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| parent[e.v].map(|(p, _)| p) != Some(e.u) && parent[e.u].map(|(p, _)| p) != Some(e.v))
            .map(|(i, _)| i)
            .collect()
    }

    /// One representative per switching class: forest edges positive, the
    /// co-tree edges running through all `2^r` sign patterns.
    pub fn signature_classes(&self) -> Vec<SignedGraph> {
        let cotree = self.cotree_edges();
        assert!(cotree.len() < 31, "too many signature classes");
        (0u32..(1 << cotree.len()))
            .map(|bits| {
                let mut signs = vec![Sign::Pos; self.m()];
                for (j, &ei) in cotree.iter().enumerate() {
                    signs[ei] = Sign::from_bit((bits >> j) as usize);
                }
                let mut i = 0;
                self.with_signs(|_| {
                    i += 1;
                    signs[i - 1]
                })
            })
            .collect()
    }
}

impl fmt::Display for SignedGraph {
    /// Text format: `p signed <n> <m>` then `e <u> <v> <sign>` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p signed {} {}", self.n, self.m())?;
        for e in &self.edges {
            writeln!(f, "e {} {} {}", e.u + 1, e.v + 1, e.sign)?;
        }
        Ok(())
    }
}

impl FromStr for SignedGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
            let tok: Vec<&str> = body.split_whitespace().collect();
            match tok[0] {
                "p" => {
                    if header.is_some() {
                        return Err(err("duplicate header"));
                    }
                    if tok.len() != 4 || tok[1] != "signed" {
                        return Err(err("expected `p signed <n> <m>`"));
                    }
                    let n = tok[2].parse().map_err(|_| err("bad vertex count"))?;
                    let m = tok[3].parse().map_err(|_| err("bad edge count"))?;
                    header = Some((n, m));
                }
                "e" => {
                    let (n, _) = header.ok_or_else(|| err("edge before header"))?;
                    if tok.len() != 4 {
                        return Err(err("expected `e <u> <v> <+|->`"));
                    }
                    let u: usize = tok[1].parse().map_err(|_| err("bad vertex"))?;
                    let v: usize = tok[2].parse().map_err(|_| err("bad vertex"))?;
                    let sign = match tok[3] {
                        "+" => Sign::Pos,
                        "-" => Sign::Neg,
                        _ => return Err(err("sign must be + or -")),
                    };
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(Error::VertexOutOfRange { vertex: x, n });
                        }
                    }
                    edges.push((u - 1, v - 1, sign));
                }
                _ => return Err(err("unknown line type")),
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse { line: 0, msg: format!("header announces {m} edges, found {}", edges.len()) });
        }
        SignedGraph::new(n, edges)
    }
}

/// A set of vertices to switch at.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchSet(Vec<usize>);

impl SwitchSet {
    pub fn empty() -> Self {
        SwitchSet(Vec::new())
    }

    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        SwitchSet(set.into_iter().collect())
    }

    fn from_sorted(v: Vec<usize>) -> Self {
        SwitchSet(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut ind = vec![false; n];
        for &v in &self.0 {
            if v < n {
                ind[v] = true;
            }
        }
        ind
    }

    /// Symmetric difference; switching at `a` then `b` equals switching at
    /// `a.symmetric_difference(b)`.
    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        let a: BTreeSet<_> = self.0.iter().copied().collect();
        let b: BTreeSet<_> = other.0.iter().copied().collect();
        SwitchSet(a.symmetric_difference(&b).copied().collect())
    }
}

impl fmt::Display for SwitchSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Flip the sign of every edge with exactly one endpoint in `x`.
pub fn switch(g: &SignedGraph, x: &SwitchSet) -> Result<SignedGraph> {
    if let Some(&bad) = x.vertices().iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: bad + 1, n: g.n() });
    }
    let ind = x.indicator(g.n());
    Ok(g.with_signs(|e| if ind[e.u] != ind[e.v] { e.sign.flip() } else { e.sign }))
}

/// Product of edge signs along a closed walk given as a vertex sequence with
/// `walk[0] == walk[last]`.
pub fn walk_sign(g: &SignedGraph, walk: &[usize]) -> Result<Sign> {
    if walk.len() < 2 {
        return Err(Error::NotAWalk("fewer than two vertices".into()));
    }
    if walk[0] != walk[walk.len() - 1] {
        return Err(Error::NotAWalk("first and last vertex differ".into()));
    }
    let mut sign = Sign::Pos;
    for w in walk.windows(2) {
        if w[0] >= g.n() || w[1] >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w[0].max(w[1]) + 1, n: g.n() });
        }
        let s = g.sign(w[0], w[1]).ok_or_else(|| Error::NotAWalk(format!("{} and {} are not adjacent", w[0] + 1, w[1] + 1)))?;
        sign = sign * s;
    }
    Ok(sign)
}

/// Witness `X` with `switch(g1, X) == g2`, or `None` when the two signatures
/// are not switching equivalent.
///
/// Each component is normalized so its BFS tree is all-positive; the graphs
/// are equivalent exactly when the normalized co-tree signs agree.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<SwitchSet>> {
    if !g1.same_underlying(g2) {
        return Err(Error::UnderlyingGraphsDiffer);
    }
    let p1 = g1.forest_potential();
    let p2 = g2.forest_potential();
    for (a, b) in g1.edges().iter().zip(g2.edges()) {
        let na = a.sign.is_neg() ^ p1[a.u] ^ p1[a.v];
        let nb = b.sign.is_neg() ^ p2[b.u] ^ p2[b.v];
        if na != nb {
            return Ok(None);
        }
    }
    Ok(Some(SwitchSet::from_sorted((0..g1.n()).filter(|&v| p1[v] != p2[v]).collect())))
}

/// Length of a shortest closed walk of one type, or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// `g_ij` for the four walk types, indexed `[00, 01, 10, 11]` where the
/// first digit is the sign (0 positive) and the second the parity (0 even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GirthVector(pub [Girth; 4]);

impl GirthVector {
    pub fn g00(&self) -> Girth {
        self.0[0]
    }
    pub fn g01(&self) -> Girth {
        self.0[1]
    }
    pub fn g10(&self) -> Girth {
        self.0[2]
    }
    pub fn g11(&self) -> Girth {
        self.0[3]
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &GirthVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for GirthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// Shortest nontrivial closed walk of each type, by BFS over
/// `(vertex, parity, sign)` states from every start vertex.
pub fn girth_vector(g: &SignedGraph) -> GirthVector {
    let n = g.n();
    let mut best = [Girth::Infinite; 4];
    if g.m() > 0 {
        best[0] = Girth::Finite(2);
    }
    let state = |v: usize, parity: usize, sign: usize| (v * 2 + parity) * 2 + sign;
    let mut dist = vec![usize::MAX; n * 4];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        queue.clear();
        dist[state(s, 0, 0)] = 0;
        queue.push_back((s, 0usize, 0usize));
        while let Some((x, p, sg)) = queue.pop_front() {
            let d = dist[state(x, p, sg)];
            for &(y, es) in g.neighbors(x) {
                let st = state(y, p ^ 1, sg ^ es.bit());
                if dist[st] == usize::MAX {
                    dist[st] = d + 1;
                    queue.push_back((y, p ^ 1, sg ^ es.bit()));
                }
            }
        }
        // index = sign * 2 + parity
        for (sign, parity) in [(0, 1), (1, 0), (1, 1)] {
            let d = dist[state(s, parity, sign)];
            if d != usize::MAX {
                let slot = sign * 2 + parity;
                best[slot] = best[slot].min(Girth::Finite(d));
            }
        }
    }
    GirthVector(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(SignedGraph::unsigned(2, [(0, 0)]), Err(Error::Loop(1)));
        assert_eq!(SignedGraph::unsigned(2, [(0, 1), (1, 0)]), Err(Error::ParallelEdge(1, 2)));
        assert!(matches!(SignedGraph::unsigned(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn parse_and_print() {
        let text = "# a comment\np signed 3 2\ne 3 1 -\n# mid\ne 1 2 +\n";
        let g: SignedGraph = text.parse().unwrap();
        assert_eq!(g.to_string(), "p signed 3 2\ne 1 2 +\ne 1 3 -\n");
        assert_eq!(g.sign(2, 0), Some(Sign::Neg));
        assert!("p signed 2 1\ne 1 2 *\n".parse::<SignedGraph>().is_err());
        assert!("p signed 2 2\ne 1 2 +\n".parse::<SignedGraph>().is_err());
        assert!("e 1 2 +\n".parse::<SignedGraph>().is_err());
        assert!(matches!("p signed 2 1\ne 1 3 +\n".parse::<SignedGraph>(), Err(Error::VertexOutOfRange { vertex: 3, n: 2 })));
    }

    #[test]
    fn switching_identity_cases() {
        let g = triangle([Sign::Neg, Sign::Pos, Sign::Pos]);
        assert_eq!(switch(&g, &SwitchSet::empty()).unwrap(), g);
        assert_eq!(switch(&g, &SwitchSet::new(0..3)).unwrap(), g);
        let once = switch(&g, &SwitchSet::new([1])).unwrap();
        assert_eq!(once.sign(0, 1), Some(Sign::Pos));
        assert_eq!(once.sign(1, 2), Some(Sign::Neg));
        assert_eq!(once.sign(0, 2), Some(Sign::Pos));
        assert!(switch(&g, &SwitchSet::new([7])).is_err());
    }

    #[test]
    fn walk_signs() {
        let g = triangle([Sign::Neg, Sign::Pos, Sign::Pos]);
        assert_eq!(walk_sign(&g, &[0, 1, 0]).unwrap(), Sign::Pos);
        assert_eq!(walk_sign(&g, &[0, 1, 2, 0]).unwrap(), Sign::Neg);
        let pos = triangle([Sign::Pos; 3]);
        assert_eq!(walk_sign(&pos, &[0, 1, 2, 0]).unwrap(), Sign::Pos);
        assert!(walk_sign(&g, &[0, 1, 2]).is_err());
        let path = SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap();
        assert!(walk_sign(&path, &[0, 2, 0]).is_err());
    }

    #[test]
    fn switching_equivalence_on_triangles() {
        let pos = triangle([Sign::Pos; 3]);
        let one_neg = triangle([Sign::Neg, Sign::Pos, Sign::Pos]);
        let two_neg = triangle([Sign::Neg, Sign::Neg, Sign::Pos]);
        assert_eq!(switching_equivalent(&pos, &one_neg).unwrap(), None);
        let x = switching_equivalent(&pos, &two_neg).unwrap().unwrap();
        assert_eq!(switch(&pos, &x).unwrap(), two_neg);
        let other = SignedGraph::unsigned(3, [(0, 1)]).unwrap();
        assert_eq!(switching_equivalent(&pos, &other), Err(Error::UnderlyingGraphsDiffer));
    }

    #[test]
    fn girth_of_single_edge_and_triangles() {
        let edge = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        use Girth::*;
        assert_eq!(girth_vector(&edge).0, [Finite(2), Infinite, Infinite, Infinite]);
        let neg = triangle([Sign::Neg, Sign::Pos, Sign::Pos]);
        // In a cycle every closed walk winds an integral number of times, so
        // parity and sign are tied together.
        assert_eq!(girth_vector(&neg).0, [Finite(2), Infinite, Infinite, Finite(3)]);
        let pos = triangle([Sign::Pos; 3]);
        assert_eq!(girth_vector(&pos).0, [Finite(2), Finite(3), Infinite, Infinite]);
        let empty = SignedGraph::unsigned(3, []).unwrap();
        assert_eq!(girth_vector(&empty).0, [Infinite; 4]);
    }

    #[test]
    fn signature_classes_cover_cycle_space() {
        let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.cycle_rank(), 3);
        let classes = k4.signature_classes();
        assert_eq!(classes.len(), 8);
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                assert_eq!(switching_equivalent(a, b).unwrap(), None);
            }
        }
    }

    #[test]
    fn bipartition_and_trees() {
        let c4 = SignedGraph::unsigned(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bipartition(), Some(vec![false, true, false, true]));
        assert!(triangle([Sign::Pos; 3]).bipartition().is_none());
        assert!(!c4.is_tree());
        assert!(SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap().is_tree());
    }
}
