//! Gadget graphs and the tightness examples.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::targets::builtin_target;

/// `S(G)`: for every edge `uv` two new vertices `x_uv`, `y_uv` joined to
/// both `u` and `v`; the original edges are dropped. In each 4-cycle
/// `u x_uv v y_uv` the edge `u x_uv` (with `u < v`) is the negative one.
///
/// Original vertices keep their numbers; the `e`-th edge (in sorted order)
/// gets `x = n + 2e` and `y = n + 2e + 1`. Input signs are ignored.
pub fn s_of(g: &SignedGraph) -> SignedGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(4 * g.m());
    for (i, e) in g.edges().iter().enumerate() {
        let x = n + 2 * i;
        let y = x + 1;
        edges.push((e.u, x, Sign::Neg));
        edges.push((e.v, x, Sign::Pos));
        edges.push((e.u, y, Sign::Pos));
        edges.push((e.v, y, Sign::Pos));
    }
    SignedGraph::new(n + 2 * g.m(), edges).expect("S(G) is simple")
}

/// Five vertices `u, v, w, x, y` (1..=5): positive `yw, wv, vu, uw, vx, xu`,
/// negative `xy`. Average degree 14/5 and no homomorphism to `(K_6, M)`.
pub fn fig6() -> SignedGraph {
    let (u, v, w, x, y) = (0, 1, 2, 3, 4);
    SignedGraph::new(5, [(y, w, Sign::Pos), (w, v, Sign::Pos), (v, u, Sign::Pos), (u, w, Sign::Pos), (v, x, Sign::Pos), (x, u, Sign::Pos), (x, y, Sign::Neg)])
        .expect("fixed graph")
}

/// The cube-like bipartite graph with outer cycle `u1..u4` (1..=4), inner
/// cycle `v1..v4` (5..=8) and spokes `u_i v_i`; negative edges `u4u1`,
/// `v3v4`, `u2v2`. Every same-part pair lies on a negative 4-cycle.
pub fn fig7() -> SignedGraph {
    let u = |i: usize| i - 1;
    let v = |i: usize| i + 3;
    let mut edges = Vec::new();
    for (a, b) in [(1, 2), (2, 3), (3, 4)] {
        edges.push((u(a), u(b), Sign::Pos));
    }
    edges.push((u(4), u(1), Sign::Neg));
    for (a, b) in [(1, 2), (2, 3), (4, 1)] {
        edges.push((v(a), v(b), Sign::Pos));
    }
    edges.push((v(3), v(4), Sign::Neg));
    for i in [1, 3, 4] {
        edges.push((u(i), v(i), Sign::Pos));
    }
    edges.push((u(2), v(2), Sign::Neg));
    SignedGraph::new(8, edges).expect("fixed graph")
}

/// Negative `l`-cycle `c_1..c_l` (vertices `0..l`) with a positive triangle
/// on every edge: apex `a_i` (vertex `l + i - 1`) is joined to `c_i` and
/// `c_{i+1}`. The base edge `c_l c_1` and the apex edge `a_l c_l` are the
/// negative ones.
pub fn g_ell(l: usize) -> Result<SignedGraph> {
    if l < 3 {
        return Err(Error::InvalidParameter("G_l needs l >= 3".into()));
    }
    let mut edges = Vec::with_capacity(3 * l);
    for i in 0..l {
        let next = (i + 1) % l;
        let base = if i == l - 1 { Sign::Neg } else { Sign::Pos };
        edges.push((i, next, base));
        let apex = l + i;
        edges.push((apex, i, base));
        edges.push((apex, next, Sign::Pos));
    }
    SignedGraph::new(2 * l, edges)
}

pub fn complete(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
}

pub fn cycle(n: usize) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
    }
    SignedGraph::unsigned(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

fn parse_count(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::InvalidParameter(format!("bad parameter `{s}`")))
}

/// Built-in guest graphs: `fig6`, `fig7`, `gell:<l>`, `s:<name>`, `k<n>`,
/// `c<n>`, `p<n>`, and the graph of any built-in target name.
pub fn builtin_graph(name: &str) -> Option<Result<SignedGraph>> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "fig6" => return Some(Ok(fig6())),
        "fig7" => return Some(Ok(fig7())),
        _ => {}
    }
    if let Some(l) = lower.strip_prefix("gell:") {
        return Some(parse_count(l).and_then(g_ell));
    }
    if let Some(rest) = name.strip_prefix("s:").or_else(|| name.strip_prefix("S:")) {
        return Some(resolve_graph(rest).map(|g| s_of(&g)));
    }
    if let Some(t) = builtin_target(&lower) {
        return Some(t.map(|t| t.graph().clone()));
    }
    let (head, digits) = lower.split_at(1.min(lower.len()));
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n = parse_count(digits);
    match head {
        "k" => Some(n.map(complete)),
        "c" => Some(n.and_then(cycle)),
        "p" => Some(n.map(path)),
        _ => None,
    }
}

/// Built-in name first, then a file in the text format.
pub fn resolve_graph(name: &str) -> Result<SignedGraph> {
    if let Some(g) = builtin_graph(name) {
        return g;
    }
    let path = Path::new(name);
    if path.exists() {
        return std::fs::read_to_string(path)?.parse();
    }
    Err(Error::Unknown(format!("graph `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::walk_sign;

    #[test]
    fn s_of_small_graphs() {
        let k2 = s_of(&complete(2));
        assert_eq!((k2.n(), k2.m()), (4, 4));
        assert_eq!(walk_sign(&k2, &[0, 2, 1, 3, 0]).unwrap(), Sign::Neg);
        let k3 = complete(3);
        let s = s_of(&k3);
        assert_eq!((s.n(), s.m()), (9, 12));
        assert!(s.bipartition().is_some());
        for (i, e) in k3.edges().iter().enumerate() {
            let (x, y) = (3 + 2 * i, 4 + 2 * i);
            assert_eq!(walk_sign(&s, &[e.u, x, e.v, y, e.u]).unwrap(), Sign::Neg);
        }
    }

    #[test]
    fn fig6_shape() {
        let g = fig6();
        let degrees: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![3, 3, 3, 3, 2]);
        assert_eq!(g.m(), 7);
    }

    #[test]
    fn fig7_shape() {
        let g = fig7();
        assert_eq!(g.m(), 12);
        assert!(g.bipartition().is_some());
        assert_eq!(g.negative_edges().count(), 3);
    }

    #[test]
    fn g_ell_triangles() {
        let g = g_ell(3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        for i in 0..3 {
            let next = (i + 1) % 3;
            assert_eq!(walk_sign(&g, &[i, 3 + i, next, i]).unwrap(), Sign::Pos);
        }
        assert_eq!(walk_sign(&g, &[0, 1, 2, 0]).unwrap(), Sign::Neg);
        assert!(g_ell(2).is_err());
        let g5 = g_ell(5).unwrap();
        assert_eq!((g5.n(), g5.m()), (10, 15));
    }

    #[test]
    fn names_resolve() {
        assert_eq!(resolve_graph("k4").unwrap().m(), 6);
        assert_eq!(resolve_graph("c5").unwrap().m(), 5);
        assert_eq!(resolve_graph("p3").unwrap().m(), 2);
        assert_eq!(resolve_graph("s:k3").unwrap().n(), 9);
        assert_eq!(resolve_graph("gell:4").unwrap().n(), 8);
        assert_eq!(resolve_graph("k44m").unwrap().m(), 16);
        assert!(resolve_graph("definitely-not-a-file").is_err());
    }
}
