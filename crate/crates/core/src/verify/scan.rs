//! Degree-based structures of a graph: `k_i` labels, the configurations
//! excluded from a minimum counterexample, components of the subgraph on
//! 2- and 3-vertices, and poor paths. Signs play no role.

use std::fmt::{self, Write as _};

use crate::graph::SignedGraph;

/// A `d`-vertex with `i` neighbors of degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub vertex: usize,
    pub d: usize,
    pub i: usize,
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.d, self.i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    /// A single vertex of degree `d` with `i` 2-neighbors.
    Labeled { d: usize, i: usize },
    /// `[u, v]`: a 3_1-vertex next to a 4_3-vertex.
    ThreeOneByFourThree,
    /// `[u, v, w]`: adjacent 3_1-vertices with the common 2-neighbor `w`.
    ThreeOnesSharingTwo,
    /// `[w, u, v]`: a triangle on the 3_0-vertex `w` and 3_1-vertices `u`, `v`.
    ThreeZeroTriangle,
    /// `[a, v, b]`: the 3_1-vertex `v` with 3_1-neighbors `a`, `b`.
    ThreeOneWithTwoThreeOnes,
    /// `[u, x, y, w]`: a 3_0-vertex `u` with only 3_1-neighbors, two of which
    /// (`x`, `y`) share the neighbor `w != u` of degree below 4.
    ThreeZeroWeakCommonNeighbor,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Labeled { d, i } => write!(f, "{d}_{i}"),
            Structure::ThreeOneByFourThree => f.write_str("3_1-next-to-4_3"),
            Structure::ThreeOnesSharingTwo => f.write_str("adjacent-3_1-common-2-neighbor"),
            Structure::ThreeZeroTriangle => f.write_str("3_0-3_1-3_1-triangle"),
            Structure::ThreeOneWithTwoThreeOnes => f.write_str("3_1-with-two-3_1-neighbors"),
            Structure::ThreeZeroWeakCommonNeighbor => f.write_str("3_0-common-neighbor-below-4"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Detection {
    pub structure: Structure,
    pub vertices: Vec<usize>,
}

/// A component of the subgraph induced by the 2- and 3-vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowComponent {
    pub vertices: Vec<usize>,
    /// 3_0-vertices of the graph in the component.
    pub n0: usize,
    /// 3_1-vertices of the graph with degree 3 in the component.
    pub n1: usize,
}

impl LowComponent {
    pub fn n0_at_least_n1(&self) -> bool {
        self.n0 >= self.n1
    }
}

/// How a poor path with `k = 0` looks from its single vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingleShape {
    /// All three neighbors are 3_1 and one of them has another 3_1-neighbor.
    TypeOneAndTwo,
    /// Two 3_1-neighbors, each with another 3_1-neighbor.
    TypeTwoBothWays,
    /// Poorest, but neither of the above.
    Other,
}

/// A poor path `v_1 ... v_2k+1`; `ends` are the types of `v_1` and
/// `v_2k+1` seen from the path (0 when neither type applies from there).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoorPath {
    pub vertices: Vec<usize>,
    pub ends: (u8, u8),
    pub single: Option<SingleShape>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub profiles: Vec<DegreeProfile>,
    /// Configurations excluded when mapping to `(K_6, M)`.
    pub k6: Vec<Detection>,
    /// Configurations excluded when mapping to `(K_8, M)`.
    pub k8: Vec<Detection>,
    pub components: Vec<LowComponent>,
    pub poor_paths: Vec<PoorPath>,
}

struct Labels<'a> {
    g: &'a SignedGraph,
    p: Vec<DegreeProfile>,
}

impl<'a> Labels<'a> {
    fn new(g: &'a SignedGraph) -> Self {
        let p = (0..g.n()).map(|v| DegreeProfile { vertex: v, d: g.degree(v), i: g.neighbors(v).iter().filter(|&&(w, _)| g.degree(w) == 2).count() }).collect();
        Labels { g, p }
    }

    fn is(&self, v: usize, d: usize, i: usize) -> bool {
        self.p[v].d == d && self.p[v].i == i
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        self.g.neighbors(v).iter().map(|&(w, _)| w)
    }

    fn three_one_nbrs(&self, v: usize) -> Vec<usize> {
        self.nbrs(v).filter(|&w| self.is(w, 3, 1)).collect()
    }

    /// A 3_0-vertex with only 3_1-neighbors, or with two 3_1-neighbors one
    /// of which has another 3_1-neighbor.
    fn poorest(&self, v: usize) -> bool {
        if !self.is(v, 3, 0) {
            return false;
        }
        let s = self.three_one_nbrs(v);
        s.len() == 3 || (s.len() == 2 && s.iter().any(|&x| self.has_other_three_one(x, v)))
    }

    fn has_other_three_one(&self, x: usize, besides: usize) -> bool {
        self.nbrs(x).any(|y| y != besides && self.is(y, 3, 1))
    }

    /// Type of the end `v` of a poor path whose path neighbor is `inner`.
    fn end_type(&self, v: usize, inner: Option<usize>) -> u8 {
        let others: Vec<usize> = self.nbrs(v).filter(|&w| Some(w) != inner).collect();
        let ones: Vec<usize> = others.iter().copied().filter(|&w| self.is(w, 3, 1)).collect();
        if inner.is_some() && ones.len() == 2 {
            1
        } else if ones.iter().any(|&x| self.has_other_three_one(x, v)) {
            2
        } else {
            0
        }
    }
}

pub fn scan_structures(g: &SignedGraph) -> StructureReport {
    let lab = Labels::new(g);
    let n = g.n();
    let mut k6 = Vec::new();
    let mut k8 = Vec::new();
    for v in 0..n {
        let p = lab.p[v];
        if matches!((p.d, p.i), (2, 1) | (3, 2) | (4, 4) | (5, 5)) {
            k6.push(Detection { structure: Structure::Labeled { d: p.d, i: p.i }, vertices: vec![v] });
        }
        if p.d == 1 || matches!((p.d, p.i), (2, 1) | (3, 1) | (4, 3) | (5, 5)) {
            k8.push(Detection { structure: Structure::Labeled { d: p.d, i: p.i }, vertices: vec![v] });
        }
    }
    for e in g.edges() {
        for (u, v) in [(e.u, e.v), (e.v, e.u)] {
            if lab.is(u, 3, 1) && lab.is(v, 4, 3) {
                k6.push(Detection { structure: Structure::ThreeOneByFourThree, vertices: vec![u, v] });
            }
        }
        let (u, v) = (e.u.min(e.v), e.u.max(e.v));
        if lab.is(u, 3, 1) && lab.is(v, 3, 1) {
            for w in lab.nbrs(u).filter(|&w| g.degree(w) == 2 && g.adjacent(w, v)) {
                k6.push(Detection { structure: Structure::ThreeOnesSharingTwo, vertices: vec![u, v, w] });
            }
        }
    }
    for w in (0..n).filter(|&w| lab.is(w, 3, 0)) {
        let ones = lab.three_one_nbrs(w);
        for (a, &u) in ones.iter().enumerate() {
            for &v in &ones[a + 1..] {
                if g.adjacent(u, v) {
                    k6.push(Detection { structure: Structure::ThreeZeroTriangle, vertices: vec![w, u.min(v), u.max(v)] });
                }
            }
        }
    }
    for v in (0..n).filter(|&v| lab.is(v, 3, 1)) {
        let ones = lab.three_one_nbrs(v);
        for (i, &a) in ones.iter().enumerate() {
            for &b in &ones[i + 1..] {
                k6.push(Detection { structure: Structure::ThreeOneWithTwoThreeOnes, vertices: vec![a.min(b), v, a.max(b)] });
            }
        }
    }
    for u in (0..n).filter(|&u| lab.is(u, 3, 0)) {
        let ones = lab.three_one_nbrs(u);
        if ones.len() != 3 {
            continue;
        }
        for (i, &x) in ones.iter().enumerate() {
            for &y in &ones[i + 1..] {
                let (x, y) = (x.min(y), x.max(y));
                for w in lab.nbrs(x).filter(|&w| w != u && g.degree(w) < 4 && g.adjacent(w, y)) {
                    k6.push(Detection { structure: Structure::ThreeZeroWeakCommonNeighbor, vertices: vec![u, x, y, w] });
                }
            }
        }
    }
    k6.sort();
    k8.sort();
    let components = low_components(&lab);
    let poor_paths = poor_paths(&lab);
    StructureReport { profiles: lab.p, k6, k8, components, poor_paths }
}

fn low_components(lab: &Labels<'_>) -> Vec<LowComponent> {
    let g = lab.g;
    let low: Vec<usize> = (0..g.n()).filter(|&v| matches!(g.degree(v), 2 | 3)).collect();
    let h = g.induced(&low);
    h.components()
        .into_iter()
        .map(|comp| {
            let n0 = comp.iter().filter(|&&x| lab.is(low[x], 3, 0)).count();
            let n1 = comp.iter().filter(|&&x| lab.is(low[x], 3, 1) && h.degree(x) == 3).count();
            LowComponent { vertices: comp.iter().map(|&x| low[x]).collect(), n0, n1 }
        })
        .collect()
}

fn poor_paths(lab: &Labels<'_>) -> Vec<PoorPath> {
    let n = lab.g.n();
    let mut out = Vec::new();
    for v in (0..n).filter(|&v| lab.poorest(v)) {
        let ones = lab.three_one_nbrs(v);
        let extended = ones.iter().filter(|&&x| lab.has_other_three_one(x, v)).count();
        let single = if ones.len() == 3 && extended >= 1 {
            SingleShape::TypeOneAndTwo
        } else if extended >= 2 {
            SingleShape::TypeTwoBothWays
        } else {
            SingleShape::Other
        };
        out.push(PoorPath { vertices: vec![v], ends: (lab.end_type(v, None), lab.end_type(v, None)), single: Some(single) });
        let mut path = vec![v];
        let mut on = vec![false; n];
        on[v] = true;
        extend(lab, &mut path, &mut on, &mut out);
    }
    out
}

/// Depth-first over alternating 3_0/3_1 simple paths from `path[0]`;
/// records each path ending at a poorest vertex with a larger index than
/// its start, so each path appears once.
fn extend(lab: &Labels<'_>, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<PoorPath>) {
    let last = *path.last().expect("nonempty");
    let want_one = path.len() % 2 == 1;
    let nexts: Vec<usize> = lab.nbrs(last).filter(|&w| !on[w] && if want_one { lab.is(w, 3, 1) } else { lab.is(w, 3, 0) }).collect();
    for w in nexts {
        path.push(w);
        on[w] = true;
        if !want_one && lab.poorest(w) && w > path[0] {
            let ends = (lab.end_type(path[0], Some(path[1])), lab.end_type(w, Some(path[path.len() - 2])));
            out.push(PoorPath { vertices: path.clone(), ends, single: None });
        }
        extend(lab, path, on, out);
        on[w] = false;
        path.pop();
    }
}

impl StructureReport {
    /// Re-tests every reported structure against its definition.
    pub fn revalidate(&self, g: &SignedGraph) -> bool {
        let lab = Labels::new(g);
        if lab.p != self.profiles {
            return false;
        }
        let labeled = |d: &Detection| match d.structure {
            Structure::Labeled { d: deg, i } => d.vertices.len() == 1 && lab.is(d.vertices[0], deg, i),
            _ => false,
        };
        let k8_ok = self.k8.iter().all(labeled);
        let k6_ok = self.k6.iter().all(|d| {
            let v = &d.vertices;
            match d.structure {
                Structure::Labeled { .. } => labeled(d),
                Structure::ThreeOneByFourThree => lab.is(v[0], 3, 1) && lab.is(v[1], 4, 3) && g.adjacent(v[0], v[1]),
                Structure::ThreeOnesSharingTwo => {
                    lab.is(v[0], 3, 1)
                        && lab.is(v[1], 3, 1)
                        && g.adjacent(v[0], v[1])
                        && g.degree(v[2]) == 2
                        && g.adjacent(v[0], v[2])
                        && g.adjacent(v[1], v[2])
                }
                Structure::ThreeZeroTriangle => {
                    lab.is(v[0], 3, 0) && lab.is(v[1], 3, 1) && lab.is(v[2], 3, 1) && g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]) && g.adjacent(v[2], v[0])
                }
                Structure::ThreeOneWithTwoThreeOnes => v[0] != v[2] && v.iter().all(|&x| lab.is(x, 3, 1)) && g.adjacent(v[0], v[1]) && g.adjacent(v[1], v[2]),
                Structure::ThreeZeroWeakCommonNeighbor => {
                    lab.is(v[0], 3, 0)
                        && lab.nbrs(v[0]).all(|x| lab.is(x, 3, 1))
                        && g.adjacent(v[0], v[1])
                        && g.adjacent(v[0], v[2])
                        && v[1] != v[2]
                        && v[3] != v[0]
                        && g.degree(v[3]) < 4
                        && g.adjacent(v[1], v[3])
                        && g.adjacent(v[2], v[3])
                }
            }
        });
        let paths_ok = self.poor_paths.iter().all(|p| {
            let vs = &p.vertices;
            let distinct = vs.iter().enumerate().all(|(i, a)| !vs[..i].contains(a));
            distinct
                && vs.len() % 2 == 1
                && vs.iter().enumerate().all(|(i, &x)| if i % 2 == 0 { lab.is(x, 3, 0) } else { lab.is(x, 3, 1) })
                && vs.windows(2).all(|w| g.adjacent(w[0], w[1]))
                && lab.poorest(vs[0])
                && lab.poorest(vs[vs.len() - 1])
        });
        let comps_ok = self
            .components
            .iter()
            .all(|c| c.vertices.iter().all(|&v| matches!(g.degree(v), 2 | 3)) && c.n0 == c.vertices.iter().filter(|&&v| lab.is(v, 3, 0)).count());
        k6_ok && k8_ok && paths_ok && comps_ok
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        let labels: Vec<String> = self.profiles.iter().map(|p| format!("{}:{p}", name(p.vertex))).collect();
        writeln!(out, "labels: {}", labels.join(" ")).unwrap();
        for (set, list) in [("k6", &self.k6), ("k8", &self.k8)] {
            for d in list {
                let vs: Vec<String> = d.vertices.iter().map(|&v| name(v)).collect();
                writeln!(out, "{set}: {} at {}", d.structure, vs.join(" ")).unwrap();
            }
        }
        for c in &self.components {
            let vs: Vec<String> = c.vertices.iter().map(|&v| name(v)).collect();
            let holds = if c.n0_at_least_n1() { "holds" } else { "fails" };
            writeln!(out, "component: {} n0={} n1={} n0>=n1 {holds}", vs.join(" "), c.n0, c.n1).unwrap();
        }
        for p in &self.poor_paths {
            let vs: Vec<String> = p.vertices.iter().map(|&v| name(v)).collect();
            let shape = match p.single {
                Some(SingleShape::TypeOneAndTwo) => " shape=type-1-and-type-2",
                Some(SingleShape::TypeTwoBothWays) => " shape=type-2-both-ways",
                Some(SingleShape::Other) => " shape=unclassified",
                None => "",
            };
            writeln!(out, "poor-path: {} ends={}{}{shape}", vs.join(" "), p.ends.0, p.ends.1).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{cycle, fig6};
    use crate::graph::{switch, SwitchSet};

    #[test]
    fn cycle_is_all_two_two() {
        let r = scan_structures(&cycle(7).unwrap());
        assert!(r.profiles.iter().all(|p| p.d == 2 && p.i == 2));
        assert!(r.k6.is_empty());
        assert_eq!(r.components.len(), 1);
        assert!(r.revalidate(&cycle(7).unwrap()));
    }

    #[test]
    fn three_two_vertex() {
        // v with two pendant 2-paths and a third neighbor
        let g = SignedGraph::unsigned(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        let r = scan_structures(&g);
        assert!(r.k6.contains(&Detection { structure: Structure::Labeled { d: 3, i: 2 }, vertices: vec![0] }));
    }

    #[test]
    fn fig6_components() {
        let g = fig6();
        let r = scan_structures(&g);
        assert_eq!(r.components.len(), 1);
        let c = &r.components[0];
        assert_eq!(c.vertices.len(), 5);
        assert_eq!((c.n0, c.n1), (2, 2));
        assert!(c.n0_at_least_n1());
        let x = switch(&g, &SwitchSet::new([0, 3])).unwrap();
        assert_eq!(scan_structures(&x), r);
        assert!(r.revalidate(&g));
    }

    #[test]
    fn poor_path_type_two_both_ways() {
        // v1 (0) with 3_1-neighbors v0 (1), v2 (2), a third neighbor of
        // degree 4 (3); v0 and v2 each have another 3_1-neighbor (4, 5).
        // Every 3_1-vertex gets its own pendant 2-vertex ending at 3.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 3), (5, 3)];
        let mut next = 6;
        for v in [1, 2, 4, 5] {
            edges.push((v, next));
            edges.push((next, 3));
            next += 1;
        }
        let g = SignedGraph::unsigned(next, edges).unwrap();
        let r = scan_structures(&g);
        assert!(r.poor_paths.iter().any(|p| p.vertices == vec![0] && p.single == Some(SingleShape::TypeTwoBothWays)));
        assert!(r.revalidate(&g));
    }
}
