//! Target signed graphs: `(K_2k, M)`, `(K_k,k, M)`, double switching graphs,
//! and the color algebra of `DSG(K_2k, M)`.

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{girth_vector, GirthVector, Sign, SignedGraph};

/// A set of target vertices, as a bitmask. Targets used with lists or the
/// solver have at most 64 vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(n: usize) -> ColorSet {
        if n >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << n) - 1)
        }
    }

    pub fn single(c: usize) -> ColorSet {
        ColorSet(1 << c)
    }

    pub fn from_colors(colors: impl IntoIterator<Item = usize>) -> ColorSet {
        ColorSet(colors.into_iter().fold(0, |m, c| m | (1 << c)))
    }

    pub fn contains(self, c: usize) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 & o.0)
    }

    pub fn difference(self, o: ColorSet) -> ColorSet {
        ColorSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: ColorSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(c)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TargetKind {
    /// `(K_2k, M)` with vertices `2i, 2i+1` (0-based) matched negatively.
    K2kM(usize),
    /// `(K_k,k, M)` numbered inside `K_2k`: part A is the even vertices,
    /// part B the odd ones, `a_i b_i` negative.
    KkkM(usize),
    /// Double switching graph of a base target; color `2i + side`.
    Dsg(Box<TargetKind>),
    Custom,
}

/// A target signed graph with its vertex names and, when it is
/// `DSG(K_2k, M)`, its color algebra.
#[derive(Debug)]
pub struct TargetSpace {
    graph: SignedGraph,
    kind: TargetKind,
    name: String,
    names: Vec<String>,
    pos: Vec<u64>,
    neg: Vec<u64>,
    dsg: OnceLock<Box<TargetSpace>>,
    girth: OnceLock<GirthVector>,
}

impl TargetSpace {
    pub fn new(graph: SignedGraph, kind: TargetKind, name: impl Into<String>, names: Vec<String>) -> Self {
        assert_eq!(names.len(), graph.n());
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        if graph.n() <= 64 {
            pos = vec![0u64; graph.n()];
            neg = vec![0u64; graph.n()];
            for e in graph.edges() {
                let table = if e.sign.is_neg() { &mut neg } else { &mut pos };
                table[e.u] |= 1 << e.v;
                table[e.v] |= 1 << e.u;
            }
        }
        TargetSpace { graph, kind, name: name.into(), names, pos, neg, dsg: OnceLock::new(), girth: OnceLock::new() }
    }

    /// A target read from a graph; vertices are named `1..=n`.
    pub fn custom(graph: SignedGraph, name: impl Into<String>) -> Self {
        let names = (1..=graph.n()).map(|i| i.to_string()).collect();
        TargetSpace::new(graph, TargetKind::Custom, name, names)
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn kind(&self) -> &TargetKind {
        &self.kind
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn color_name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn color_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    /// Names of the members, space separated.
    pub fn format_set(&self, s: ColorSet) -> String {
        s.iter().map(|c| self.names[c].as_str()).collect::<Vec<_>>().join(" ")
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.n())
    }

    /// Whether the bitmask tables exist (at most 64 vertices).
    pub fn supports_sets(&self) -> bool {
        self.n() <= 64
    }

    fn require_sets(&self) -> Result<()> {
        if self.supports_sets() {
            Ok(())
        } else {
            Err(Error::TargetTooLarge(self.n()))
        }
    }

    /// Neighbors of `c` joined to it by an edge of sign `s`.
    pub fn neighbors_with_sign(&self, c: usize, s: Sign) -> ColorSet {
        match s {
            Sign::Pos => ColorSet(self.pos[c]),
            Sign::Neg => ColorSet(self.neg[c]),
        }
    }

    /// Colors joined by an edge of sign `s` to some member of `set`.
    pub fn support(&self, set: ColorSet, s: Sign) -> ColorSet {
        let table = match s {
            Sign::Pos => &self.pos,
            Sign::Neg => &self.neg,
        };
        ColorSet(set.iter().fold(0, |m, c| m | table[c]))
    }

    /// Colors forbidden at `x` by an edge `xy` of sign `s` when `y` may use
    /// any color of `list`: no member of `list` is joined to them by an edge
    /// of sign `s`.
    pub fn forbidden_set(&self, s: Sign, list: ColorSet) -> ColorSet {
        self.all_colors().difference(self.support(list, s))
    }

    /// `DSG` of this target, built once.
    pub fn dsg(&self) -> &TargetSpace {
        self.dsg.get_or_init(|| Box::new(dsg_of(self)))
    }

    pub fn girth(&self) -> GirthVector {
        *self.girth.get_or_init(|| girth_vector(&self.graph))
    }

    /// The vertex with the same base index on the other side, for DSG kinds.
    pub fn inverse(&self, c: usize) -> Option<usize> {
        matches!(self.kind, TargetKind::Dsg(_)).then_some(c ^ 1)
    }

    /// Color algebra, present exactly for `DSG(K_2k, M)`.
    pub fn algebra(&self) -> Option<ColorAlgebra> {
        match &self.kind {
            TargetKind::Dsg(base) => match **base {
                TargetKind::K2kM(k) => Some(ColorAlgebra { k }),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn require_algebra(&self) -> Result<ColorAlgebra> {
        self.require_sets()?;
        self.algebra().ok_or_else(|| Error::NotADsgTarget(self.name.clone()))
    }

    /// Sign of the edge between two target vertices.
    pub fn sign(&self, a: usize, b: usize) -> Option<Sign> {
        self.graph.sign(a, b)
    }
}

impl fmt::Display for TargetSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// `(K_2k, M)`: complete graph on `2k` vertices, negative perfect matching
/// `{2i-1, 2i}` (1-based).
pub fn make_k2k_m(k: usize) -> Result<TargetSpace> {
    if k < 1 {
        return Err(Error::InvalidParameter("k2km needs k >= 1".into()));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let sign = if v == u + 1 && u % 2 == 0 { Sign::Neg } else { Sign::Pos };
            edges.push((u, v, sign));
        }
    }
    let graph = SignedGraph::new(n, edges)?;
    let names = (1..=n).map(|i| i.to_string()).collect();
    Ok(TargetSpace::new(graph, TargetKind::K2kM(k), format!("k{n}m"), names))
}

/// `(K_k,k, M)` as the subgraph of `(K_2k, M)` on the edges between even and
/// odd vertices. Vertex `2i` is `a_{i+1}`, vertex `2i+1` is `b_{i+1}`.
pub fn make_kkk_m(k: usize) -> Result<TargetSpace> {
    if k < 2 {
        return Err(Error::InvalidParameter("kkkm needs k >= 2".into()));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let sign = if i == j { Sign::Neg } else { Sign::Pos };
            edges.push((2 * i, 2 * j + 1, sign));
        }
    }
    let graph = SignedGraph::new(2 * k, edges)?;
    let names = (0..2 * k).map(|v| format!("{}{}", if v % 2 == 0 { 'a' } else { 'b' }, v / 2 + 1)).collect();
    Ok(TargetSpace::new(graph, TargetKind::KkkM(k), format!("k{k}{k}m"), names))
}

/// Double switching graph of a signed graph, as a target. Vertex `2i` is
/// `x_i^+` and `2i + 1` is `x_i^-`.
pub fn dsg(h: &SignedGraph) -> TargetSpace {
    dsg_of(&TargetSpace::custom(h.clone(), "custom"))
}

fn dsg_of(base: &TargetSpace) -> TargetSpace {
    let h = base.graph();
    let mut edges = Vec::with_capacity(4 * h.m());
    for e in h.edges() {
        for side in 0..2 {
            edges.push((2 * e.u + side, 2 * e.v + side, e.sign));
            edges.push((2 * e.u + side, 2 * e.v + (1 - side), e.sign.flip()));
        }
    }
    let graph = SignedGraph::new(2 * h.n(), edges).expect("DSG of a simple graph is simple");
    let names = (0..2 * h.n()).map(|c| format!("{}{}", base.color_name(c / 2), if c % 2 == 0 { '+' } else { '-' })).collect();
    TargetSpace::new(graph, TargetKind::Dsg(Box::new(base.kind().clone())), format!("dsg:{}", base.name()), names)
}

/// Pair, inverse, layer and side of the colors of `DSG(K_2k, M)`.
///
/// Color `c` has base index `c / 2` and side `c % 2` (0 is `+`). The pair of
/// a color is its negative same-side partner; a layer is the four colors over
/// one negative base edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorAlgebra {
    pub k: usize,
}

/// Shape flags of a color set, computed literally from the definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ShapeDescriptor {
    pub size: usize,
    pub plus: usize,
    pub minus: usize,
    /// All but at most one member have their pair in the set.
    pub paired: bool,
    /// Paired, and no three members in one layer.
    pub layered: bool,
    /// Layered, and all members on one side.
    pub one_sided: bool,
    /// Layered of odd size `2j + 1`: `j` pairs on one side plus a single
    /// color on the other side.
    pub neighbored: bool,
}

impl ColorAlgebra {
    pub fn colors(&self) -> usize {
        4 * self.k
    }

    pub fn full(&self) -> ColorSet {
        ColorSet::full(self.colors())
    }

    pub fn pair(&self, c: usize) -> usize {
        c ^ 2
    }

    pub fn inverse(&self, c: usize) -> usize {
        c ^ 1
    }

    pub fn layer(&self, c: usize) -> usize {
        c / 4
    }

    /// 0 for `+`, 1 for `-`.
    pub fn side(&self, c: usize) -> usize {
        c & 1
    }

    pub fn color(&self, index: usize, side: usize) -> usize {
        2 * index + side
    }

    /// All colors of one side.
    pub fn side_set(&self, side: usize) -> ColorSet {
        ColorSet::from_colors((0..self.colors()).filter(|&c| c & 1 == side))
    }

    pub fn layer_set(&self, layer: usize) -> ColorSet {
        ColorSet(0b1111 << (4 * layer))
    }

    pub fn inverse_set(&self, s: ColorSet) -> ColorSet {
        let even = 0x5555_5555_5555_5555u64;
        ColorSet(((s.0 & even) << 1) | ((s.0 >> 1) & even))
    }

    pub fn pair_set(&self, s: ColorSet) -> ColorSet {
        let low = 0x3333_3333_3333_3333u64;
        ColorSet(((s.0 & low) << 2) | ((s.0 >> 2) & low))
    }

    pub fn classify(&self, s: ColorSet) -> ShapeDescriptor {
        let size = s.len();
        let minus = s.intersection(self.side_set(1)).len();
        let plus = size - minus;
        let unpaired = s.difference(self.pair_set(s)).len();
        let paired = unpaired <= 1;
        let layered = paired && (0..self.k).all(|l| s.intersection(self.layer_set(l)).len() < 3);
        let one_sided = layered && (plus == 0 || minus == 0);
        let neighbored = layered && size % 2 == 1 && {
            let j = size / 2;
            // the single is the unpaired member; the j pairs lie on the other side
            let single = s.difference(self.pair_set(s));
            match single.first() {
                Some(x) => {
                    let other = 1 - self.side(x);
                    let pairs = s.difference(single);
                    pairs.len() == 2 * j && pairs.iter().all(|c| self.side(c) == other)
                }
                None => false,
            }
        };
        ShapeDescriptor { size, plus, minus, paired, layered, one_sided, neighbored }
    }

    pub fn is_paired(&self, s: ColorSet) -> bool {
        self.classify(s).paired
    }

    pub fn is_neighbored(&self, s: ColorSet, size: usize) -> bool {
        s.len() == size && self.classify(s).neighbored
    }

    /// Every subset of the colors satisfying `pred`, in increasing mask order.
    pub fn subsets(&self, pred: impl Fn(ColorSet, &ShapeDescriptor) -> bool) -> Vec<ColorSet> {
        let n = self.colors();
        assert!(n <= 20, "subset enumeration is for small targets");
        (0u64..1 << n).map(ColorSet).filter(|&s| pred(s, &self.classify(s))).collect()
    }

    pub fn neighbored_sets(&self, size: usize) -> Vec<ColorSet> {
        self.subsets(|s, d| s.len() == size && d.neighbored)
    }

    pub fn paired_sets(&self, size: usize) -> Vec<ColorSet> {
        self.subsets(|s, d| s.len() == size && d.paired)
    }
}

/// Resolves a built-in target name: `k6m`, `k8m`, `k<2k>m`, `k2km:<k>`,
/// `k33m`, `k44m`, `kkkm:<k>`, `dsg:<name>`.
pub fn builtin_target(name: &str) -> Option<Result<TargetSpace>> {
    let lower = name.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("dsg:") {
        return builtin_target(rest).map(|r| r.map(|t| dsg_of(&t)));
    }
    if let Some(k) = lower.strip_prefix("k2km:") {
        return Some(parse_param(k).and_then(make_k2k_m));
    }
    if let Some(k) = lower.strip_prefix("kkkm:") {
        return Some(parse_param(k).and_then(make_kkk_m));
    }
    let digits = lower.strip_prefix('k')?.strip_suffix('m')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // `k<d><d>m` with a repeated digit names a complete bipartite target;
    // anything else is `K_n` with `n` even.
    let bytes = digits.as_bytes();
    if bytes.len() == 2 && bytes[0] == bytes[1] {
        return Some(make_kkk_m((bytes[0] - b'0') as usize));
    }
    let n: usize = digits.parse().ok()?;
    if !n.is_multiple_of(2) {
        return Some(Err(Error::InvalidParameter(format!("{name}: complete target needs an even order"))));
    }
    Some(make_k2k_m(n / 2))
}

fn parse_param(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::InvalidParameter(format!("bad parameter `{s}`")))
}

/// Built-in name, or else a signed graph file used as a custom target.
/// `dsg:<path>` takes the double switching graph of a file target.
pub fn resolve_target(name: &str) -> Result<TargetSpace> {
    if let Some(t) = builtin_target(name) {
        return t;
    }
    if let Some(rest) = name.strip_prefix("dsg:") {
        return Ok(dsg_of(&resolve_target(rest)?));
    }
    let path = Path::new(name);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let g: SignedGraph = text.parse()?;
        return Ok(TargetSpace::custom(g, name));
    }
    Err(Error::Unknown(format!("target `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth::*;

    fn k6() -> TargetSpace {
        make_k2k_m(3).unwrap()
    }

    fn set(t: &TargetSpace, names: &[&str]) -> ColorSet {
        ColorSet::from_colors(names.iter().map(|n| t.color_by_name(n).unwrap()))
    }

    #[test]
    fn complete_targets() {
        let t = k6();
        assert_eq!((t.n(), t.graph().m(), t.graph().negative_edges().count()), (6, 15, 3));
        let one = make_k2k_m(1).unwrap();
        assert_eq!(one.graph().m(), 1);
        assert_eq!(one.graph().edges()[0].sign, Sign::Neg);
        let k8 = make_k2k_m(4).unwrap();
        assert_eq!((k8.n(), k8.graph().m(), k8.graph().negative_edges().count()), (8, 28, 4));
        assert!(make_k2k_m(0).is_err());
    }

    #[test]
    fn bipartite_targets() {
        let t = make_kkk_m(3).unwrap();
        assert_eq!((t.n(), t.graph().m(), t.graph().negative_edges().count()), (6, 9, 3));
        let k44 = make_kkk_m(4).unwrap();
        assert_eq!(k44.girth().0, [Finite(2), Infinite, Finite(4), Infinite]);
        assert!(make_kkk_m(1).is_err());
        // every edge of K_kk is an edge of K_2k with the same sign
        let k6 = k6();
        for e in t.graph().edges() {
            assert_eq!(k6.sign(e.u, e.v), Some(e.sign));
        }
    }

    #[test]
    fn girth_of_k6m() {
        assert_eq!(k6().girth().0, [Finite(2), Finite(3), Finite(4), Finite(3)]);
    }

    #[test]
    fn dsg_shapes() {
        let edge = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let d = dsg(&edge);
        assert_eq!(d.graph().m(), 4);
        assert!(d.graph().is_connected());
        assert!(d.graph().edges().iter().all(|e| d.graph().degree(e.u) == 2));
        assert_eq!(d.graph().negative_edges().count(), 2);

        let k = k6();
        let d = k.dsg();
        assert_eq!((d.n(), d.graph().m()), (12, 60));
        assert!((0..12).all(|c| d.graph().degree(c) == 10));
        let c = d.color_by_name("6-").unwrap();
        assert_eq!(d.neighbors_with_sign(c, Sign::Pos), set(d, &["1-", "2-", "3-", "4-", "5+"]));
        let plus: Vec<usize> = (0..6).map(|i| 2 * i).collect();
        assert_eq!(d.graph().induced(&plus), *k.graph());
    }

    #[test]
    fn algebra_invariants_hold() {
        for k in 1..=6 {
            let t = make_k2k_m(k).unwrap();
            let d = t.dsg();
            let a = d.algebra().unwrap();
            for c in 0..a.colors() {
                let p = a.pair(c);
                assert_ne!(p, c);
                assert_eq!(a.pair(p), c);
                assert_eq!(a.side(p), a.side(c));
                assert_eq!(d.sign(c, p), Some(Sign::Neg));
                let inv = a.inverse(c);
                assert_eq!(a.side(inv), 1 - a.side(c));
                assert_eq!(inv / 2, c / 2);
                let non_adjacent: Vec<usize> = (0..a.colors()).filter(|&x| x != c && d.sign(c, x).is_none()).collect();
                assert_eq!(non_adjacent, vec![inv]);
                assert_eq!(a.layer(p), a.layer(c));
            }
            for l in 0..k {
                assert_eq!(a.layer_set(l).len(), 4);
            }
            let s = ColorSet(0b1011_0110);
            assert_eq!(a.inverse_set(s), ColorSet::from_colors(s.iter().map(|c| a.inverse(c))));
            assert_eq!(a.pair_set(s), ColorSet::from_colors(s.iter().map(|c| a.pair(c))));
        }
    }

    #[test]
    fn forbidden_sets_from_examples() {
        let t = k6();
        let d = t.dsg();
        let f = d.forbidden_set(Sign::Pos, set(d, &["1+", "2+", "3-"]));
        assert_eq!(f, set(d, &["1+", "2+", "3-", "4-"]));
        let f = d.forbidden_set(Sign::Pos, set(d, &["1+"]));
        assert_eq!(f, set(d, &["1+", "2+", "1-", "3-", "4-", "5-", "6-"]));
    }

    #[test]
    fn classification_examples() {
        let t = k6();
        let d = t.dsg();
        let a = d.algebra().unwrap();
        let s = a.classify(set(d, &["1+", "2+", "3+", "4+", "5+"]));
        assert!(s.paired && s.layered && s.one_sided && !s.neighbored);
        assert!(a.classify(set(d, &["1+", "2+", "3+", "5-", "6-"])).paired);
        assert!(!a.classify(set(d, &["1+", "3+"])).paired);
        assert!(a.classify(set(d, &["1-", "2-", "3-", "4-", "5+"])).neighbored);
    }

    #[test]
    fn shape_counts_in_k6() {
        let d = k6();
        let a = d.dsg().algebra().unwrap();
        let n5 = a.neighbored_sets(5);
        assert_eq!(n5.len(), 12);
        // each one is the positive neighborhood of exactly one color
        for s in &n5 {
            let owners = (0..12).filter(|&c| d.dsg().neighbors_with_sign(c, Sign::Pos) == *s).count();
            assert_eq!(owners, 1);
        }
        let p10 = a.paired_sets(10);
        assert_eq!(p10.len(), 6);
        for s in &p10 {
            let missing = a.full().difference(*s);
            let c = missing.first().unwrap();
            assert_eq!(missing, ColorSet::from_colors([c, a.pair(c)]));
        }
        assert_eq!(a.neighbored_sets(3).len(), 24);
        assert_eq!(a.neighbored_sets(1).len(), 12);
    }

    #[test]
    fn target_names() {
        assert_eq!(builtin_target("k6m").unwrap().unwrap().n(), 6);
        assert_eq!(builtin_target("k10m").unwrap().unwrap().n(), 10);
        assert_eq!(*builtin_target("k33m").unwrap().unwrap().kind(), TargetKind::KkkM(3));
        assert_eq!(*builtin_target("k44m").unwrap().unwrap().kind(), TargetKind::KkkM(4));
        assert_eq!(builtin_target("k2km:5").unwrap().unwrap().n(), 10);
        assert_eq!(builtin_target("kkkm:5").unwrap().unwrap().n(), 10);
        let d = builtin_target("dsg:k6m").unwrap().unwrap();
        assert_eq!(d.n(), 12);
        assert!(d.algebra().is_some());
        assert!(builtin_target("k5m").unwrap().is_err());
        assert!(builtin_target("fig6").is_none());
        assert!(resolve_target("no-such-target").is_err());
    }
}
