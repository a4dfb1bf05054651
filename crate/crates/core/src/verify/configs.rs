//! Reducible configurations: every precoloring of the boundary extends to
//! the internal vertices.
//!
//! Boundary vertices are taken pairwise distinct. Identifying some of them
//! only removes precolorings, so the distinct case covers the others.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::targets::{make_k2k_m, ColorSet, TargetSpace};

use super::engine::{evaluate, Family};
use super::LemmaReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConfigParams {
    /// Largest `k` of the poor paths `v_1 ... v_2k+1`.
    pub poor_kmax: usize,
    /// Cap on list combinations for cores that are neither trees nor cycles.
    pub product_limit: u128,
}

impl Default for ConfigParams {
    fn default() -> Self {
        ConfigParams { poor_kmax: 2, product_limit: 50_000_000 }
    }
}

const K6_FIXED: [&str; 14] = ["trivial", "2_1", "3_2", "4_4", "5_5", "22a", "22b", "23", "24", "25a", "25b", "26a", "26b", "26c"];
const K8_FIXED: [&str; 5] = ["k8:1", "k8:2_1", "k8:3_1", "k8:4_3", "k8:5_5"];

/// Every catalogued configuration, poor paths up to `params.poor_kmax`.
pub fn config_ids(params: &ConfigParams) -> Vec<String> {
    let mut ids: Vec<String> = K6_FIXED.iter().map(|s| s.to_string()).collect();
    ids.push("poor-k0a".into());
    ids.push("poor-k0b".into());
    for k in 1..=params.poor_kmax {
        for ends in ["11", "12", "22"] {
            ids.push(format!("poor-k{k}-{ends}"));
        }
    }
    ids.extend(K8_FIXED.iter().map(|s| s.to_string()));
    ids
}

/// A configuration: named vertices, some of them boundary, and edges.
#[derive(Clone, Debug, Default)]
pub struct Config {
    pub names: Vec<String>,
    pub boundary: Vec<bool>,
    pub edges: Vec<(usize, usize)>,
}

impl Config {
    fn vertex(&mut self, name: impl Into<String>, boundary: bool) -> usize {
        let name = name.into();
        debug_assert!(!self.names.contains(&name), "duplicate vertex {name}");
        self.names.push(name);
        self.boundary.push(boundary);
        self.names.len() - 1
    }

    fn id(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no vertex {name}"))
    }

    fn edge(&mut self, a: &str, b: &str) {
        let e = (self.id(a), self.id(b));
        self.edges.push(e);
    }

    /// `inner` and `outer` name internal and boundary vertices; edges are
    /// `a-b` strings.
    fn build(inner: &[&str], outer: &[&str], edges: &[&str]) -> Config {
        let mut c = Config::default();
        for v in inner {
            c.vertex(*v, false);
        }
        for v in outer {
            c.vertex(*v, true);
        }
        for e in edges {
            let (a, b) = e.split_once('-').expect("edge a-b");
            c.edge(a, b);
        }
        c
    }

    /// `center` with `twos` pendant paths `center - a_i - b_i` (b_i boundary)
    /// and `direct` boundary neighbors.
    fn star(twos: usize, direct: usize) -> Config {
        let mut c = Config::default();
        c.vertex("v", false);
        for i in 1..=twos {
            c.vertex(format!("u{i}"), false);
            c.vertex(format!("b{i}"), true);
            c.edge("v", &format!("u{i}"));
            c.edge(&format!("u{i}"), &format!("b{i}"));
        }
        for i in 1..=direct {
            c.vertex(format!("x{i}"), true);
            c.edge("v", &format!("x{i}"));
        }
        c
    }

    pub fn graph(&self) -> SignedGraph {
        SignedGraph::new(self.names.len(), self.edges.iter().map(|&(u, v)| (u, v, Sign::Pos))).expect("simple configuration")
    }
}

/// The configuration named `id`, and whether it lives over `DSG(K_8, M)`.
pub fn build_config(id: &str) -> Result<(Config, bool)> {
    if let Some(rest) = id.strip_prefix("k8:") {
        let c = match rest {
            "1" => Config::build(&["v"], &["b"], &["v-b"]),
            "2_1" => Config::build(&["v", "u"], &["b1", "b2"], &["b1-v", "v-u", "u-b2"]),
            "3_1" => Config::build(&["v", "u"], &["u1", "v1", "v2"], &["v-u", "u-u1", "v-v1", "v-v2"]),
            "4_3" => Config::star(3, 1),
            "5_5" => Config::star(5, 0),
            _ => return Err(Error::Unknown(format!("configuration `{id}`"))),
        };
        return Ok((c, true));
    }
    let c = match id {
        "trivial" => Config::build(&["v"], &[], &[]),
        "2_1" => Config::build(&["v", "u"], &["b1", "b2"], &["b1-v", "v-u", "u-b2"]),
        "3_2" => Config::star(2, 1),
        "4_4" => Config::star(4, 0),
        "5_5" => Config::star(5, 0),
        // a 3_1-vertex u next to a 4_3-vertex v
        "22a" => Config::build(
            &["u", "u2", "v", "v1", "v2", "v3"],
            &["u1", "w0", "w1", "w2", "w3"],
            &["u-u1", "u-u2", "u2-w0", "u-v", "v-v1", "v1-w1", "v-v2", "v2-w2", "v-v3", "v3-w3"],
        ),
        // the same with the 2-neighbor w of u shared with v
        "22b" => Config::build(&["u", "v", "w", "v1", "v2"], &["u1", "w1", "w2"], &["u-w", "w-v", "u-u1", "u-v", "v-v1", "v1-w1", "v-v2", "v2-w2"]),
        // adjacent 3_1-vertices with a common 2-neighbor
        "23" => Config::build(&["u", "v", "w"], &["u'", "v'"], &["u-u'", "u-w", "u-v", "v-v'", "v-w"]),
        // a 3_0-vertex w and two 3_1-vertices on a triangle
        "24" => Config::build(&["u", "v", "w", "u'", "v'"], &["u1", "v1", "w'"], &["u-v", "v-w", "w-u", "u-u'", "u'-u1", "v-v'", "v'-v1", "w-w'"]),
        // a 3_1-vertex v with two 3_1-neighbors u, w; distinct 2-neighbors
        "25a" => Config::build(
            &["u", "v", "w", "u1", "v1", "w1"],
            &["u2", "w2", "u1'", "v1'", "w1'"],
            &["u2-u", "u-v", "w2-w", "w-v", "u1'-u1", "u1-u", "v1'-v1", "v1-v", "w1'-w1", "w1-w"],
        ),
        // the same with u, w sharing the 2-neighbor x
        "25b" => Config::build(&["u", "v", "w", "x", "v1"], &["u2", "w2", "v1'"], &["u2-u", "u-v", "v-w", "w-w2", "u-x", "w-x", "v1'-v1", "v1-v"]),
        // a 3_0-vertex u with 3_1-neighbors x, y, z; x and y share the 2-vertex w
        "26a" => Config::build(
            &["u", "x", "y", "w", "z", "z1"],
            &["x1", "y1", "z2", "z3"],
            &["u-z", "u-x", "x-w", "x-x1", "y-y1", "z3-z", "z-z1", "z1-z2", "u-y", "y-w"],
        ),
        // ... share the 3_0-vertex w, which is adjacent to z
        "26b" => Config::build(
            &["u", "y", "w", "x", "x1", "y1", "z", "z1"],
            &["x2", "y2", "z2"],
            &["u-x", "x-w", "x-x1", "x1-x2", "y-y1", "y1-y2", "z-z1", "z1-z2", "u-y", "y-w", "u-z", "z-w"],
        ),
        // ... share the 3_0-vertex w, which is not adjacent to z
        "26c" => Config::build(
            &["u", "x", "y", "w", "z", "x1", "y1", "z1"],
            &["x2", "y2", "z2", "w1", "z3"],
            &["u-x", "x-w", "x-x1", "x1-x2", "y-y1", "y1-y2", "z-z1", "z1-z2", "u-y", "y-w", "w-w1", "u-z", "z-z3"],
        ),
        _ => return poor_path(id).map(|c| (c, false)),
    };
    Ok((c, false))
}

/// Gives the 3_1-vertex `name` a 2-neighbor leading to the boundary and
/// `extra` boundary neighbors.
fn three_one(c: &mut Config, name: &str, extra: usize) {
    c.vertex(format!("{name}.2"), false);
    c.vertex(format!("{name}.b"), true);
    c.edge(name, &format!("{name}.2"));
    c.edge(&format!("{name}.2"), &format!("{name}.b"));
    for i in 0..extra {
        let b = format!("{name}.x{i}");
        c.vertex(b.clone(), true);
        c.edge(name, &b);
    }
}

/// Attaches the end structure at the 3_0 end vertex `end`, whose path
/// neighbor is already present. Type 1: two more 3_1-neighbors `a`, `a'`.
/// Type 2: a boundary neighbor and the 3_1-neighbor `a`, which has another
/// 3_1-neighbor `a-`.
fn end_structure(c: &mut Config, end: &str, ty: u8, a: &str) {
    if ty == 1 {
        for n in [a.to_string(), format!("{a}'")] {
            c.vertex(n.clone(), false);
            c.edge(end, &n);
            three_one(c, &n, 1);
        }
    } else {
        let b = format!("{end}.x");
        c.vertex(b.clone(), true);
        c.edge(end, &b);
        c.vertex(a, false);
        c.edge(end, a);
        three_one(c, a, 0);
        let far = format!("{a}-");
        c.vertex(far.clone(), false);
        c.edge(a, &far);
        three_one(c, &far, 1);
    }
}

/// `poor-k0a`, `poor-k0b` and `poor-k<k>-<t1><t2>`: the tree spanned by a
/// poor path `v_1 ... v_2k+1`, its end structures and all 2-neighbors.
fn poor_path(id: &str) -> Result<Config> {
    let unknown = || Error::Unknown(format!("configuration `{id}`"));
    let rest = id.strip_prefix("poor-k").ok_or_else(unknown)?;
    let mut c = Config::default();
    match rest {
        // v1 is type 1 towards v2, v2' and type 2 towards v0
        "0a" => {
            c.vertex("v1", false);
            end_structure(&mut c, "v1", 1, "v2");
            c.vertex("v0", false);
            c.edge("v1", "v0");
            three_one(&mut c, "v0", 0);
            c.vertex("v-1", false);
            c.edge("v0", "v-1");
            three_one(&mut c, "v-1", 1);
        }
        // v1 is type 2 in both directions
        "0b" => {
            c.vertex("v1", false);
            end_structure(&mut c, "v1", 2, "v0");
            c.vertex("v2", false);
            c.edge("v1", "v2");
            three_one(&mut c, "v2", 0);
            c.vertex("v3", false);
            c.edge("v2", "v3");
            three_one(&mut c, "v3", 1);
        }
        _ => {
            let (k, ends) = rest.split_once('-').ok_or_else(unknown)?;
            let k: usize = k.parse().map_err(|_| unknown())?;
            let ends = ends.as_bytes();
            if k == 0 || ends.len() != 2 || !ends.iter().all(|&b| b == b'1' || b == b'2') {
                return Err(unknown());
            }
            let last = 2 * k + 1;
            for i in 1..=last {
                let v = format!("v{i}");
                c.vertex(v.clone(), false);
                if i > 1 {
                    c.edge(&format!("v{}", i - 1), &v);
                }
                if i % 2 == 0 {
                    three_one(&mut c, &v, 0);
                } else if i != 1 && i != last {
                    let b = format!("{v}.x");
                    c.vertex(b.clone(), true);
                    c.edge(&v, &b);
                }
            }
            end_structure(&mut c, "v1", ends[0] - b'0', "v0");
            end_structure(&mut c, &format!("v{last}"), ends[1] - b'0', &format!("v{}", last + 1));
        }
    }
    Ok(c)
}

/// Checks that every boundary precoloring of configuration `id` extends,
/// over every signature class.
pub fn verify_config_extension(id: &str, params: &ConfigParams) -> Result<LemmaReport> {
    let (cfg, k8) = build_config(id)?;
    let base = make_k2k_m(if k8 { 4 } else { 3 })?;
    let t = base.dsg();
    let g = cfg.graph();
    if !g.is_connected() {
        return Err(Error::Invariant(format!("configuration {id} is disconnected")));
    }
    let mut rep = LemmaReport::new(format!("config-{id}"));
    let classes = g.signature_classes();
    rep.count("signature-classes", classes.len() as u128);
    for class in &classes {
        if id == "k8:3_1" {
            k8_three_one(t, &cfg, class, &mut rep)?;
            continue;
        }
        let fams = families(t, &cfg);
        let outcome = evaluate(t, class, fams, params.product_limit)?;
        let before = rep.counterexample.is_some();
        rep.absorb(outcome, t, &|v| cfg.names[v].clone());
        if !before {
            if let Some(c) = rep.counterexample.as_mut() {
                *c = format!("{c} negative {}", negative_edges(&cfg, class));
            }
        }
    }
    Ok(rep)
}

fn families(t: &TargetSpace, cfg: &Config) -> Vec<Family> {
    (0..cfg.names.len()).map(|v| if cfg.boundary[v] { Family::of_lists(v, (0..t.n()).map(ColorSet::single)) } else { Family::fixed(t.all_colors()) }).collect()
}

fn negative_edges(cfg: &Config, g: &SignedGraph) -> String {
    let neg: Vec<String> = g.negative_edges().map(|e| format!("{}{}", cfg.names[e.u], cfg.names[e.v])).collect();
    if neg.is_empty() {
        "none".into()
    } else {
        neg.join(",")
    }
}

/// The 3_1-vertex over `DSG(K_8, M)` only reduces when the two precolored
/// neighbors of `v` leave it a color; the other precolorings cannot come
/// from a coloring of the rest of the graph.
fn k8_three_one(t: &TargetSpace, cfg: &Config, g: &SignedGraph, rep: &mut LemmaReport) -> Result<()> {
    let (v, v1, v2) = (cfg.id("v"), cfg.id("v1"), cfg.id("v2"));
    let s1 = g.sign(v, v1).expect("edge v v1");
    let s2 = g.sign(v, v2).expect("edge v v2");
    for c1 in 0..t.n() {
        for c2 in 0..t.n() {
            let (l1, l2) = (ColorSet::single(c1), ColorSet::single(c2));
            let free = t.all_colors().difference(t.forbidden_set(s1, l1)).difference(t.forbidden_set(s2, l2));
            if free.is_empty() {
                rep.count("precolorings-blocked-at-v", 1);
                continue;
            }
            let mut fams = families(t, cfg);
            fams[v1] = Family::of_lists(v1, [l1]);
            fams[v2] = Family::of_lists(v2, [l2]);
            let outcome = evaluate(t, g, fams, u128::MAX)?;
            rep.absorb(outcome, t, &|x| cfg.names[x].clone());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::engine::brute_force;

    fn lists(t: &TargetSpace, cfg: &Config) -> Vec<Vec<ColorSet>> {
        (0..cfg.names.len()).map(|v| if cfg.boundary[v] { (0..t.n()).map(ColorSet::single).collect() } else { vec![t.all_colors()] }).collect()
    }

    #[test]
    fn ids_build_connected_configs() {
        for id in config_ids(&ConfigParams::default()) {
            let (cfg, _) = build_config(&id).unwrap();
            assert!(cfg.graph().is_connected(), "{id}");
        }
        assert!(build_config("nope").is_err());
        assert!(build_config("poor-k1-13").is_err());
    }

    #[test]
    fn poor_path_degrees() {
        let (cfg, _) = build_config("poor-k1-12").unwrap();
        let g = cfg.graph();
        for v in 0..g.n() {
            if !cfg.boundary[v] {
                let d = g.degree(v);
                assert!(d == 2 || d == 3, "{} has degree {d}", cfg.names[v]);
            }
        }
        // v1 v2 v3, type-1 end v0 v0' at v1, type-2 end v4 v4- at v3
        let internal = cfg.boundary.iter().filter(|&&b| !b).count();
        let threes = (0..g.n()).filter(|&v| !cfg.boundary[v] && g.degree(v) == 3).count();
        assert_eq!(threes, 3 + 2 + 2);
        assert_eq!(internal, threes + 5);
    }

    #[test]
    fn three_two_vertex_extends_and_matches_brute_force() {
        let base = make_k2k_m(3).unwrap();
        let t = base.dsg();
        let (cfg, _) = build_config("3_2").unwrap();
        let rep = verify_config_extension("3_2", &ConfigParams::default()).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.instances, 12 * 12 * 12);
        let brute = brute_force(t, &cfg.graph(), &lists(t, &cfg)).unwrap();
        assert_eq!((brute.instances, brute.failures), (1728, 0));
    }

    #[test]
    fn non_reducible_three_one_vertex_fails_the_same_way_both_routes() {
        // a 3_1-vertex alone is not reducible over DSG(K_6, M)
        let base = make_k2k_m(3).unwrap();
        let t = base.dsg();
        let cfg = Config::star(1, 2);
        for g in cfg.graph().signature_classes() {
            let folded = evaluate(t, &g, families(t, &cfg), u128::MAX).unwrap();
            let brute = brute_force(t, &g, &lists(t, &cfg)).unwrap();
            assert_eq!(folded.instances, brute.instances);
            assert_eq!(folded.failures, brute.failures);
            assert!(folded.failures > 0);
        }
    }

    #[test]
    fn triangle_config_matches_brute_force() {
        let base = make_k2k_m(3).unwrap();
        let t = base.dsg();
        let (cfg, _) = build_config("23").unwrap();
        for g in cfg.graph().signature_classes() {
            let folded = evaluate(t, &g, families(t, &cfg), u128::MAX).unwrap();
            let brute = brute_force(t, &g, &lists(t, &cfg)).unwrap();
            assert_eq!((folded.instances, folded.failures), (brute.instances, brute.failures));
        }
    }

    #[test]
    fn trivial_config() {
        let rep = verify_config_extension("trivial", &ConfigParams::default()).unwrap();
        assert_eq!((rep.instances, rep.failures), (1, 0));
    }
}
