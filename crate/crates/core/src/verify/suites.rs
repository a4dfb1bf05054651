//! The list-coloring lemmas as exhaustive checks over `DSG(K_6, M)` and
//! `DSG(K_8, M)`.
//!
//! Every check enumerates all lists of the stated shapes and every sign
//! pattern on the edges; nothing is reduced by symmetry.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::hom::{list_sp_hom, ListAssignment, SolveOptions};
use crate::targets::{make_k2k_m, ColorAlgebra, ColorSet, TargetSpace};

use super::engine::{cycle_outcome_all_signs, path_family_all_signs, root_family, Family};
use super::{LemmaReport, SuiteReport};

const SIGNS: [Sign; 2] = [Sign::Pos, Sign::Neg];

pub const SUITES: [&str; 5] = ["edge-restriction", "tree-lemmas", "path-lemmas", "cycle-lemmas", "k8-lemmas"];

pub fn suite_ids() -> &'static [&'static str] {
    &SUITES
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Largest `k` for paths `P_2k` and cycles `C_2k`, `C_2k+1`.
    pub kmax: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { kmax: 4 }
    }
}

pub fn verify_suite(id: &str, params: &SuiteParams) -> Result<SuiteReport> {
    if params.kmax == 0 {
        return Err(Error::InvalidParameter("kmax must be at least 1".into()));
    }
    let lemmas = match id {
        "edge-restriction" => with_k6(edge_restriction),
        "tree-lemmas" => with_k6(tree_lemmas),
        "path-lemmas" => with_k6(|t, a| path_lemmas(t, a, params.kmax)),
        "cycle-lemmas" => with_k6(|t, a| cycle_lemmas(t, a, params.kmax)),
        "k8-lemmas" => {
            let base = make_k2k_m(4)?;
            let t = base.dsg();
            k8_lemmas(t, &t.require_algebra()?)
        }
        _ => return Err(Error::Unknown(format!("suite `{id}`"))),
    };
    Ok(SuiteReport { suite: id.to_string(), lemmas })
}

fn with_k6(f: impl FnOnce(&TargetSpace, &ColorAlgebra) -> Vec<LemmaReport>) -> Vec<LemmaReport> {
    let base = make_k2k_m(3).expect("k = 3 is valid");
    let t = base.dsg();
    f(t, &t.require_algebra().expect("DSG of a complete target"))
}

fn clause(rep: &mut LemmaReport, label: &str, ok: bool, describe: impl FnOnce() -> String) {
    rep.count(label, 1);
    rep.check(ok, || format!("{label}: {}", describe()));
}

fn braces(t: &TargetSpace, s: ColorSet) -> String {
    format!("{{{}}}", t.format_set(s))
}

/// Forbidden sets across one edge: sizes and shapes by the shape of the
/// list at the far end, and the complements of singleton and
/// neighbored 3-set restrictions.
fn edge_restriction(t: &TargetSpace, alg: &ColorAlgebra) -> Vec<LemmaReport> {
    let full = alg.full();
    let (plus, minus) = (alg.side_set(0), alg.side_set(1));
    let mut table = LemmaReport::new("forbidden-set-table");
    let mut complements = LemmaReport::new("forbidden-set-complements");
    for mask in 0u64..1 << alg.colors() {
        let l = ColorSet(mask);
        let d = alg.classify(l);
        for s in SIGNS {
            let f = t.forbidden_set(s, l);
            let fd = alg.classify(f);
            let desc = || format!("L(x)={} sign {s} F={}", braces(t, l), braces(t, f));
            if l.is_empty() {
                clause(&mut table, "empty", f == full, desc);
            }
            if d.size == 1 {
                clause(&mut table, "singleton", fd.paired && fd.size == 7, desc);
            }
            if d.size == 2 && d.paired {
                clause(&mut table, "paired-2", fd.paired && fd.size == 6, desc);
            }
            if d.size == 3 && d.paired {
                clause(&mut table, "paired-3", fd.paired && fd.size <= 4, desc);
                if !d.one_sided {
                    let rest = full.difference(f);
                    let ok = rest.intersection(plus).len() >= 4 && rest.intersection(minus).len() >= 4;
                    clause(&mut table, "paired-3-two-sided-per-side", ok, desc);
                }
            }
            if d.size == 4 && d.paired {
                clause(&mut table, "paired-4", fd.paired && fd.size <= 4, desc);
                if !d.layered {
                    clause(&mut table, "paired-4-not-layered", f.is_empty(), desc);
                }
                if d.one_sided {
                    clause(&mut table, "paired-4-one-sided", fd.paired && fd.size == 2, desc);
                }
            }
            if d.size == 5 && d.neighbored {
                clause(&mut table, "neighbored-5", fd.paired && fd.size == 2, desc);
            }
            if d.size == 6 && d.paired {
                clause(&mut table, "paired-6", fd.paired && fd.size <= 2, desc);
                if !d.layered || d.one_sided {
                    clause(&mut table, "paired-6-not-layered-or-one-sided", f.is_empty(), desc);
                }
            }
            if d.size == 8 && d.paired {
                clause(&mut table, "paired-8", f.is_empty(), desc);
            }
            if (0..alg.k).any(|layer| alg.layer_set(layer).is_subset(l)) {
                clause(&mut table, "contains-a-layer", f.is_empty(), desc);
            }
            let rest = full.difference(f);
            if d.size == 1 {
                clause(&mut complements, "singleton-gives-neighbored-5", alg.is_neighbored(rest, 5), desc);
            }
            if d.size == 3 && d.neighbored {
                let rd = alg.classify(rest);
                let ok = rd.paired && rd.size == 8 && !plus.is_subset(rest) && !minus.is_subset(rest);
                clause(&mut complements, "neighbored-3-gives-two-sided-paired-8", ok, desc);
            }
        }
    }
    vec![table, complements]
}

/// All sign patterns on the edges of an unsigned shape.
fn signings(n: usize, edges: &[(usize, usize)]) -> Vec<SignedGraph> {
    (0u32..1 << edges.len())
        .map(|bits| {
            let signed = edges.iter().enumerate().map(|(i, &(u, v))| (u, v, Sign::from_bit((bits >> i & 1) as usize)));
            SignedGraph::new(n, signed).expect("simple shape")
        })
        .collect()
}

fn singletons(alg: &ColorAlgebra, v: usize) -> Family {
    Family::of_lists(v, (0..alg.colors()).map(ColorSet::single))
}

/// Admissible sets at the root of a tree with precolored leaves, checked
/// against `shape`, which names the admissible set or rejects it.
#[allow(clippy::too_many_arguments)]
fn rooted_tree_check(
    id: &str,
    t: &TargetSpace,
    alg: &ColorAlgebra,
    names: &[&str],
    edges: &[(usize, usize)],
    precolored: &[usize],
    shape: impl Fn(ColorSet) -> Option<&'static str>,
) -> LemmaReport {
    let mut rep = LemmaReport::new(id);
    for g in signings(names.len(), edges) {
        let fams: Vec<Family> = (0..g.n()).map(|v| if precolored.contains(&v) { singletons(alg, v) } else { Family::fixed(alg.full()) }).collect();
        let fam = root_family(t, &g, fams, 0).expect("shapes are trees");
        for (&key, e) in &fam.0 {
            let l = ColorSet(key);
            let label = shape(l);
            if let Some(label) = label {
                rep.count(label, e.weight);
            }
            rep.instances += e.weight;
            if label.is_none() {
                rep.failures += e.weight;
                if rep.counterexample.is_none() {
                    let lists = super::render_witness(&e.witness, t, &|v| names[v].to_string());
                    let signs: Vec<String> = g.edges().iter().map(|ed| format!("{}{}:{}", names[ed.u], names[ed.v], ed.sign)).collect();
                    rep.counterexample = Some(format!("{lists} signs {} admissible {}", signs.join(" "), braces(t, l)));
                }
            }
        }
    }
    rep
}

/// Admissible sets at the root of small trees with precolored leaves.
fn tree_lemmas(t: &TargetSpace, alg: &ColorAlgebra) -> Vec<LemmaReport> {
    let two_path = rooted_tree_check("two-path-root", t, alg, &["v", "v1", "v2"], &[(0, 1), (1, 2)], &[2], |l| {
        let d = alg.classify(l);
        (d.paired && d.size == 10).then_some("paired-10")
    });
    let three_path = rooted_tree_check("three-path-inner-root", t, alg, &["v", "v1", "v2", "v3"], &[(1, 2), (2, 0), (0, 3)], &[1, 3], |l| {
        let d = alg.classify(l);
        if d.size == 5 && d.neighbored {
            Some("neighbored-5")
        } else if d.size == 3 && d.neighbored {
            Some("neighbored-3")
        } else if d.size == 4 && d.paired && d.one_sided {
            Some("one-sided-paired-4")
        } else {
            None
        }
    });
    let spider = rooted_tree_check("branching-tree-root", t, alg, &["v", "v0", "v1", "v1'", "v2"], &[(0, 1), (1, 2), (2, 3), (1, 4)], &[3, 4], |l| {
        (l.len() >= 8).then_some("at-least-8")
    });
    vec![two_path, three_path, spider]
}

fn p3_colorable(t: &TargetSpace, lx: ColorSet, ly: ColorSet, lz: ColorSet, s1: Sign, s2: Sign) -> bool {
    !ly.difference(t.forbidden_set(s1, lx)).difference(t.forbidden_set(s2, lz)).is_empty()
}

fn same_layer_exception(alg: &ColorAlgebra, cx: usize, cy: usize, path_sign: Sign) -> bool {
    alg.layer(cx) == alg.layer(cy)
        && match path_sign {
            Sign::Pos => alg.side(cx) != alg.side(cy),
            Sign::Neg => alg.side(cx) == alg.side(cy),
        }
}

fn path_lemmas(t: &TargetSpace, alg: &ColorAlgebra, kmax: usize) -> Vec<LemmaReport> {
    let full = alg.full();
    let n5 = alg.neighbored_sets(5);
    let p8 = alg.paired_sets(8);
    let p10 = alg.paired_sets(10);
    let colors = alg.colors();
    let mut out = Vec::new();

    // an edge whose end lists are neighbored 5-sets or paired 8-sets has a
    // sign-preserving pair of colors from different layers
    let mut rep = LemmaReport::new("edge-different-layers");
    let ends: Vec<ColorSet> = n5.iter().chain(&p8).copied().collect();
    for &lx in &ends {
        for &ly in &ends {
            for s in SIGNS {
                let ok = lx.iter().any(|cx| !t.neighbors_with_sign(cx, s).intersection(ly).difference(alg.layer_set(alg.layer(cx))).is_empty());
                rep.check(ok, || format!("L(x)={} L(y)={} sign {s}", braces(t, lx), braces(t, ly)));
            }
        }
    }
    out.push(rep);

    // a path x z y with precolored ends and a full middle list
    let mut colorable = LemmaReport::new("precolored-two-path");
    let mut blocked = LemmaReport::new("precolored-two-path-exceptions-blocked");
    for cx in 0..colors {
        for cy in 0..colors {
            for s1 in SIGNS {
                for s2 in SIGNS {
                    let ok = p3_colorable(t, ColorSet::single(cx), full, ColorSet::single(cy), s1, s2);
                    let desc = || format!("x={} y={} signs {s1}{s2}", t.color_name(cx), t.color_name(cy));
                    if same_layer_exception(alg, cx, cy, s1 * s2) {
                        blocked.check(!ok, desc);
                    } else {
                        colorable.check(ok, desc);
                    }
                }
            }
        }
    }
    out.push(colorable);
    out.push(blocked);

    // three list shapes on a path x y z that always color
    let mut rep = LemmaReport::new("two-path-list-shapes");
    for cx in 0..colors {
        for cz in 0..colors {
            if alg.layer(cx) == alg.layer(cz) {
                continue;
            }
            for s1 in SIGNS {
                for s2 in SIGNS {
                    let ok = p3_colorable(t, ColorSet::single(cx), full, ColorSet::single(cz), s1, s2);
                    clause(&mut rep, "precolored-different-layers", ok, || format!("x={} z={} signs {s1}{s2}", t.color_name(cx), t.color_name(cz)));
                }
            }
        }
    }
    for &ly in &p10 {
        for cx in 0..colors {
            for &lz in &n5 {
                for s1 in SIGNS {
                    for s2 in SIGNS {
                        let ok = p3_colorable(t, ColorSet::single(cx), ly, lz, s1, s2);
                        clause(&mut rep, "precolored-paired-10-neighbored-5", ok, || {
                            format!("x={} L(y)={} L(z)={} signs {s1}{s2}", t.color_name(cx), braces(t, ly), braces(t, lz))
                        });
                    }
                }
            }
        }
    }
    let big = alg.subsets(|s, _| s.len() >= 5);
    for &ly in &big {
        for &lx in &n5 {
            for &lz in &n5 {
                for s1 in SIGNS {
                    for s2 in SIGNS {
                        let ok = p3_colorable(t, lx, ly, lz, s1, s2);
                        clause(&mut rep, "neighbored-5-ends-middle-at-least-5", ok, || {
                            format!("L(x)={} L(y)={} L(z)={} signs {s1}{s2}", braces(t, lx), braces(t, ly), braces(t, lz))
                        });
                    }
                }
            }
        }
    }
    out.push(rep);

    // a neighbored 5-set facing one side has a color with four matching
    // neighbors there
    let mut rep = LemmaReport::new("neighbored-5-against-a-side");
    for &lu in &n5 {
        for side in 0..2 {
            let lv = alg.side_set(side);
            for s in SIGNS {
                let ok = lu.iter().any(|cu| t.neighbors_with_sign(cu, s).intersection(lv).len() >= 4);
                rep.check(ok, || format!("L(u)={} L(v)={} sign {s}", braces(t, lu), braces(t, lv)));
            }
        }
    }
    out.push(rep);

    // any two colors of a layered 6-set (inverted when the path is negative)
    // have a common neighbor with the right signs
    let mut rep = LemmaReport::new("layered-6-two-path");
    for x in alg.subsets(|s, d| s.len() == 6 && d.layered) {
        for alpha in SIGNS {
            for beta in SIGNS {
                let y = if alpha * beta == Sign::Pos { x } else { alg.inverse_set(x) };
                for cx in x.iter() {
                    for cy in y.iter() {
                        let ok = !t.neighbors_with_sign(cx, alpha).intersection(t.neighbors_with_sign(cy, beta)).is_empty();
                        rep.check(ok, || format!("X={} x={} y={} signs {alpha}{beta}", braces(t, x), t.color_name(cx), t.color_name(cy)));
                    }
                }
            }
        }
    }
    out.push(rep);

    out.push(even_paths(t, alg, kmax));
    out
}

/// Paths `v_1 ... v_2k` with a paired 3-set at one end, a one-sided 4-set at
/// the other, and alternately a superset of a neighbored 5-set and a list
/// of at least 10 colors inside.
fn even_paths(t: &TargetSpace, alg: &ColorAlgebra, kmax: usize) -> LemmaReport {
    let n5 = alg.neighbored_sets(5);
    let p3 = alg.paired_sets(3);
    let one_sided_4 = alg.subsets(|s, d| s.len() == 4 && d.one_sided);
    let has_n5 = alg.subsets(|s, _| n5.iter().any(|x| x.is_subset(s)));
    let big = alg.subsets(|s, _| s.len() >= 10);
    let mut rep = LemmaReport::new("even-path-ends");
    for k in 1..=kmax {
        for (case, first, last) in [("paired-3-first", &p3, &one_sided_4), ("one-sided-4-first", &one_sided_4, &p3)] {
            let fams: Vec<Family> = (1..=2 * k)
                .map(|i| {
                    let lists = if i == 1 {
                        first
                    } else if i == 2 * k {
                        last
                    } else if i % 2 == 1 {
                        &has_n5
                    } else {
                        &big
                    };
                    Family::of_lists(i, lists.iter().copied())
                })
                .collect();
            let fam = path_family_all_signs(t, &fams);
            let label = format!("k{k}-{case}");
            let total = fam.total();
            rep.count(&label, total);
            rep.instances += total;
            if let Some(e) = fam.0.get(&0) {
                rep.failures += e.weight;
                if rep.counterexample.is_none() {
                    let lists = super::render_witness(&e.witness, t, &|v| format!("v{v}"));
                    rep.counterexample = Some(format!("{label}: {lists}"));
                }
            }
        }
    }
    rep
}

fn cycle_check(rep: &mut LemmaReport, label: &str, t: &TargetSpace, lists: &[&[ColorSet]]) {
    let fams: Vec<Family> = lists.iter().enumerate().map(|(i, l)| Family::of_lists(i + 1, l.iter().copied())).collect();
    let outcome = cycle_outcome_all_signs(t, &fams);
    rep.count(label, outcome.instances);
    let before = rep.counterexample.is_some();
    let signs = outcome.example.as_ref().and_then(|w| failing_cycle_signs(t, w));
    rep.absorb(outcome, t, &|v| format!("v{v}"));
    if !before {
        if let Some(c) = rep.counterexample.as_mut() {
            *c = format!("{label}: {c} signs {}", signs.unwrap_or_else(|| "?".into()));
        }
    }
}

/// The first sign pattern on `v_1 ... v_n v_1` under which the lists of
/// `w` admit no coloring, found with the list solver.
fn failing_cycle_signs(t: &TargetSpace, w: &super::engine::Witness) -> Option<String> {
    let n = w.len();
    let lists = ListAssignment(w.iter().map(|&(_, l)| ColorSet(l)).collect());
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    signings(n, &edges).into_iter().find_map(|g| {
        let found = list_sp_hom(&g, t, &lists, &SolveOptions::default()).ok()?.found();
        (!found).then(|| {
            let s: Vec<String> = (0..n).map(|i| format!("v{}v{}:{}", i + 1, (i + 1) % n + 1, g.sign(i, (i + 1) % n).expect("edge"))).collect();
            s.join(" ")
        })
    })
}

fn cycle_lemmas(t: &TargetSpace, alg: &ColorAlgebra, kmax: usize) -> Vec<LemmaReport> {
    let full = [alg.full()];
    let n5 = alg.neighbored_sets(5);
    let p10 = alg.paired_sets(10);
    let p8_balanced = alg.subsets(|s, d| s.len() == 8 && d.paired && d.plus == 4);
    let (n5, p10, p8b): (&[ColorSet], &[ColorSet], &[ColorSet]) = (&n5, &p10, &p8_balanced);

    let mut four = LemmaReport::new("four-cycle");
    cycle_check(&mut four, "neighbored-5-paired-10-paired-10-neighbored-5", t, &[n5, p10, p10, n5]);

    let mut even = LemmaReport::new("even-cycles");
    for k in 2..=kmax {
        let len = 2 * k;
        let alternate = |i: usize| if i.is_multiple_of(2) { n5 } else { p10 };
        let case1: Vec<&[ColorSet]> = (1..=len).map(alternate).collect();
        cycle_check(&mut even, &format!("c{len}-case1"), t, &case1);
        let case2: Vec<&[ColorSet]> = (1..=len)
            .map(|i| match i {
                1 => &full[..],
                2 => p8b,
                _ if i == len => n5,
                _ if i % 2 == 0 => p10,
                _ => n5,
            })
            .collect();
        cycle_check(&mut even, &format!("c{len}-case2"), t, &case2);
        let case3: Vec<&[ColorSet]> = (1..=len)
            .map(|i| match i {
                1 => &full[..],
                2 => n5,
                3 => p8b,
                _ if i == len => n5,
                _ if i % 2 == 1 => n5,
                _ => p10,
            })
            .collect();
        cycle_check(&mut even, &format!("c{len}-case3"), t, &case3);
    }

    let mut odd = LemmaReport::new("odd-cycles");
    for k in 1..=kmax {
        let len = 2 * k + 1;
        let case1: Vec<&[ColorSet]> = (1..=len).map(|i| if i % 2 == 0 { n5 } else { p10 }).collect();
        cycle_check(&mut odd, &format!("c{len}-case1"), t, &case1);
        let case2: Vec<&[ColorSet]> = (1..=len)
            .map(|i| match i {
                1 => &full[..],
                _ if i == len => n5,
                _ if i % 2 == 0 => n5,
                _ => p10,
            })
            .collect();
        cycle_check(&mut odd, &format!("c{len}-case2"), t, &case2);
    }
    vec![four, even, odd]
}

fn k8_lemmas(t: &TargetSpace, alg: &ColorAlgebra) -> Vec<LemmaReport> {
    let full = alg.full();
    let colors = alg.colors();
    let mut single = LemmaReport::new("k8-singleton-restriction");
    for c in 0..colors {
        let l = ColorSet::single(c);
        for s in SIGNS {
            let f = t.forbidden_set(s, l);
            let fd = alg.classify(f);
            let desc = || format!("L(x)={} sign {s} F={}", braces(t, l), braces(t, f));
            clause(&mut single, "paired-9", fd.paired && fd.size == 9, desc);
            clause(&mut single, "complement-neighbored-7", alg.is_neighbored(full.difference(f), 7), desc);
        }
    }

    let n5 = alg.neighbored_sets(5);
    let one_sided_6 = alg.subsets(|s, d| s.len() == 6 && d.one_sided);
    let mut rich = LemmaReport::new("k8-rich-list-restriction");
    for mask in 0u64..1 << colors {
        let l = ColorSet(mask);
        let has_n5 = n5.iter().any(|x| x.is_subset(l));
        let has_os6 = one_sided_6.iter().any(|x| x.is_subset(l));
        if !has_n5 && !has_os6 {
            continue;
        }
        for s in SIGNS {
            let f = t.forbidden_set(s, l);
            let fd = alg.classify(f);
            let label = if has_n5 { "contains-neighbored-5" } else { "contains-one-sided-6" };
            clause(&mut rich, label, fd.paired && fd.size <= 2, || format!("L(x)={} sign {s} F={}", braces(t, l), braces(t, f)));
        }
    }

    let mut two_path = LemmaReport::new("k8-precolored-two-path");
    for cx in 0..colors {
        for cy in 0..colors {
            for s1 in SIGNS {
                for s2 in SIGNS {
                    let free = full.difference(t.forbidden_set(s1, ColorSet::single(cx))).difference(t.forbidden_set(s2, ColorSet::single(cy)));
                    let layers = (0..alg.k).filter(|&l| !free.intersection(alg.layer_set(l)).is_empty()).count();
                    let desc = || format!("x={} y={} signs {s1}{s2} free={}", t.color_name(cx), t.color_name(cy), braces(t, free));
                    if same_layer_exception(alg, cx, cy, s1 * s2) {
                        clause(&mut two_path, "exception-empty", free.is_empty(), desc);
                    } else {
                        clause(&mut two_path, "two-layers", layers >= 2, desc);
                    }
                }
            }
        }
    }
    vec![single, rich, two_path]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_path_shortcut_agrees_with_solver() {
        let base = make_k2k_m(3).unwrap();
        let t = base.dsg();
        let alg = t.require_algebra().unwrap();
        let n5 = alg.neighbored_sets(5);
        let p10 = alg.paired_sets(10);
        for (i, &lx) in n5.iter().enumerate().step_by(3) {
            for &ly in p10.iter().take(3) {
                let lz = n5[(i + 5) % n5.len()];
                for s1 in SIGNS {
                    for s2 in SIGNS {
                        let g = SignedGraph::new(3, [(0, 1, s1), (1, 2, s2)]).unwrap();
                        let lists = ListAssignment(vec![lx, ly, lz]);
                        let solver = list_sp_hom(&g, t, &lists, &SolveOptions::default()).unwrap().found();
                        assert_eq!(solver, p3_colorable(t, lx, ly, lz, s1, s2));
                    }
                }
            }
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(verify_suite("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn edge_restriction_counts() {
        let r = verify_suite("edge-restriction", &SuiteParams::default()).unwrap();
        assert!(r.passed(), "{}", r.render());
        let table = &r.lemmas[0];
        let count = |label: &str| table.counts.iter().find(|(l, _)| l == label).map(|c| c.1);
        assert_eq!(count("singleton"), Some(24));
        assert_eq!(count("empty"), Some(2));
        assert_eq!(count("paired-8"), Some(30));
    }
}
