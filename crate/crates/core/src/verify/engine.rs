//! Exhaustive list-coloring over families of lists.
//!
//! Every vertex carries a family: the distinct lists it may receive, each
//! with the number of instances producing it and the first such instance.
//! Tree branches are folded into their parent with `L(y) \ F_{L(x)}(y)`, a
//! remaining cycle is settled by a reachability relation, and any other core
//! is enumerated with the list solver.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::hom::{list_sp_hom, ListAssignment, SolveOptions};
use crate::targets::{ColorSet, TargetSpace};

/// Choices made for the vertices of an instance: `(vertex, list)`.
pub type Witness = Vec<(usize, u64)>;

#[derive(Clone, Debug)]
pub struct Entry {
    pub weight: u128,
    pub witness: Witness,
}

/// Distinct lists with their multiplicities.
#[derive(Clone, Debug, Default)]
pub struct Family(pub BTreeMap<u64, Entry>);

impl Family {
    /// Each list counts once and is its own witness at `v`.
    pub fn of_lists(v: usize, lists: impl IntoIterator<Item = ColorSet>) -> Family {
        let mut f = Family::default();
        for l in lists {
            f.add(l.0, 1, vec![(v, l.0)]);
        }
        f
    }

    /// The single list `l` with no recorded choice.
    pub fn fixed(l: ColorSet) -> Family {
        let mut f = Family::default();
        f.add(l.0, 1, Vec::new());
        f
    }

    fn add(&mut self, key: u64, weight: u128, witness: Witness) {
        self.0.entry(key).and_modify(|e| e.weight += weight).or_insert(Entry { weight, witness });
    }

    pub fn total(&self) -> u128 {
        self.0.values().map(|e| e.weight).sum()
    }

    pub fn keys(&self) -> impl Iterator<Item = ColorSet> + '_ {
        self.0.keys().map(|&k| ColorSet(k))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn closed_under(&self, f: impl Fn(ColorSet) -> ColorSet) -> bool {
        self.0.keys().all(|&k| self.0.contains_key(&f(ColorSet(k)).0))
    }
}

/// Instances examined, how many cannot be colored, and the first of them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub instances: u128,
    pub failures: u128,
    pub example: Option<Witness>,
}

impl Outcome {
    pub fn merge(&mut self, other: Outcome) {
        self.instances += other.instances;
        self.failures += other.failures;
        if self.example.is_none() {
            self.example = other.example;
        }
    }
}

fn concat(a: &Witness, b: &Witness) -> Witness {
    let mut w = a.clone();
    w.extend_from_slice(b);
    w.sort_unstable();
    w
}

/// `{L(y) \ F_A(y) : L(y) ∈ fy, A ∈ fx}` for an edge of sign `s`, added
/// into `out`.
fn fold_leaf_into(out: &mut Family, t: &TargetSpace, fy: &Family, fx: &Family, s: Sign) {
    // many lists forbid the same set; group them first
    let mut forb: BTreeMap<u64, Entry> = BTreeMap::new();
    for (&a, e) in &fx.0 {
        forb.entry(t.forbidden_set(s, ColorSet(a)).0).and_modify(|x| x.weight += e.weight).or_insert_with(|| e.clone());
    }
    for (&ly, ey) in &fy.0 {
        for (&f, ex) in &forb {
            out.add(ly & !f, ey.weight * ex.weight, concat(&ey.witness, &ex.witness));
        }
    }
}

fn fold_leaf(t: &TargetSpace, fy: &Family, fx: &Family, s: Sign) -> Family {
    let mut out = Family::default();
    fold_leaf_into(&mut out, t, fy, fx, s);
    out
}

/// Admissible-list family at the last vertex of the path `v_1 ... v_n`
/// rooted there, over every choice of lists and of edge signs.
pub fn path_family_all_signs(t: &TargetSpace, fams: &[Family]) -> Family {
    let mut acc = fams[0].clone();
    for f in &fams[1..] {
        let mut next = Family::default();
        for s in [Sign::Pos, Sign::Neg] {
            fold_leaf_into(&mut next, t, f, &acc, s);
        }
        acc = next;
    }
    acc
}

/// Uncolorable instances of the cycle `v_1 ... v_n v_1` over every choice
/// of lists and of edge signs.
pub fn cycle_outcome_all_signs(t: &TargetSpace, fams: &[Family]) -> Outcome {
    let both = vec![Sign::Pos, Sign::Neg];
    cycle_outcome_with(t, fams, &vec![both; fams.len()])
}

/// Folds every vertex of degree one (except `keep`) into its neighbor until
/// none is left. Returns the surviving vertices and their families.
fn peel(t: &TargetSpace, g: &SignedGraph, mut fams: Vec<Family>, keep: Option<usize>) -> (Vec<bool>, Vec<Family>) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| deg[v] == 1 && Some(v) != keep).collect();
    while let Some(x) = leaves.pop_first() {
        let Some(&(y, s)) = g.neighbors(x).iter().find(|&&(y, _)| alive[y]) else { continue };
        let fx = std::mem::take(&mut fams[x]);
        fams[y] = fold_leaf(t, &fams[y], &fx, s);
        alive[x] = false;
        deg[x] = 0;
        deg[y] -= 1;
        if deg[y] == 1 && Some(y) != keep {
            leaves.insert(y);
        } else if deg[y] == 0 {
            leaves.remove(&y);
        }
    }
    (alive, fams)
}

/// Family of admissible lists `L^a(root)` of a tree.
pub fn root_family(t: &TargetSpace, g: &SignedGraph, fams: Vec<Family>, root: usize) -> Result<Family> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let (_, mut fams) = peel(t, g, fams, Some(root));
    Ok(std::mem::take(&mut fams[root]))
}

/// Counts the instances (one list per vertex from its family) that admit
/// no coloring. The graph must be connected.
pub fn evaluate(t: &TargetSpace, g: &SignedGraph, fams: Vec<Family>, product_limit: u128) -> Result<Outcome> {
    if !g.is_connected() {
        return Err(Error::InvalidParameter("list instances must be connected".into()));
    }
    if fams.len() != g.n() {
        return Err(Error::ListMismatch(format!("{} families for {} vertices", fams.len(), g.n())));
    }
    let (alive, fams) = peel(t, g, fams, None);
    let core: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    if core.len() == 1 {
        let f = &fams[core[0]];
        let empty = f.0.get(&0);
        return Ok(Outcome { instances: f.total(), failures: empty.map_or(0, |e| e.weight), example: empty.map(|e| e.witness.clone()) });
    }
    let core_graph = g.induced(&core);
    let core_fams: Vec<Family> = core.iter().map(|&v| fams[v].clone()).collect();
    if (0..core.len()).all(|v| core_graph.degree(v) == 2) {
        Ok(cycle_outcome(t, &core_graph, &core_fams))
    } else {
        product_outcome(t, &core_graph, &core_fams, product_limit)
    }
}

/// Vertices of a 2-regular connected graph in cyclic order, with the sign
/// of the edge from each to the next.
fn cycle_order(g: &SignedGraph) -> Vec<(usize, Sign)> {
    let mut order = Vec::with_capacity(g.n());
    let (mut prev, mut cur) = (usize::MAX, 0);
    loop {
        let &(next, s) = g.neighbors(cur).iter().find(|&&(w, _)| w != prev).expect("2-regular");
        order.push((cur, s));
        prev = cur;
        cur = next;
        if cur == 0 {
            return order;
        }
    }
}

type Relation = Vec<(u8, u64)>;

fn cycle_outcome(t: &TargetSpace, g: &SignedGraph, fams: &[Family]) -> Outcome {
    let order = cycle_order(g);
    let ordered: Vec<Family> = order.iter().map(|&(v, _)| fams[v].clone()).collect();
    let signs: Vec<Vec<Sign>> = order.iter().map(|&(_, s)| vec![s]).collect();
    cycle_outcome_with(t, &ordered, &signs)
}

/// For each start color `a` of `v_1`, the set of colors `v_i` can take
/// along a colored path from `v_1`; an instance is colorable iff some `a`
/// reaches a color joined back to `a` by the closing edge. `signs[i]` are
/// the signs allowed on the edge from `v_i` to `v_{i+1}` (cyclically); each
/// counts as a separate instance.
///
/// Each list of `v_1` is an independent chunk; chunks run in parallel and
/// merge in list order, so the result does not depend on scheduling.
fn cycle_outcome_with(t: &TargetSpace, fams: &[Family], signs: &[Vec<Sign>]) -> Outcome {
    let starts: Vec<(&u64, &Entry)> = fams[0].0.iter().collect();
    let chunks: Vec<Outcome> = starts.par_iter().map(|&(&l0, e0)| cycle_chunk(t, fams, signs, l0, e0)).collect();
    let mut outcome = Outcome::default();
    for c in chunks {
        outcome.merge(c);
    }
    outcome
}

fn cycle_chunk(t: &TargetSpace, fams: &[Family], signs: &[Vec<Sign>], l0: u64, e0: &Entry) -> Outcome {
    let n = fams.len();
    let mut outcome = Outcome::default();
    {
        let start: Relation = ColorSet(l0).iter().map(|a| (a as u8, 1u64 << a)).collect();
        let mut states: BTreeMap<Relation, Entry> = BTreeMap::new();
        states.insert(start, Entry { weight: e0.weight, witness: e0.witness.clone() });
        for i in 1..n {
            let mut next: BTreeMap<Relation, Entry> = BTreeMap::new();
            for &s in &signs[i - 1] {
                for (rel, e) in &states {
                    let reach: Vec<(u8, u64)> = rel.iter().map(|&(a, r)| (a, t.support(ColorSet(r), s).0)).collect();
                    for (&lv, ev) in &fams[i].0 {
                        let nrel: Relation = reach.iter().map(|&(a, r)| (a, r & lv)).filter(|&(_, r)| r != 0).collect();
                        let w = e.weight * ev.weight;
                        next.entry(nrel).and_modify(|x| x.weight += w).or_insert_with(|| Entry { weight: w, witness: concat(&e.witness, &ev.witness) });
                    }
                }
            }
            states = next;
        }
        for &closing in &signs[n - 1] {
            for (rel, e) in &states {
                outcome.instances += e.weight;
                let ok = rel.iter().any(|&(a, r)| r & t.neighbors_with_sign(a as usize, closing).0 != 0);
                if !ok {
                    outcome.failures += e.weight;
                    if outcome.example.is_none() {
                        outcome.example = Some(e.witness.clone());
                    }
                }
            }
        }
    }
    outcome
}

fn product_outcome(t: &TargetSpace, g: &SignedGraph, fams: &[Family], limit: u128) -> Result<Outcome> {
    let size: u128 = fams.iter().map(|f| f.len() as u128).product();
    if size > limit {
        return Err(Error::InvalidParameter(format!("{size} list combinations exceed the limit {limit}")));
    }
    let entries: Vec<Vec<(&u64, &Entry)>> = fams.iter().map(|f| f.0.iter().collect()).collect();
    let mut outcome = Outcome::default();
    let mut idx = vec![0usize; fams.len()];
    if entries.iter().any(|e| e.is_empty()) {
        return Ok(outcome);
    }
    loop {
        let lists = ListAssignment(idx.iter().enumerate().map(|(v, &i)| ColorSet(*entries[v][i].0)).collect());
        let weight: u128 = idx.iter().enumerate().map(|(v, &i)| entries[v][i].1.weight).product();
        outcome.instances += weight;
        let colorable = !lists.0.iter().any(|l| l.is_empty()) && list_sp_hom(g, t, &lists, &SolveOptions::default())?.found();
        if !colorable {
            outcome.failures += weight;
            if outcome.example.is_none() {
                let mut w = Witness::new();
                for (v, &i) in idx.iter().enumerate() {
                    w.extend_from_slice(&entries[v][i].1.witness);
                }
                w.sort_unstable();
                outcome.example = Some(w);
            }
        }
        // odometer
        let mut v = 0;
        loop {
            if v == idx.len() {
                return Ok(outcome);
            }
            idx[v] += 1;
            if idx[v] < entries[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Every assignment of the given lists, colored by brute force through the
/// list solver. Cross-check for [`evaluate`].
pub fn brute_force(t: &TargetSpace, g: &SignedGraph, fams: &[Vec<ColorSet>]) -> Result<Outcome> {
    let families: Vec<Family> = fams.iter().enumerate().map(|(v, ls)| Family::of_lists(v, ls.iter().copied())).collect();
    product_outcome(t, g, &families, u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::make_k2k_m;

    fn singletons(t: &TargetSpace, v: usize) -> Family {
        Family::of_lists(v, (0..t.n()).map(ColorSet::single))
    }

    #[test]
    fn folding_matches_brute_force_on_paths_and_cycles() {
        let k6 = make_k2k_m(3).unwrap();
        let t = k6.dsg();
        let full = t.all_colors();
        // path b1 - u - v - b2 and the 4-cycle b - u - v - w - u with a pendant
        let shapes = [
            SignedGraph::new(4, [(0, 1, Sign::Pos), (1, 2, Sign::Neg), (2, 3, Sign::Pos)]).unwrap(),
            SignedGraph::new(5, [(0, 1, Sign::Pos), (1, 2, Sign::Pos), (2, 3, Sign::Neg), (3, 4, Sign::Pos), (4, 1, Sign::Pos)]).unwrap(),
            SignedGraph::new(5, [(0, 1, Sign::Pos), (1, 2, Sign::Neg), (2, 0, Sign::Pos), (2, 3, Sign::Pos), (3, 4, Sign::Neg)]).unwrap(),
        ];
        for g in &shapes {
            for boundary in [vec![0usize], vec![0, g.n() - 1]] {
                let fams: Vec<Family> = (0..g.n()).map(|v| if boundary.contains(&v) { singletons(t, v) } else { Family::fixed(full) }).collect();
                let lists: Vec<Vec<ColorSet>> =
                    (0..g.n()).map(|v| if boundary.contains(&v) { (0..12).map(ColorSet::single).collect() } else { vec![full] }).collect();
                let fast = evaluate(t, g, fams, 1 << 20).unwrap();
                let slow = brute_force(t, g, &lists).unwrap();
                assert_eq!((fast.instances, fast.failures), (slow.instances, slow.failures));
            }
        }
    }

    #[test]
    fn empty_list_fails() {
        let k6 = make_k2k_m(3).unwrap();
        let t = k6.dsg();
        let g = SignedGraph::new(2, [(0, 1, Sign::Pos)]).unwrap();
        let out = evaluate(t, &g, vec![Family::fixed(ColorSet::EMPTY), Family::fixed(t.all_colors())], 10).unwrap();
        assert_eq!((out.instances, out.failures), (1, 1));
    }
}
