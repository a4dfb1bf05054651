//! Edge-sign preserving, switch and list homomorphisms.
//!
//! The solver is a backtracking search over bitmask domains with
//! arc-consistency after every assignment. Arc-consistency only deletes
//! colors that occur in no solution, so a static vertex order with ascending
//! values reaches the lexicographically least mapping first.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::graph::{girth_vector, switch, Sign, SignedGraph, SwitchSet};
use crate::targets::{make_kkk_m, ColorSet, TargetKind, TargetSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Found,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Sp,
    Switch,
    List,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Sp => "SP",
            Mode::Switch => "SWITCH",
            Mode::List => "LIST",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub propagations: u64,
}

impl SearchStats {
    fn absorb(&mut self, o: SearchStats) {
        self.nodes += o.nodes;
        self.propagations += o.propagations;
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Static vertex order, so the returned mapping is the lexicographically
    /// least one.
    pub canonical: bool,
    /// Maximum number of search nodes; exceeding it is
    /// [`Error::BudgetExceeded`], never a `NONE`.
    pub node_budget: Option<u64>,
}

impl SolveOptions {
    pub fn canonical() -> Self {
        SolveOptions { canonical: true, node_budget: None }
    }
}

/// Outcome of a solve. In `SWITCH` mode the mapping goes to the base target
/// and is edge-sign preserving on `switch(g, switch_set)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomResult {
    pub status: Status,
    pub mode: Mode,
    pub mapping: Option<Vec<usize>>,
    pub switch_set: Option<SwitchSet>,
    pub stats: SearchStats,
}

impl HomResult {
    fn none(mode: Mode, stats: SearchStats) -> Self {
        HomResult { status: Status::None, mode, mapping: None, switch_set: None, stats }
    }

    pub fn found(&self) -> bool {
        self.status == Status::Found
    }

    pub fn status_str(&self) -> &'static str {
        match self.status {
            Status::Found => "FOUND",
            Status::None => "NONE",
        }
    }

    /// `status: ...` followed by `<v> -> <color>` lines and, in switch mode,
    /// `switch: ...`.
    pub fn report(&self, t: &TargetSpace) -> String {
        let mut out = format!("status: {}\nmode: {}\n", self.status_str(), self.mode.as_str());
        if let Some(map) = &self.mapping {
            for (v, &c) in map.iter().enumerate() {
                let _ = writeln!(out, "{} -> {}", v + 1, t.color_name(c));
            }
        }
        if let Some(x) = &self.switch_set {
            out.push_str("switch:");
            for v in x.vertices() {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        out
    }

    /// One `key=value` per line.
    pub fn report_kv(&self, t: &TargetSpace) -> String {
        let mut out = format!("status={}\nmode={}\n", self.status_str(), self.mode.as_str());
        if let Some(map) = &self.mapping {
            for (v, &c) in map.iter().enumerate() {
                let _ = writeln!(out, "map.{}={}", v + 1, t.color_name(c));
            }
        }
        if let Some(x) = &self.switch_set {
            let parts: Vec<String> = x.vertices().iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(out, "switch={}", parts.join(","));
        }
        let _ = writeln!(out, "nodes={}\npropagations={}", self.stats.nodes, self.stats.propagations);
        out
    }
}

/// Per-vertex color lists over one target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment(pub Vec<ColorSet>);

impl ListAssignment {
    pub fn full(n: usize, t: &TargetSpace) -> Self {
        ListAssignment(vec![t.all_colors(); n])
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `L^X`: lists on `x` replaced by their inverses.
    pub fn switched(&self, x: &SwitchSet, t: &TargetSpace) -> Result<ListAssignment> {
        if t.inverse(0).is_none() {
            return Err(Error::NotADsgTarget(t.name().to_string()));
        }
        let mut out = self.0.clone();
        for &v in x.vertices() {
            out[v] = ColorSet::from_colors(out[v].iter().map(|c| c ^ 1));
        }
        Ok(ListAssignment(out))
    }

    fn check(&self, g: &SignedGraph, t: &TargetSpace) -> Result<()> {
        if self.0.len() != g.n() {
            return Err(Error::ListMismatch(format!("{} lists for {} vertices", self.0.len(), g.n())));
        }
        let all = t.all_colors();
        if let Some(v) = self.0.iter().position(|l| !l.is_subset(all)) {
            return Err(Error::ListMismatch(format!("list of vertex {} has colors outside {}", v + 1, t.name())));
        }
        Ok(())
    }
}

static NOHOM_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of girth-vector checks run on found mappings since process start.
pub fn nohom_checks() -> u64 {
    NOHOM_CHECKS.load(Ordering::Relaxed)
}

/// Colors forbidden at `x` by an edge `xy` of sign `s`, given the list at `y`.
pub fn forbidden_set(t: &TargetSpace, s: Sign, neighbor_list: ColorSet) -> ColorSet {
    t.forbidden_set(s, neighbor_list)
}

/// Admissible lists of every vertex of a tree rooted at `root`: a color of
/// `L(x)` survives when the subtree below `x` can be colored with it.
pub fn admissible_sets(g: &SignedGraph, root: usize, lists: &ListAssignment, t: &TargetSpace) -> Result<ListAssignment> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    if root >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: root + 1, n: g.n() });
    }
    if !t.supports_sets() {
        return Err(Error::TargetTooLarge(t.n()));
    }
    lists.check(g, t)?;
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; g.n()];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for &(y, _) in g.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
        i += 1;
    }
    let mut adm = lists.0.clone();
    for &x in order.iter().rev() {
        for &(y, s) in g.neighbors(x) {
            if parent[y] == x && y != root {
                adm[x] = adm[x].difference(t.forbidden_set(s, adm[y]));
            }
        }
    }
    Ok(ListAssignment(adm))
}

/// Whether `mapping` sends every edge to an edge of the same sign.
pub fn is_sp_mapping(g: &SignedGraph, t: &TargetSpace, mapping: &[usize]) -> bool {
    mapping.len() == g.n() && mapping.iter().all(|&c| c < t.n()) && g.edges().iter().all(|e| t.sign(mapping[e.u], mapping[e.v]) == Some(e.sign))
}

fn certify(g: &SignedGraph, t: &TargetSpace, mapping: &[usize], lists: Option<&ListAssignment>) -> Result<()> {
    if !is_sp_mapping(g, t, mapping) {
        return Err(Error::Invariant("solver returned a mapping that breaks an edge".into()));
    }
    if let Some(l) = lists {
        if let Some(v) = (0..g.n()).find(|&v| !l.get(v).contains(mapping[v])) {
            return Err(Error::Invariant(format!("vertex {} mapped outside its list", v + 1)));
        }
    }
    nohom_check(g, t)
}

/// A homomorphism can only shorten closed walks of each type.
fn nohom_check(g: &SignedGraph, t: &TargetSpace) -> Result<()> {
    NOHOM_CHECKS.fetch_add(1, Ordering::Relaxed);
    let gg = girth_vector(g);
    let gt = t.girth();
    if gg.dominates(&gt) {
        Ok(())
    } else {
        Err(Error::Invariant(format!("girth vector {gg} of a mapped graph is below the target's {gt}")))
    }
}

struct Search<'a> {
    g: &'a SignedGraph,
    t: &'a TargetSpace,
    canonical: bool,
    budget: Option<u64>,
    stats: SearchStats,
}

impl Search<'_> {
    fn propagate(&mut self, dom: &mut [u64], seeds: impl IntoIterator<Item = usize>) -> bool {
        let mut queued = vec![false; dom.len()];
        let mut queue = VecDeque::new();
        for v in seeds {
            if !queued[v] {
                queued[v] = true;
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            queued[v] = false;
            for &(u, s) in self.g.neighbors(v) {
                self.stats.propagations += 1;
                let sup = self.t.support(ColorSet(dom[v]), s).0;
                let nd = dom[u] & sup;
                if nd != dom[u] {
                    if nd == 0 {
                        return false;
                    }
                    dom[u] = nd;
                    if !queued[u] {
                        queued[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        true
    }

    fn pick(&self, dom: &[u64]) -> Option<usize> {
        if self.canonical {
            return dom.iter().position(|d| d.count_ones() > 1);
        }
        let mut best: Option<(u32, usize)> = None;
        for (v, d) in dom.iter().enumerate() {
            let c = d.count_ones();
            if c > 1 && best.is_none_or(|(bc, _)| c < bc) {
                best = Some((c, v));
            }
        }
        best.map(|(_, v)| v)
    }

    /// Depth-first search; `sink` returns `true` to stop. Returns whether the
    /// search was stopped.
    fn dfs(&mut self, dom: Vec<u64>, sink: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<bool> {
        let Some(var) = self.pick(&dom) else {
            let map = dom.iter().map(|d| d.trailing_zeros() as usize).collect();
            return Ok(sink(map));
        };
        for c in ColorSet(dom[var]).iter() {
            self.stats.nodes += 1;
            if let Some(b) = self.budget {
                if self.stats.nodes > b {
                    return Err(Error::BudgetExceeded { budget: b });
                }
            }
            let mut next = dom.clone();
            next[var] = 1 << c;
            if self.propagate(&mut next, [var]) && self.dfs(next, sink)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn run(&mut self, lists: &[ColorSet], sink: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<()> {
        let mut dom: Vec<u64> = lists.iter().map(|l| l.0).collect();
        if dom.contains(&0) {
            return Ok(());
        }
        if self.propagate(&mut dom, 0..self.g.n()) {
            self.dfs(dom, sink)?;
        }
        Ok(())
    }
}

/// First mapping of `g` into `t` within `lists`, component by component.
fn solve_first(g: &SignedGraph, t: &TargetSpace, lists: &ListAssignment, opts: &SolveOptions) -> Result<(Option<Vec<usize>>, SearchStats)> {
    if !t.supports_sets() {
        return Err(Error::TargetTooLarge(t.n()));
    }
    lists.check(g, t)?;
    let mut stats = SearchStats::default();
    let mut mapping = vec![0usize; g.n()];
    for comp in g.components() {
        let sub = g.induced(&comp);
        let sub_lists: Vec<ColorSet> = comp.iter().map(|&v| lists.get(v)).collect();
        let budget = opts.node_budget.map(|b| b.saturating_sub(stats.nodes));
        let mut search = Search { g: &sub, t, canonical: opts.canonical, budget, stats: SearchStats::default() };
        let mut found = None;
        let outcome = search.run(&sub_lists, &mut |m| {
            found = Some(m);
            true
        });
        stats.absorb(search.stats);
        if let Err(Error::BudgetExceeded { .. }) = outcome {
            return Err(Error::BudgetExceeded { budget: opts.node_budget.unwrap_or(0) });
        }
        outcome?;
        match found {
            Some(m) => {
                for (i, &v) in comp.iter().enumerate() {
                    mapping[v] = m[i];
                }
            }
            None => return Ok((None, stats)),
        }
    }
    Ok((Some(mapping), stats))
}

/// Edge-sign preserving homomorphism of `g` to `t`.
pub fn sp_hom(g: &SignedGraph, t: &TargetSpace, opts: &SolveOptions) -> Result<HomResult> {
    let lists = ListAssignment::full(g.n(), t);
    let (found, stats) = solve_first(g, t, &lists, opts)?;
    match found {
        Some(m) => {
            certify(g, t, &m, None)?;
            Ok(HomResult { status: Status::Found, mode: Mode::Sp, mapping: Some(m), switch_set: None, stats })
        }
        None => Ok(HomResult::none(Mode::Sp, stats)),
    }
}

/// Splits a mapping into `DSG(t)` into a switch set (vertices on `-`
/// colors) and a mapping to `t`.
fn project(mapping: &[usize]) -> (SwitchSet, Vec<usize>) {
    let x = SwitchSet::new((0..mapping.len()).filter(|&v| mapping[v] % 2 == 1));
    (x, mapping.iter().map(|c| c / 2).collect())
}

fn switch_result(g: &SignedGraph, t: &TargetSpace, dsg_map: &[usize], stats: SearchStats) -> Result<HomResult> {
    let (x, map) = project(dsg_map);
    let switched = switch(g, &x)?;
    if !is_sp_mapping(&switched, t, &map) {
        return Err(Error::Invariant("projected switch witness is not edge-sign preserving".into()));
    }
    nohom_check(g, t)?;
    Ok(HomResult { status: Status::Found, mode: Mode::Switch, mapping: Some(map), switch_set: Some(x), stats })
}

/// Switch homomorphism of `g` to `t`, decided as an edge-sign preserving
/// homomorphism into `DSG(t)`.
///
/// The witness switches exactly the vertices sent to `-` colors. This is
/// one convention among the switching-equivalent witnesses.
pub fn switch_hom(g: &SignedGraph, t: &TargetSpace, opts: &SolveOptions) -> Result<HomResult> {
    let d = t.dsg();
    let r = sp_hom(g, d, opts)?;
    match &r.mapping {
        Some(m) => switch_result(g, t, m, r.stats),
        None => Ok(HomResult::none(Mode::Switch, r.stats)),
    }
}

/// Edge-sign preserving homomorphism with `φ(v) ∈ L(v)`.
///
/// Without `canonical`, the instance is first switched so a spanning forest
/// is all-positive, with the lists on the switched vertices inverted; the
/// answer is mapped back by inverting the same vertices. Colorability is
/// invariant under this move on double switching targets.
pub fn list_sp_hom(g: &SignedGraph, t: &TargetSpace, lists: &ListAssignment, opts: &SolveOptions) -> Result<HomResult> {
    lists.check(g, t)?;
    let normalize = !opts.canonical && t.inverse(0).is_some();
    let x = if normalize { g.forest_normalizer() } else { SwitchSet::empty() };
    let (g2, l2) = if x.is_empty() { (g.clone(), lists.clone()) } else { (switch(g, &x)?, lists.switched(&x, t)?) };
    let (found, stats) = solve_first(&g2, t, &l2, opts)?;
    match found {
        Some(mut m) => {
            for &v in x.vertices() {
                m[v] ^= 1;
            }
            certify(g, t, &m, Some(lists))?;
            Ok(HomResult { status: Status::Found, mode: Mode::List, mapping: Some(m), switch_set: None, stats })
        }
        None => Ok(HomResult::none(Mode::List, stats)),
    }
}

/// All solutions in lexicographic order of the underlying edge-sign
/// preserving mapping (into `t` for `SP`, into `DSG(t)` for `SWITCH`),
/// truncated at `cap`.
pub fn enumerate_homs(g: &SignedGraph, t: &TargetSpace, mode: Mode, cap: usize) -> Result<Vec<HomResult>> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let target = match mode {
        Mode::Sp => t,
        Mode::Switch => t.dsg(),
        Mode::List => return Err(Error::InvalidParameter("enumeration runs in SP or SWITCH mode".into())),
    };
    if !target.supports_sets() {
        return Err(Error::TargetTooLarge(target.n()));
    }
    let lists = ListAssignment::full(g.n(), target);
    let mut search = Search { g, t: target, canonical: true, budget: None, stats: SearchStats::default() };
    let mut raw = Vec::new();
    search.run(&lists.0, &mut |m| {
        raw.push(m);
        raw.len() >= cap
    })?;
    raw.into_iter()
        .map(|m| match mode {
            Mode::Sp => {
                certify(g, t, &m, None)?;
                Ok(HomResult { status: Status::Found, mode, mapping: Some(m), switch_set: None, stats: SearchStats::default() })
            }
            _ => switch_result(g, t, &m, SearchStats::default()),
        })
        .collect()
}

/// Turns a mapping of a bipartite `g` into `(K_2k, M)` into a mapping into
/// `(K_k,k, M)`: a vertex whose image lies in the wrong part is sent to the
/// matched partner of its image. The part of `g` holding the smallest vertex
/// of each component goes to the `a` side.
pub fn fold_bipartite(g: &SignedGraph, t2k: &TargetSpace, res: &HomResult) -> Result<HomResult> {
    let TargetKind::K2kM(k) = *t2k.kind() else {
        return Err(Error::InvalidParameter(format!("{} is not a complete target with a matching", t2k.name())));
    };
    let side = g.bipartition().ok_or(Error::NotBipartite)?;
    let map = res.mapping.as_ref().ok_or_else(|| Error::InvalidMapping("no mapping to fold".into()))?;
    let guest = match (&res.mode, &res.switch_set) {
        (Mode::Switch, Some(x)) => switch(g, x)?,
        (Mode::Sp, _) | (Mode::List, _) => g.clone(),
        _ => return Err(Error::InvalidMapping("switch mode result without switch set".into())),
    };
    if !is_sp_mapping(&guest, t2k, map) {
        return Err(Error::InvalidMapping(format!("not a valid mapping into {}", t2k.name())));
    }
    let folded: Vec<usize> = map.iter().enumerate().map(|(v, &c)| if (c % 2 == 1) != side[v] { c ^ 1 } else { c }).collect();
    let kkk = make_kkk_m(k.max(2))?;
    if k < 2 || !is_sp_mapping(&guest, &kkk, &folded) {
        return Err(Error::Invariant("folded mapping is not valid".into()));
    }
    nohom_check(g, &kkk)?;
    Ok(HomResult { status: Status::Found, mode: res.mode, mapping: Some(folded), switch_set: res.switch_set.clone(), stats: res.stats })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::targets::{make_k2k_m, ColorSet};

    fn k6() -> TargetSpace {
        make_k2k_m(3).unwrap()
    }

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, signs[0]), (1, 2, signs[1]), (0, 2, signs[2])]).unwrap()
    }

    #[test]
    fn positive_triangle_maps_canonically() {
        let r = sp_hom(&triangle([Sign::Pos; 3]), &k6(), &SolveOptions::canonical()).unwrap();
        assert_eq!(r.mapping, Some(vec![0, 2, 4]));
    }

    #[test]
    fn two_negative_triangle_has_no_sp_map() {
        let g = triangle([Sign::Neg, Sign::Neg, Sign::Pos]);
        assert!(!sp_hom(&g, &k6(), &SolveOptions::default()).unwrap().found());
        let r = switch_hom(&g, &k6(), &SolveOptions::canonical()).unwrap();
        assert!(r.found());
        // switching at the shared vertex of the two negative edges
        let x = r.switch_set.clone().unwrap();
        let h = switch(&g, &x).unwrap();
        assert!(is_sp_mapping(&h, &k6(), r.mapping.as_ref().unwrap()));
    }

    #[test]
    fn single_negative_edge() {
        let g = SignedGraph::new(2, [(0, 1, Sign::Neg)]).unwrap();
        let r = sp_hom(&g, &k6(), &SolveOptions::canonical()).unwrap();
        assert_eq!(r.mapping, Some(vec![0, 1]));
    }

    #[test]
    fn identity_switch_map() {
        let t = k6();
        let r = switch_hom(t.graph(), &t, &SolveOptions::canonical()).unwrap();
        assert_eq!(r.mapping, Some((0..6).collect()));
        assert_eq!(r.switch_set, Some(SwitchSet::empty()));
    }

    #[test]
    fn empty_list_and_obstructed_path() {
        let t = k6();
        let d = t.dsg();
        let g = SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap();
        let mut l = ListAssignment::full(3, d);
        l.0[0] = ColorSet::EMPTY;
        assert!(!list_sp_hom(&g, d, &l, &SolveOptions::default()).unwrap().found());
        let mut l = ListAssignment::full(3, d);
        l.0[0] = ColorSet::single(d.color_by_name("1+").unwrap());
        l.0[2] = ColorSet::single(d.color_by_name("2-").unwrap());
        assert!(!list_sp_hom(&g, d, &l, &SolveOptions::default()).unwrap().found());
        l.0[2] = ColorSet::single(d.color_by_name("3-").unwrap());
        assert!(list_sp_hom(&g, d, &l, &SolveOptions::default()).unwrap().found());
    }

    #[test]
    fn wrong_list_length_is_rejected() {
        let t = k6();
        let g = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let l = ListAssignment(vec![ColorSet::full(12)]);
        assert!(matches!(list_sp_hom(&g, t.dsg(), &l, &SolveOptions::default()), Err(Error::ListMismatch(_))));
        let l = ListAssignment(vec![ColorSet::full(13); 2]);
        assert!(matches!(list_sp_hom(&g, t.dsg(), &l, &SolveOptions::default()), Err(Error::ListMismatch(_))));
    }

    #[test]
    fn enumeration_counts() {
        let k2 = TargetSpace::custom(SignedGraph::unsigned(2, [(0, 1)]).unwrap(), "k2");
        let edge = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        assert_eq!(enumerate_homs(&edge, &k2, Mode::Sp, 100).unwrap().len(), 2);
        let t = k6();
        let tri = triangle([Sign::Pos; 3]);
        let all = enumerate_homs(&tri, &t, Mode::Sp, 1000).unwrap();
        let brute = (0..6).flat_map(|a| (0..6).flat_map(move |b| (0..6).map(move |c| [a, b, c]))).filter(|m| is_sp_mapping(&tri, &t, m)).count();
        assert_eq!(all.len(), brute);
        assert_eq!(brute, 48);
        let maps: Vec<_> = all.iter().map(|r| r.mapping.clone().unwrap()).collect();
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
        assert_eq!(enumerate_homs(&tri, &t, Mode::Sp, 5).unwrap().len(), 5);
    }

    #[test]
    fn budget_is_not_none() {
        let t = k6();
        let g = SignedGraph::unsigned(6, (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)))).unwrap();
        let opts = SolveOptions { canonical: false, node_budget: Some(3) };
        assert!(matches!(sp_hom(&g, &t, &opts), Err(Error::BudgetExceeded { budget: 3 })));
    }

    #[test]
    fn admissible_sets_on_small_trees() {
        let t = k6();
        let d = t.dsg();
        let single = SignedGraph::unsigned(1, []).unwrap();
        let l = ListAssignment(vec![ColorSet(0b101)]);
        assert_eq!(admissible_sets(&single, 0, &l, d).unwrap().get(0), ColorSet(0b101));
        let c3 = SignedGraph::unsigned(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(admissible_sets(&c3, 0, &ListAssignment::full(3, d), d), Err(Error::NotATree));
        let path = SignedGraph::unsigned(3, [(0, 1), (1, 2)]).unwrap();
        let mut l = ListAssignment::full(3, d);
        l.0[2] = ColorSet::single(0);
        let a = d.algebra().unwrap();
        let s = a.classify(admissible_sets(&path, 0, &l, d).unwrap().get(0));
        assert!(s.paired && s.size == 10);
    }

    #[test]
    fn fold_negative_four_cycle() {
        let g = SignedGraph::new(4, [(0, 1, Sign::Neg), (1, 2, Sign::Pos), (2, 3, Sign::Pos), (3, 0, Sign::Pos)]).unwrap();
        let t = k6();
        let r = switch_hom(&g, &t, &SolveOptions::canonical()).unwrap();
        let f = fold_bipartite(&g, &t, &r).unwrap();
        let kkk = make_kkk_m(3).unwrap();
        let h = switch(&g, f.switch_set.as_ref().unwrap()).unwrap();
        assert!(is_sp_mapping(&h, &kkk, f.mapping.as_ref().unwrap()));
        // already part-respecting input comes back unchanged
        assert_eq!(fold_bipartite(&g, &t, &f).unwrap().mapping, f.mapping);
        let tri = triangle([Sign::Pos; 3]);
        let r = sp_hom(&tri, &t, &SolveOptions::canonical()).unwrap();
        assert_eq!(fold_bipartite(&tri, &t, &r), Err(Error::NotBipartite));
    }
}
