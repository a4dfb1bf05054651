//! Discharging rules applied literally, with exact rational charges.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::graph::SignedGraph;

pub type Charge = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ruleset {
    /// `c(v) = d(v) - 14/5`; a 4+-vertex gives 2/5 to each 2-neighbor and
    /// 1/5 to each 3_1-neighbor.
    K6,
    /// `c(v) = d(v) - 3`; a 2-vertex receives 1/2 from each neighbor.
    K8,
}

impl Ruleset {
    pub fn beta(self) -> Charge {
        match self {
            Ruleset::K6 => Ratio::new(14, 5),
            Ruleset::K8 => Ratio::from_integer(3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ruleset::K6 => "k6",
            Ruleset::K8 => "k8",
        }
    }
}

impl std::str::FromStr for Ruleset {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k6" => Ok(Ruleset::K6),
            "k8" => Ok(Ruleset::K8),
            _ => Err(crate::Error::Unknown(format!("ruleset `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub amount: Charge,
    pub rule: &'static str,
}

/// The inner rules on one component `H` of the subgraph induced by the 2-
/// and 3-vertices: 3_0-vertices start at 1, everything else at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentAudit {
    pub vertices: Vec<usize>,
    pub n0: usize,
    pub n1: usize,
    /// Sum over `H` of the final charges of the main rules.
    pub charge_sum: Charge,
    /// Inner charges after Rule 1 and Rule 2, aligned with `vertices`.
    pub inner: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    /// Each 3_1-vertex of degree 3 in `H` ends with exactly 1/2.
    pub three_ones_get_half: bool,
    /// No 3_0-vertex ends below 1/2.
    pub three_zeros_keep_half: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeReport {
    pub ruleset: Ruleset,
    pub initial: Vec<Charge>,
    pub final_charge: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    pub components: Vec<ComponentAudit>,
    /// `2|E| - beta |V|`.
    pub expected_total: Charge,
}

impl ChargeReport {
    pub fn initial_total(&self) -> Charge {
        self.initial.iter().sum()
    }

    pub fn final_total(&self) -> Charge {
        self.final_charge.iter().sum()
    }

    pub fn conserved(&self) -> bool {
        self.initial_total() == self.expected_total && self.final_total() == self.expected_total
    }

    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        writeln!(out, "ruleset: {}", self.ruleset.name()).unwrap();
        let line = |c: &[Charge]| c.iter().enumerate().map(|(v, x)| format!("{}:{x}", name(v))).collect::<Vec<_>>().join(" ");
        writeln!(out, "initial: {}", line(&self.initial)).unwrap();
        writeln!(out, "final: {}", line(&self.final_charge)).unwrap();
        for t in &self.transfers {
            writeln!(out, "transfer: {} -> {} {} ({})", name(t.from), name(t.to), t.amount, t.rule).unwrap();
        }
        writeln!(out, "total: initial={} final={} expected={}", self.initial_total(), self.final_total(), self.expected_total).unwrap();
        writeln!(out, "conserved: {}", if self.conserved() { "yes" } else { "NO" }).unwrap();
        for c in &self.components {
            let vs: Vec<String> = c.vertices.iter().map(|&v| name(v)).collect();
            writeln!(
                out,
                "component: {} n0={} n1={} sum={} three-ones-get-half={} three-zeros-keep-half={}",
                vs.join(" "),
                c.n0,
                c.n1,
                c.charge_sum,
                c.three_ones_get_half,
                c.three_zeros_keep_half
            )
            .unwrap();
            for t in &c.transfers {
                writeln!(out, "  inner-transfer: {} -> {} {} ({})", name(t.from), name(t.to), t.amount, t.rule).unwrap();
            }
        }
        out
    }
}

fn two_neighbors(g: &SignedGraph, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&(w, _)| g.degree(w) == 2).count()
}

pub fn discharge_audit(g: &SignedGraph, ruleset: Ruleset) -> ChargeReport {
    let n = g.n();
    let beta = ruleset.beta();
    let initial: Vec<Charge> = (0..n).map(|v| Ratio::from_integer(g.degree(v) as i64) - beta).collect();
    let mut charge = initial.clone();
    let mut transfers = Vec::new();
    let mut give = |from: usize, to: usize, amount: Charge, rule: &'static str, charge: &mut Vec<Charge>| {
        charge[from] -= amount;
        charge[to] += amount;
        transfers.push(Transfer { from, to, amount, rule });
    };
    let three_one = |v: usize| g.degree(v) == 3 && two_neighbors(g, v) == 1;
    for v in 0..n {
        match ruleset {
            Ruleset::K6 if g.degree(v) >= 4 => {
                for &(w, _) in g.neighbors(v) {
                    if g.degree(w) == 2 {
                        give(v, w, Ratio::new(2, 5), "4+ to 2-neighbor", &mut charge);
                    } else if three_one(w) {
                        give(v, w, Ratio::new(1, 5), "4+ to 3_1-neighbor", &mut charge);
                    }
                }
            }
            Ruleset::K8 if g.degree(v) == 2 => {
                for &(w, _) in g.neighbors(v) {
                    give(w, v, Ratio::new(1, 2), "to 2-vertex", &mut charge);
                }
            }
            _ => {}
        }
    }
    let components = match ruleset {
        Ruleset::K6 => inner_audit(g, &charge),
        Ruleset::K8 => Vec::new(),
    };
    let expected_total = Ratio::from_integer(2 * g.m() as i64) - beta * Ratio::from_integer(n as i64);
    ChargeReport { ruleset, initial, final_charge: charge, transfers, components, expected_total }
}

struct Kinds<'a> {
    g: &'a SignedGraph,
}

impl Kinds<'_> {
    fn is30(&self, v: usize) -> bool {
        self.g.degree(v) == 3 && two_neighbors(self.g, v) == 0
    }

    fn is31(&self, v: usize) -> bool {
        self.g.degree(v) == 3 && two_neighbors(self.g, v) == 1
    }

    fn ones_except(&self, v: usize, except: Option<usize>) -> Vec<usize> {
        self.g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| Some(w) != except && self.is31(w)).collect()
    }

    /// Recipient when the path ending in `path` meets condition (2), if it
    /// gives at all.
    fn rule_one_end(&self, path: &[usize]) -> Option<Option<usize>> {
        let end = *path.last().expect("nonempty");
        let before = path.len().checked_sub(2).map(|i| path[i]);
        let ones = self.ones_except(end, before);
        let k = path.len() / 2;
        if ones.len() >= 2 {
            // case i gives only along a path with k >= 1
            Some((k >= 1).then(|| path[1]))
        } else if ones.len() == 1 && !self.ones_except(ones[0], Some(end)).is_empty() {
            Some(Some(if k >= 1 { path[1] } else { ones[0] }))
        } else {
            None
        }
    }

    /// All alternating 3_0/3_1 simple paths from `v1` with odd length that
    /// satisfy condition (2), with their recipients.
    fn rule_one_paths(&self, v1: usize) -> Vec<(Vec<usize>, Option<usize>)> {
        let mut found = Vec::new();
        let mut path = vec![v1];
        let mut on = vec![false; self.g.n()];
        on[v1] = true;
        self.walk(&mut path, &mut on, &mut found);
        found
    }

    fn walk(&self, path: &mut Vec<usize>, on: &mut [bool], found: &mut Vec<(Vec<usize>, Option<usize>)>) {
        if path.len() % 2 == 1 {
            if let Some(to) = self.rule_one_end(path) {
                found.push((path.clone(), to));
            }
        }
        let last = *path.last().expect("nonempty");
        let want_one = path.len() % 2 == 1;
        let nexts: Vec<usize> =
            self.g.neighbors(last).iter().map(|&(w, _)| w).filter(|&w| !on[w] && if want_one { self.is31(w) } else { self.is30(w) }).collect();
        for w in nexts {
            path.push(w);
            on[w] = true;
            self.walk(path, on, found);
            on[w] = false;
            path.pop();
        }
    }
}

fn inner_audit(g: &SignedGraph, main: &[Charge]) -> Vec<ComponentAudit> {
    let kinds = Kinds { g };
    let low: Vec<usize> = (0..g.n()).filter(|&v| matches!(g.degree(v), 2 | 3)).collect();
    let h = g.induced(&low);
    let half = Ratio::new(1, 2);
    let quarter = Ratio::new(1, 4);
    let mut out = Vec::new();
    for comp in h.components() {
        let vertices: Vec<usize> = comp.iter().map(|&x| low[x]).collect();
        let h_degree = |v: usize| h.degree(low.binary_search(&v).expect("in H"));
        let pos = |v: usize| vertices.iter().position(|&x| x == v);
        let mut inner: Vec<Charge> = vertices.iter().map(|&v| Ratio::from_integer(kinds.is30(v) as i64)).collect();
        let mut transfers = Vec::new();
        // Rule 1: a unique qualifying path from v1 moves 1/2 to its recipient
        for &v1 in vertices.iter().filter(|&&v| kinds.is30(v)) {
            let paths = kinds.rule_one_paths(v1);
            if let [(_, Some(to))] = paths.as_slice() {
                if let Some(j) = pos(*to) {
                    inner[pos(v1).expect("in H")] -= half;
                    inner[j] += half;
                    transfers.push(Transfer { from: v1, to: *to, amount: half, rule: "rule 1" });
                }
            }
        }
        // Rule 2 looks at charges after Rule 1 only
        let after_one = inner.clone();
        for (j, &x) in vertices.iter().enumerate() {
            if kinds.is31(x) && h_degree(x) == 3 && after_one[j] == Ratio::from_integer(0) {
                for &(y, _) in g.neighbors(x) {
                    if kinds.is30(y) {
                        let i = pos(y).expect("3-vertices adjacent within H");
                        inner[i] -= quarter;
                        inner[j] += quarter;
                        transfers.push(Transfer { from: y, to: x, amount: quarter, rule: "rule 2" });
                    }
                }
            }
        }
        let n0 = vertices.iter().filter(|&&v| kinds.is30(v)).count();
        let n1 = vertices.iter().filter(|&&v| kinds.is31(v) && h_degree(v) == 3).count();
        let three_ones_get_half = vertices.iter().zip(&inner).filter(|(&v, _)| kinds.is31(v) && h_degree(v) == 3).all(|(_, &c)| c == half);
        let three_zeros_keep_half = vertices.iter().zip(&inner).filter(|(&v, _)| kinds.is30(v)).all(|(_, &c)| c >= half);
        let charge_sum = vertices.iter().map(|&v| main[v]).sum();
        out.push(ComponentAudit { vertices, n0, n1, charge_sum, inner, transfers, three_ones_get_half, three_zeros_keep_half });
    }
    out
}
