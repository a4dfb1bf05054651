//! Exhaustive checks of the list-coloring facts about `DSG(K_6, M)` and
//! `DSG(K_8, M)`, reducible configurations, structure scanning and the
//! discharging rules.

pub mod chromatic;
pub mod configs;
pub mod discharge;
pub mod engine;
pub mod scan;
pub mod suites;

use std::fmt::Write as _;

pub use chromatic::chromatic_number_leq;
pub use configs::{config_ids, verify_config_extension, ConfigParams};
pub use discharge::{discharge_audit, ChargeReport, Ruleset};
pub use scan::{scan_structures, StructureReport};
pub use suites::{suite_ids, verify_suite, SuiteParams};

use crate::targets::{ColorSet, TargetSpace};
use engine::{Outcome, Witness};

/// Result of one exhaustive check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub id: String,
    pub instances: u128,
    pub failures: u128,
    /// First failing instance, in enumeration order.
    pub counterexample: Option<String>,
    /// Named instance counts, in insertion order.
    pub counts: Vec<(String, u128)>,
}

impl LemmaReport {
    pub fn new(id: impl Into<String>) -> Self {
        LemmaReport { id: id.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one instance; `describe` runs only for the first failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub fn absorb(&mut self, outcome: Outcome, t: &TargetSpace, names: &dyn Fn(usize) -> String) {
        self.instances += outcome.instances;
        self.failures += outcome.failures;
        if self.counterexample.is_none() {
            self.counterexample = outcome.example.map(|w| render_witness(&w, t, names));
        }
    }

    pub fn count(&mut self, label: &str, n: u128) {
        match self.counts.iter_mut().find(|(l, _)| l == label) {
            Some((_, c)) => *c += n,
            None => self.counts.push((label.to_string(), n)),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(out, "check={} status={} instances={} failures={}", self.id, status, self.instances, self.failures).unwrap();
        for (label, n) in &self.counts {
            writeln!(out, "  count.{label}={n}").unwrap();
        }
        if let Some(c) = &self.counterexample {
            writeln!(out, "  counterexample: {c}").unwrap();
        }
        out
    }
}

/// Lists chosen for an instance, e.g. `x={1+} y={1+ 2+}`.
pub fn render_witness(w: &Witness, t: &TargetSpace, names: &dyn Fn(usize) -> String) -> String {
    w.iter().map(|&(v, l)| format!("{}={{{}}}", names(v), t.format_set(ColorSet(l)))).collect::<Vec<_>>().join(" ")
}

/// Several checks run together.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub lemmas: Vec<LemmaReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lemmas.iter().all(LemmaReport::passed)
    }

    pub fn failures(&self) -> u128 {
        self.lemmas.iter().map(|l| l.failures).sum()
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite={}\n", self.suite);
        for l in &self.lemmas {
            out.push_str(&l.render());
        }
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(out, "suite.status={status} suite.failures={}", self.failures()).unwrap();
        out
    }
}
