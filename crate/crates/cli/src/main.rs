//! `signhom`: homomorphisms of signed graphs, density certificates and
//! exhaustive lemma checks from the command line.
//!
//! Exit codes: 0 when the property holds (mapping found, zero failures),
//! 1 when it does not, 2 for usage or parse errors, 3 when the search
//! budget ran out before a decision.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use signhom::census::{random_graph, sparse_graph};
use signhom::density::{mad, mad_less_than};
use signhom::gadgets::resolve_graph;
use signhom::hom::{enumerate_homs, sp_hom, switch_hom, Mode, SolveOptions};
use signhom::targets::resolve_target;
use signhom::verify::{config_ids, discharge_audit, scan_structures, suite_ids, verify_config_extension, verify_suite, ConfigParams, Ruleset, SuiteParams};
use signhom::{girth_vector, switching_equivalent, Error, SignedGraph};

#[derive(Parser)]
#[command(name = "signhom", version, about = "Signed graph homomorphisms to (K_2k, M) and (K_k,k, M)")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "SIGNHOM_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliMode {
    Sp,
    Switch,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Sp => Mode::Sp,
            CliMode::Switch => Mode::Switch,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph maps to a target.
    Map {
        /// Built-in name or file in the text format.
        graph: String,
        #[arg(long, short)]
        target: String,
        #[arg(long, value_enum, default_value_t = CliMode::Switch)]
        mode: CliMode,
        /// Give up after this many search nodes (exit 3).
        #[arg(long)]
        budget: Option<u64>,
        /// Static vertex order and lowest-color-first values.
        #[arg(long)]
        canonical: bool,
    },
    /// Maximum average degree with a densest subgraph.
    Mad {
        graph: String,
        /// Exit 0 iff the maximum average degree is below this fraction.
        #[arg(long)]
        less_than: Option<String>,
    },
    /// Girth vector (g00 g01 g10 g11).
    Gij { graph: String },
    /// Whether two signatures on one graph are switching equivalent.
    SwitchEquiv { first: String, second: String },
    /// Print a built-in or generated graph in the text format.
    Gen {
        /// Built-in name, `random:<n>:<p>` or `sparse:<n>:<girth>:<p>/<q>`.
        name: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Exhaustive lemma and configuration checks.
    Verify {
        #[arg(long, conflicts_with_all = ["config", "all"])]
        suite: Option<String>,
        #[arg(long, conflicts_with = "all")]
        config: Option<String>,
        /// Every suite and configuration.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 2)]
        poor_kmax: usize,
        /// List the known suite and configuration ids.
        #[arg(long)]
        list: bool,
    },
    /// Degree labels, excluded configurations, low components, poor paths.
    Scan { graph: String },
    /// Run the discharging rules.
    Audit {
        graph: String,
        #[arg(long, default_value = "k6")]
        rules: String,
    },
    /// List mappings in canonical order.
    Enumerate {
        graph: String,
        #[arg(long, short)]
        target: String,
        #[arg(long, value_enum, default_value_t = CliMode::Switch)]
        mode: CliMode,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
}

/// Text accumulated for stdout and the exit code it goes with.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn new() -> Self {
        Report { text: String::new(), code: 0 }
    }
}

/// `key: value` or `key=value` depending on the format.
fn field(out: &mut Report, format: Format, key: &str, value: impl std::fmt::Display) {
    match format {
        Format::Text => writeln!(out.text, "{key}: {value}").unwrap(),
        Format::Kv => writeln!(out.text, "{key}={value}").unwrap(),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>, Error> {
    let bad = || Error::InvalidParameter(format!("`{s}` is not a fraction p/q"));
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let (p, q): (i64, i64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
    if q <= 0 {
        return Err(bad());
    }
    Ok(Ratio::new(p, q))
}

fn generate(name: &str, seed: u64) -> Result<SignedGraph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts: Vec<&str> = name.split(':').collect();
    let bad = || Error::InvalidParameter(format!("cannot parse generator `{name}`"));
    match parts.as_slice() {
        ["random", n, p] => {
            let n: usize = n.parse().map_err(|_| bad())?;
            let p: f64 = p.parse().map_err(|_| bad())?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad());
            }
            Ok(random_graph(n, p, &mut rng))
        }
        ["sparse", n, girth, bound] => {
            let n: usize = n.parse().map_err(|_| bad())?;
            let girth: usize = girth.parse().map_err(|_| bad())?;
            Ok(sparse_graph(n, girth, parse_ratio(bound)?, 64, &mut rng))
        }
        _ => resolve_graph(name),
    }
}

fn run(cli: Cli) -> Result<Report, Error> {
    let f = cli.format;
    let mut out = Report::new();
    match cli.command {
        Command::Map { graph, target, mode, budget, canonical } => {
            let g = resolve_graph(&graph)?;
            let t = resolve_target(&target)?;
            let opts = SolveOptions { canonical, node_budget: budget };
            let r = match mode {
                CliMode::Sp => sp_hom(&g, &t, &opts),
                CliMode::Switch => switch_hom(&g, &t, &opts),
            };
            let r = match r {
                Err(Error::BudgetExceeded { budget }) => {
                    field(&mut out, f, "status", "INDETERMINATE");
                    field(&mut out, f, "budget", budget);
                    out.code = 3;
                    return Ok(out);
                }
                r => r?,
            };
            out.text = match f {
                Format::Text => r.report(&t),
                Format::Kv => r.report_kv(&t),
            };
            out.code = if r.found() { 0 } else { 1 };
        }
        Command::Mad { graph, less_than } => {
            let g = resolve_graph(&graph)?;
            let cert = match &less_than {
                Some(b) => {
                    let bound = parse_ratio(b)?;
                    let (below, cert) = mad_less_than(&g, bound)?;
                    out.code = if below { 0 } else { 1 };
                    field(&mut out, f, "below", if below { "yes" } else { "no" });
                    cert
                }
                None => mad(&g)?,
            };
            field(&mut out, f, "mad", cert.mad);
            let w: Vec<String> = cert.witness.iter().map(|v| (v + 1).to_string()).collect();
            field(&mut out, f, "witness", w.join(" "));
        }
        Command::Gij { graph } => {
            let g = resolve_graph(&graph)?;
            field(&mut out, f, "g", girth_vector(&g));
        }
        Command::SwitchEquiv { first, second } => {
            let (a, b) = (resolve_graph(&first)?, resolve_graph(&second)?);
            match switching_equivalent(&a, &b)? {
                Some(x) => {
                    field(&mut out, f, "equivalent", "yes");
                    if x.is_empty() {
                        field(&mut out, f, "switch", "none");
                    } else {
                        field(&mut out, f, "switch", x);
                    }
                }
                None => {
                    field(&mut out, f, "equivalent", "no");
                    out.code = 1;
                }
            }
        }
        Command::Gen { name, seed } => {
            out.text = generate(&name, seed)?.to_string();
        }
        Command::Verify { suite, config, all, kmax, poor_kmax, list } => {
            let sp = SuiteParams { kmax };
            let cp = ConfigParams { poor_kmax, ..ConfigParams::default() };
            if list {
                field(&mut out, f, "suites", suite_ids().join(" "));
                field(&mut out, f, "configs", config_ids(&cp).join(" "));
                return Ok(out);
            }
            let mut failures = 0u128;
            let suites: Vec<String> = match (&suite, all) {
                (Some(s), _) => vec![s.clone()],
                (None, true) => suite_ids().iter().map(|s| s.to_string()).collect(),
                (None, false) => Vec::new(),
            };
            let configs: Vec<String> = match (&config, all) {
                (Some(c), _) => vec![c.clone()],
                (None, true) => config_ids(&cp),
                (None, false) => Vec::new(),
            };
            if suites.is_empty() && configs.is_empty() {
                return Err(Error::InvalidParameter("give --suite, --config, --all or --list".into()));
            }
            for s in &suites {
                let r = verify_suite(s, &sp)?;
                failures += r.failures();
                out.text.push_str(&r.render());
            }
            for c in &configs {
                let r = verify_config_extension(c, &cp)?;
                failures += r.failures;
                out.text.push_str(&r.render());
            }
            field(&mut out, Format::Kv, "total.failures", failures);
            out.code = if failures == 0 { 0 } else { 1 };
        }
        Command::Scan { graph } => {
            let g = resolve_graph(&graph)?;
            out.text = scan_structures(&g).render(&|v| (v + 1).to_string());
        }
        Command::Audit { graph, rules } => {
            let g = resolve_graph(&graph)?;
            let rules: Ruleset = rules.parse()?;
            let r = discharge_audit(&g, rules);
            out.text = r.render(&|v| (v + 1).to_string());
            out.code = if r.conserved() { 0 } else { 1 };
        }
        Command::Enumerate { graph, target, mode, cap } => {
            let g = resolve_graph(&graph)?;
            let t = resolve_target(&target)?;
            let all = enumerate_homs(&g, &t, mode.into(), cap)?;
            for (i, r) in all.iter().enumerate() {
                let map = r.mapping.as_deref().unwrap_or_default();
                let names: Vec<&str> = map.iter().map(|&c| t.color_name(c)).collect();
                let mut line = names.join(" ");
                if let Some(x) = &r.switch_set {
                    write!(line, " | switch {x}").unwrap();
                }
                field(&mut out, f, &format!("map.{}", i + 1), line);
            }
            let onto = all.iter().all(|r| {
                let mut used = vec![false; t.n()];
                r.mapping.iter().flatten().for_each(|&c| used[c] = true);
                used.iter().all(|&u| u)
            });
            field(&mut out, f, "count", all.len());
            field(&mut out, f, "truncated", if all.len() == cap { "maybe" } else { "no" });
            field(&mut out, f, "onto", if onto && !all.is_empty() { "all" } else { "not-all" });
            out.code = if all.is_empty() { 1 } else { 0 };
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 || rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().is_err() {
            eprintln!("error: cannot start {jobs} worker threads");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(r) => {
            print!("{}", r.text);
            ExitCode::from(r.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
