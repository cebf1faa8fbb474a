//! Command-line front end, kept in the library so it can be driven in-process.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::facts::{self, build_case, CaseTag};
use crate::graph::PrimeGraph;
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::module::ModuleAction;
use crate::rationality::{classify_rational_solvable, gk_graph, rationality_report};
use crate::search::{search_witness_with_cap, SearchSpace};
use crate::spec::load_group_spec;

#[derive(Debug, Parser)]
#[command(name = "ratgk", version, about = "Rational groups, prime graphs and GF(p) modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Largest group order any construction may reach.
    #[arg(long, global = true, env = "RATGK_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Dot,
    /// Machine-readable JSON.
    Report,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prime graph of a group.
    Graph {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Rationality report; exit 1 when the group is not rational.
    Rational {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Cut-group report; exit 1 when the group is not cut.
    Cut {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Solvable-rational classification verdict; exit 1 when it does not match.
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Orbits of a matrix group on GF(p)^n, or of one of the built modules.
    Orbits {
        #[arg(long, conflicts_with = "case", required_unless_present = "case")]
        spec: Option<PathBuf>,
        /// One of a, b, c, d, e.
        #[arg(long)]
        case: Option<char>,
    },
    /// Check every structural fact about the five GF(5) modules.
    VerifyPaper,
    /// Build and verify one group for each of the six prime graphs.
    Witnesses,
    /// Bounded search for a solvable rational group with a given prime graph.
    Search {
        /// Target graph as `vertices:edges`, e.g. `2,3,5:2-3,2-5`.
        #[arg(long)]
        target: PrimeGraph,
        #[arg(long, value_enum, default_value_t = Space::Semidirect)]
        space: Space,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        /// Comma-separated factor names for the direct-product space.
        #[arg(long, value_delimiter = ',', default_value = "C2,S3,S4")]
        factors: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_factors: usize,
        /// Assert the outcome; exit 1 when it differs.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    Semidirect,
    Products,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Found,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn done(ok: bool, stdout: String) -> CommandOutput {
    CommandOutput {
        code: if ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn load(spec: &std::path::Path, cap: usize) -> Result<FiniteGroup> {
    load_group_spec(spec)?.build(cap)
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::Spec(crate::spec::SpecError::Invalid {
        path: "--format".into(),
        message: format!("{format:?} output is not available for `{command}`").to_lowercase(),
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_command(&cli),
        Err(e) => CommandOutput {
            code: if e.use_stderr() { 2 } else { 0 },
            stdout: if e.use_stderr() { String::new() } else { e.to_string() },
            stderr: if e.use_stderr() { e.to_string() } else { String::new() },
        },
    }
}

/// Exit code 0 when every assertion of the command holds, 1 when one fails, 2 on invalid input.
pub fn run_command(cli: &Cli) -> CommandOutput {
    match execute(cli) {
        Ok(out) => out,
        Err(e) => CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<CommandOutput> {
    let cap = cli.cap;
    let format = cli.format;
    match &cli.command {
        Command::Graph { spec } => {
            let g = load(spec, cap)?;
            let graph = gk_graph(&g);
            let text = match format {
                Format::Dot => graph.to_dot(),
                Format::Text => format!("order {}\ngraph {graph}\n", g.order()),
                Format::Report => pretty(&json!({
                    "order": g.order(),
                    "vertices": graph.vertices,
                    "edges": graph.edges,
                })),
            };
            Ok(done(true, text))
        }
        Command::Rational { spec } | Command::Cut { spec } => {
            let cut = matches!(cli.command, Command::Cut { .. });
            let g = load(spec, cap)?;
            let r = rationality_report(&g);
            let ok = if cut { r.cut } else { r.rational };
            let text = match format {
                Format::Report => pretty(&r),
                Format::Text => {
                    let mut s = format!(
                        "order {}\nrational {}\ncut {}\nnormalizer criterion {}\n",
                        r.group_order, r.rational, r.cut, r.normalizer_criterion
                    );
                    for c in &r.records {
                        s.push_str(&format!(
                            "  <{}> order {} phi {} generator classes {} [N:C] {}\n",
                            c.generator_display, c.order, c.phi, c.generator_classes, c.normalizer_index
                        ));
                    }
                    s
                }
                Format::Dot => return Err(unsupported(format, if cut { "cut" } else { "rational" })),
            };
            Ok(done(ok, text))
        }
        Command::Classify { spec } => {
            let g = load(spec, cap)?;
            let c = classify_rational_solvable(&g);
            let text = match format {
                Format::Report => pretty(&c),
                Format::Text => {
                    let mut s = format!(
                        "order {}\ngraph {}\nsolvable {}\nrational {}\n",
                        c.order, c.graph, c.is_solvable, c.is_rational
                    );
                    match (&c.figure, &c.reason) {
                        (Some(f), None) => s.push_str(&format!("matches the solvable-rational classification: {f}\n")),
                        (_, Some(reason)) => s.push_str(&format!(
                            "does not match the solvable-rational classification (reason: {reason})\n"
                        )),
                        (None, None) => unreachable!("a match always has a figure"),
                    }
                    s
                }
                Format::Dot => c.graph.to_dot(),
            };
            Ok(done(c.matches_classification, text))
        }
        Command::Orbits { spec, case } => {
            let action: Arc<ModuleAction> = match (spec, case) {
                (Some(spec), _) => Arc::new(ModuleAction::natural(Arc::new(load(spec, cap)?))?),
                (None, Some(c)) => {
                    let tag = CaseTag::ALL
                        .into_iter()
                        .find(|t| t.letter() == c.to_ascii_lowercase())
                        .ok_or_else(|| Error::UnknownName(format!("case {c}")))?;
                    build_case(tag)?.action().clone()
                }
                (None, None) => unreachable!("clap requires one of --spec and --case"),
            };
            let orbits = action.orbits();
            let text = match format {
                Format::Report => pretty(&json!({
                    "prime": action.prime(),
                    "dim": action.dim(),
                    "group_order": action.group().order(),
                    "orbits": orbits,
                })),
                Format::Text => {
                    let mut s = format!(
                        "GF({})^{} under a group of order {}: {} orbits\n",
                        action.prime(),
                        action.dim(),
                        action.group().order(),
                        orbits.len()
                    );
                    for o in &orbits {
                        s.push_str(&format!("  size {} from {}\n", o.len(), o[0]));
                    }
                    s
                }
                Format::Dot => return Err(unsupported(format, "orbits")),
            };
            Ok(done(true, text))
        }
        Command::VerifyPaper => {
            let report = facts::verify_all()?;
            let text = match format {
                Format::Report => report.to_json() + "\n",
                Format::Text => report.to_text(),
                Format::Dot => return Err(unsupported(format, "verify-paper")),
            };
            Ok(done(report.all_pass(), text))
        }
        Command::Witnesses => {
            let (report, _) = facts::witness_suite()?;
            let text = match format {
                Format::Report => report.to_json() + "\n",
                Format::Text => report.to_text(),
                Format::Dot => return Err(unsupported(format, "witnesses")),
            };
            Ok(done(report.all_pass(), text))
        }
        Command::Search {
            target,
            space,
            max_dim,
            factors,
            max_factors,
            expect,
        } => {
            let space = match space {
                Space::Semidirect => SearchSpace::Semidirect { max_dim: *max_dim },
                Space::Products => SearchSpace::DirectProducts {
                    factors: factors.clone(),
                    max_factors: *max_factors,
                },
            };
            let outcome = search_witness_with_cap(target, &space, cap)?;
            let found = outcome.hit.is_some();
            let ok = match expect {
                Some(Expect::Found) => found,
                Some(Expect::None) => !found,
                None => true,
            };
            let text = match format {
                Format::Report => pretty(&json!({
                    "target": target.to_string(),
                    "space_size": outcome.space_size,
                    "examined": outcome.examined,
                    "hit": outcome.hit.as_ref().map(|h| json!({
                        "description": h.description,
                        "order": h.group.order(),
                        "index": h.index,
                    })),
                })),
                Format::Text => {
                    let mut s = format!(
                        "target {target}\nexamined {} of {} candidates\n",
                        outcome.examined, outcome.space_size
                    );
                    match &outcome.hit {
                        Some(h) => s.push_str(&format!("found {} (order {})\n", h.description, h.group.order())),
                        None => s.push_str("no solvable rational group with this graph in the space\n"),
                    }
                    s
                }
                Format::Dot => return Err(unsupported(format, "search")),
            };
            Ok(done(ok, text))
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
