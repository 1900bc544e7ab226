//! Command-line front end.
//!
//! Exit status: 0 for definite answers (including "incomparable"), 1 for
//! usage, parse or input errors, 2 when a search ran out of budget.

use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::engine::{
    antichain_check, matching_leq, perm_leq, verify_certificate, Certificate, Comparability, Items,
    MoveSet, Outcome, SearchReport, DEFAULT_BUDGET,
};
use crate::graph::{
    connected_pairs, fork_labeling, fork_permutation, has_cycle, is_permutation_graph,
    koh_ree_check, permutation_from_labeled, permutation_graph, LabeledGraph, UnlabeledGraph,
    RECOGNITION_CAP,
};
use crate::matching::{decompose_intertwined, matching_to_word, word_to_matching, Matching};
use crate::permutation::Permutation;
use crate::suite::{run_all, SuiteConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "matchposet",
    version,
    about = "Matching poset and permutation order decision tools"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Maximum number of distinct states a single search may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: usize,
    /// Worker threads for the property suites; never changes any output.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Perm,
    Matching,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Perm,
    Graph,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether A reaches B under the given moves.
    Compare {
        #[arg(long, value_enum, default_value_t = Kind::Perm)]
        kind: Kind,
        /// Comma list: I, II, Ia, Ib, IIa, IIb, x:<lhs>-<rhs>.
        #[arg(long, default_value = "I,II")]
        moves: String,
        a: String,
        b: String,
    },
    /// Check every forward pair of a list for comparability.
    Antichain {
        #[arg(long, value_enum, default_value_t = Kind::Perm)]
        kind: Kind,
        #[arg(long, default_value = "I,II")]
        moves: String,
        #[arg(required = true)]
        items: Vec<String>,
    },
    /// Emit the fork permutation p_{2n} or its labeled graph.
    Fork {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Perm)]
        emit: Emit,
    },
    /// Inversion graph of a permutation, or Koh–Ree check of a graph literal.
    Graph { input: String },
    /// Split a perfect matching (or the matching of a word) into intertwined
    /// pieces, each with its word.
    Decompose { matching: String },
    /// Search S_n for a permutation whose inversion graph is isomorphic to the input.
    Recognize {
        graph: String,
        #[arg(long, default_value_t = RECOGNITION_CAP)]
        cap: usize,
    },
    /// Replay a JSON certificate document (file path, or - for stdin).
    Verify { path: String },
    /// Run the exhaustive property suites.
    Suite {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: u32,
    },
}

struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse::<Permutation>()
        .map_err(|e| Failure(EXIT_USAGE, format!("bad permutation {s:?}: {e}")))
}

fn parse_matching(s: &str) -> Result<Matching, Failure> {
    s.parse::<Matching>()
        .map_err(|e| Failure(EXIT_USAGE, format!("bad matching {s:?}: {e}")))
}

/// A matching literal, or a word (digits or a comma list) naming an
/// intertwined matching.
fn parse_matching_or_word(s: &str) -> Result<Matching, Failure> {
    if s.contains('-') {
        return parse_matching(s);
    }
    let word: Result<Vec<u32>, ()> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse().map_err(drop))
            .collect()
    } else {
        s.trim().chars().map(|c| c.to_digit(10).ok_or(())).collect()
    };
    let word = word.map_err(|_| Failure(EXIT_USAGE, format!("bad matching or word {s:?}")))?;
    word_to_matching(&word).map_err(|e| Failure(EXIT_USAGE, format!("bad word {s:?}: {e}")))
}

fn word_string(w: &[u32]) -> String {
    if w.len() <= 9 {
        w.iter().map(u32::to_string).collect()
    } else {
        w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

fn parse_graph(s: &str) -> Result<LabeledGraph, Failure> {
    let parsed = if s.trim_start().starts_with("//") {
        LabeledGraph::from_dot(s)
    } else {
        s.parse()
    };
    parsed.map_err(|e| Failure(EXIT_USAGE, format!("bad graph {s:?}: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    match &cli.command {
        Command::Compare { kind, moves, a, b } => {
            let ms = MoveSet::parse(moves)?;
            let report = match kind {
                Kind::Perm => perm_leq(&parse_perm(a)?, &parse_perm(b)?, &ms, cli.budget),
                Kind::Matching => {
                    matching_leq(&parse_matching(a)?, &parse_matching(b)?, &ms, cli.budget)?
                }
            };
            write_report(cli.format, &report, out)?;
            Ok(exit_for(&report.outcome))
        }
        Command::Antichain { kind, moves, items } => {
            let ms = MoveSet::parse(moves)?;
            let items = match kind {
                Kind::Perm => Items::Permutations(
                    items
                        .iter()
                        .map(|s| parse_perm(s))
                        .collect::<Result<_, _>>()?,
                ),
                Kind::Matching => Items::Matchings(
                    items
                        .iter()
                        .map(|s| parse_matching(s))
                        .collect::<Result<_, _>>()?,
                ),
            };
            let report = antichain_check(&items, &ms, cli.budget)?;
            let verdict = match report.is_antichain() {
                Some(true) => "antichain",
                Some(false) => "not an antichain",
                None => "unknown (budget exceeded)",
            };
            if cli.format == Format::Json {
                let doc = json!({
                    "antichain": report.is_antichain(),
                    "pairs": report.pairs,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                for p in &report.pairs {
                    let label = match p.result {
                        Comparability::Comparable => "comparable",
                        Comparability::Incomparable => "incomparable",
                        Comparability::Budget => "unknown (budget exceeded)",
                    };
                    writeln!(out, "{} <= {}: {label}", p.i + 1, p.j + 1)?;
                }
                writeln!(out, "{verdict}")?;
            }
            Ok(if report.is_antichain().is_none() {
                EXIT_BUDGET
            } else {
                EXIT_OK
            })
        }
        Command::Fork { n, emit } => {
            match emit {
                Emit::Perm => {
                    let p = fork_permutation(*n)?;
                    match cli.format {
                        Format::Json => {
                            writeln!(out, "{}", json!({ "n": n, "permutation": p.to_string() }))?
                        }
                        Format::Dot => write!(out, "{}", permutation_graph(&p).to_dot(true))?,
                        Format::Text => writeln!(out, "{p}")?,
                    }
                }
                Emit::Graph => {
                    let g = fork_labeling(*n)?;
                    write_graph(cli.format, &g, out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Graph { input } => {
            if input.contains("n=") {
                let g = parse_graph(input)?;
                let kr = koh_ree_check(&g);
                let recovered = permutation_from_labeled(&g).ok();
                match cli.format {
                    Format::Json => {
                        let doc = json!({
                            "graph": g.to_string(),
                            "p1": kr.p1,
                            "p2": kr.p2,
                            "permutation": recovered.map(|p| p.to_string()),
                        });
                        writeln!(out, "{doc}")?;
                    }
                    Format::Dot => write!(out, "{}", g.to_dot(true))?,
                    Format::Text => {
                        writeln!(out, "{g}")?;
                        writeln!(out, "P1: {}", yes_no(kr.p1))?;
                        writeln!(out, "P2: {}", yes_no(kr.p2))?;
                        match recovered {
                            Some(p) => writeln!(out, "permutation: {p}")?,
                            None => writeln!(out, "permutation: none")?,
                        }
                    }
                }
            } else {
                let p = parse_perm(input)?;
                write_graph(cli.format, &permutation_graph(&p), out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { matching } => {
            let pieces = decompose_intertwined(&parse_matching_or_word(matching)?)?;
            let words = pieces
                .iter()
                .map(|m| matching_to_word(&m.standardized()).map(|w| word_string(&w)))
                .collect::<Result<Vec<_>, _>>()?;
            if cli.format == Format::Json {
                let doc: Vec<_> = pieces
                    .iter()
                    .zip(&words)
                    .map(|(m, w)| json!({ "matching": m.to_string(), "word": w }))
                    .collect();
                writeln!(out, "{}", json!(doc))?;
            } else {
                for (m, w) in pieces.iter().zip(&words) {
                    writeln!(out, "{m}  word {w}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Recognize { graph, cap } => {
            let g = UnlabeledGraph::new(parse_graph(graph)?);
            let found = is_permutation_graph(&g, *cap)?;
            match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "permutation": found.map(|p| p.to_string()) })
                )?,
                _ => match found {
                    Some(p) => writeln!(out, "permutation graph: {p}")?,
                    None => writeln!(out, "not a permutation graph")?,
                },
            }
            Ok(EXIT_OK)
        }
        Command::Verify { path } => {
            let mut text = String::new();
            if path == "-" {
                io::stdin().read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(path)?;
            }
            let doc: serde_json::Value = serde_json::from_str(&text)?;
            let cert = match doc.get("steps") {
                Some(_) => serde_json::from_value::<Certificate>(doc)?,
                None => Certificate::from_document(&doc)?,
            };
            match verify_certificate(&cert) {
                Ok(()) => {
                    writeln!(out, "valid ({} steps)", cert.len())?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "invalid: {e}")?;
                    Ok(EXIT_USAGE)
                }
            }
        }
        Command::Suite {
            max_n,
            max_vertices,
        } => {
            let cfg = SuiteConfig {
                max_n: *max_n,
                max_vertices: *max_vertices,
            };
            let results = match cli.threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()?
                    .install(|| run_all(cfg)),
                None => run_all(cfg),
            };
            if cli.format == Format::Json {
                writeln!(out, "{}", serde_json::to_string_pretty(&results)?)?;
            } else {
                for r in &results {
                    writeln!(out, "{r}")?;
                }
            }
            Ok(if results.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_USAGE
            })
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exit_for(o: &Outcome) -> u8 {
    match o {
        Outcome::BudgetExceeded => EXIT_BUDGET,
        _ => EXIT_OK,
    }
}

fn write_graph(format: Format, g: &LabeledGraph, out: &mut dyn Write) -> Result<(), Failure> {
    let comps = connected_pairs(g);
    match format {
        Format::Dot => write!(out, "{}", g.to_dot(true))?,
        Format::Json => {
            let doc = json!({
                "graph": g.to_string(),
                "edges": g.edge_count(),
                "cycle": has_cycle(g),
                "components": comps,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Text => {
            writeln!(out, "{g}")?;
            writeln!(out, "cycle: {}", yes_no(has_cycle(g)))?;
            let rendered: Vec<String> = comps
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(out, "components: {}", rendered.join(" | "))?;
        }
    }
    Ok(())
}

fn write_report(format: Format, report: &SearchReport, out: &mut dyn Write) -> Result<(), Failure> {
    if format == Format::Json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report.to_json())?)?;
        return Ok(());
    }
    match &report.outcome {
        Outcome::Comparable(c) => {
            writeln!(out, "comparable")?;
            for line in c.render() {
                writeln!(out, "{line}")?;
            }
        }
        Outcome::Incomparable => writeln!(out, "incomparable")?,
        Outcome::BudgetExceeded => writeln!(out, "unknown (budget exceeded)")?,
    }
    writeln!(out, "states explored: {}", report.states_explored)?;
    Ok(())
}
