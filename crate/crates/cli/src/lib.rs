//! Command-line surface for the sweepcover toolkit.
//!
//! [`run`] executes a parsed [`Cli`] and returns the rendered output plus
//! the exit status; `main` only handles argument errors and writing.

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use sweepcover::count::{growth_report, raney_bound_report};
use sweepcover::enumerate::{oracle_check, OracleConfig};
use sweepcover::{
    discrepancy::DiscrepancyError, discrepancy_report, find_sweep_covers, p_count, p_table,
    parse_tree, validate, CountError, CoverError, EnumerateError, IldSpec, SweepCover, Tree,
    TreeError,
};

pub mod output;

use output::{render_rows, table_to_csv, table_to_json, table_to_text, Rows};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PARAMS: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    TreeParse { path: PathBuf, source: TreeError },
    #[error("{path}: {source}")]
    CoverParse { path: PathBuf, source: CoverError },
    #[error("{0}")]
    Params(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Params(_) => EXIT_PARAMS,
            _ => EXIT_PARSE,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        CliError::Params(e.to_string())
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        CliError::Params(e.to_string())
    }
}

impl From<DiscrepancyError> for CliError {
    fn from(e: DiscrepancyError) -> Self {
        CliError::Params(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "sweepcover",
    version,
    about = "Enumerate and count sweep-covers of rooted trees"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every sweep-cover of size n.
    Enumerate {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Check a cover (JSON array of arrays of labels) against a tree.
    Validate {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// P(n) for one (delta, gamma).
    Count {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        gamma: usize,
        #[arg(long)]
        n: usize,
    },
    /// Grid of P(n) over ranges of delta and n.
    Table {
        #[arg(long, value_parser = parse_range, conflicts_with = "delta")]
        delta_range: Option<RangeInclusive<usize>>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, value_parser = parse_range, conflicts_with = "n_max")]
        n_range: Option<RangeInclusive<usize>>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 0)]
        gamma: usize,
    },
    /// P(n) beside the Raney number C_{delta,1}(n+1).
    BoundReport {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        gamma: usize,
        #[arg(long, value_parser = parse_range, conflicts_with = "n_max")]
        n_range: Option<RangeInclusive<usize>>,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Successive ratios and n-th roots of P(n).
    GrowthReport {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        gamma: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Recurrence counts beside exhaustive counts on a truncated ILD tree.
    Discrepancy {
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        gamma: usize,
        #[arg(long)]
        n_max: usize,
        /// Defaults to n_max + 1.
        #[arg(long)]
        star_levels: Option<usize>,
    },
    /// Compare the enumerator with the exhaustive oracle on small trees.
    OracleCheck {
        #[arg(long)]
        max_nodes: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        random_trees: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// Accepts `A..B`, `A..=B` (both inclusive) or a single `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a non-negative integer: {t:?}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Rendered output and the exit status it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            exit_code: EXIT_OK,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn load_tree(path: &Path) -> Result<Tree, CliError> {
    parse_tree(&read(path)?).map_err(|source| CliError::TreeParse {
        path: path.to_path_buf(),
        source,
    })
}

fn n_span(
    range: Option<RangeInclusive<usize>>,
    n_max: Option<usize>,
) -> Result<RangeInclusive<usize>, CliError> {
    match (range, n_max) {
        (Some(r), _) => Ok(r),
        (None, Some(m)) => Ok(1..=m),
        (None, None) => Err(CliError::Params(
            "one of --n-range or --n-max is required".into(),
        )),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { tree, n } => {
            let tree = load_tree(tree)?;
            let covers = find_sweep_covers(&tree, *n)?;
            Ok(Outcome::ok(render_covers(&covers, format)))
        }
        Command::Validate { tree, cover } => {
            let tree = load_tree(tree)?;
            let cover_path = cover;
            let cover = SweepCover::from_json(&read(cover_path)?).map_err(|source| {
                CliError::CoverParse {
                    path: cover_path.clone(),
                    source,
                }
            })?;
            let report = validate(&tree, &cover).map_err(|source| CliError::CoverParse {
                path: cover_path.clone(),
                source,
            })?;
            let output = match format {
                Format::Json => {
                    serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
                }
                _ => {
                    let mut rows = Rows::new(&["condition", "witness"]);
                    for v in &report.violations {
                        let witness: Vec<&str> = v.witness.iter().map(|w| w.as_ref()).collect();
                        rows.push(vec![v.condition.to_string(), witness.join(" ")]);
                    }
                    if format == Format::Text {
                        format!("{report}\n")
                    } else {
                        render_rows(&rows, format)
                    }
                }
            };
            Ok(Outcome::ok(output))
        }
        Command::Count { delta, gamma, n } => {
            let p = p_count(*delta, *gamma, *n)?;
            let output = match format {
                Format::Text => format!("{p}\n"),
                Format::Json => {
                    let v = json!({"delta": delta, "gamma": gamma, "n": n, "count": p.to_string()});
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Csv => {
                    let mut rows = Rows::new(&["delta", "gamma", "n", "count"]);
                    rows.push(vec![
                        delta.to_string(),
                        gamma.to_string(),
                        n.to_string(),
                        p.to_string(),
                    ]);
                    render_rows(&rows, format)
                }
            };
            Ok(Outcome::ok(output))
        }
        Command::Table {
            delta_range,
            delta,
            n_range,
            n_max,
            gamma,
        } => {
            let deltas = match (delta_range, delta) {
                (Some(r), _) => r.clone(),
                (None, Some(d)) => *d..=*d,
                (None, None) => {
                    return Err(CliError::Params(
                        "one of --delta-range or --delta is required".into(),
                    ))
                }
            };
            let ns = n_span(n_range.clone(), *n_max)?;
            let table = p_table(deltas, ns, *gamma)?;
            let output = match format {
                Format::Text => table_to_text(&table),
                Format::Json => table_to_json(&table),
                Format::Csv => table_to_csv(&table),
            };
            Ok(Outcome::ok(output))
        }
        Command::BoundReport {
            delta,
            gamma,
            n_range,
            n_max,
        } => {
            let ns = n_span(n_range.clone(), *n_max)?;
            if *ns.start() < 1 {
                return Err(CliError::Params("n must be at least 1".into()));
            }
            let report = raney_bound_report(*delta, *gamma, ns)?;
            let mut rows = Rows::new(&["n", "p", "raney", "inequality_holds"]);
            for r in &report {
                rows.push(vec![
                    r.n.to_string(),
                    r.p.to_string(),
                    r.raney.to_string(),
                    r.inequality_holds.to_string(),
                ]);
            }
            Ok(Outcome::ok(render_rows(&rows, format)))
        }
        Command::GrowthReport {
            delta,
            gamma,
            n_max,
        } => {
            let report = growth_report(*delta, *gamma, *n_max)?;
            let mut rows = Rows::new(&["n", "p", "ratio", "nth_root"]);
            for r in &report {
                rows.push(vec![
                    r.n.to_string(),
                    r.p.to_string(),
                    r.ratio.map_or_else(String::new, |x| format!("{x:.6}")),
                    format!("{:.6}", r.nth_root),
                ]);
            }
            Ok(Outcome::ok(render_rows(&rows, format)))
        }
        Command::Discrepancy {
            delta,
            gamma,
            n_max,
            star_levels,
        } => {
            let levels = star_levels.unwrap_or(n_max + 1);
            let spec = IldSpec::new(*delta, *gamma, levels)
                .map_err(|e| CliError::Params(e.to_string()))?;
            let report = discrepancy_report(&spec, *n_max)?;
            let mut rows = Rows::new(&[
                "n",
                "recurrence_count",
                "truncated_brute_force_count",
                "truncated_algorithm_count",
                "agrees",
            ]);
            for r in &report {
                rows.push(vec![
                    r.n.to_string(),
                    r.recurrence_count.to_string(),
                    r.truncated_brute_force_count.to_string(),
                    r.truncated_algorithm_count.to_string(),
                    r.agrees().to_string(),
                ]);
            }
            Ok(Outcome::ok(render_rows(&rows, format)))
        }
        Command::OracleCheck {
            max_nodes,
            n_max,
            random_trees,
            seed,
        } => {
            if *max_nodes < 1 || *n_max < 1 {
                return Err(CliError::Params(
                    "--max-nodes and --n-max must be at least 1".into(),
                ));
            }
            let config = OracleConfig {
                random_trees: *random_trees,
                seed: *seed,
                ..OracleConfig::new(*max_nodes, *n_max)
            };
            let summary = oracle_check(&config)?;
            let exit_code = if summary.all_match() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            let first = summary.mismatches.first();
            let output = match format {
                Format::Text => {
                    let mut s = if summary.all_match() {
                        format!(
                            "all {} tree/size pairs match ({} trees, {} with no cover)\n",
                            summary.pairs, summary.trees, summary.empty_pairs
                        )
                    } else {
                        format!(
                            "{} of {} tree/size pairs differ\n",
                            summary.mismatches.len(),
                            summary.pairs
                        )
                    };
                    if let Some(m) = first {
                        s += &format!("first mismatch at n = {} on tree:\n{}", m.n, m.tree);
                        s += &format!("only in enumerator: {}\n", join_covers(&m.only_algorithm));
                        s += &format!("only in oracle: {}\n", join_covers(&m.only_oracle));
                    }
                    s
                }
                Format::Json => {
                    let mismatches: Vec<_> = summary
                        .mismatches
                        .iter()
                        .map(|m| {
                            json!({
                                "tree": m.tree,
                                "n": m.n,
                                "only_algorithm": m.only_algorithm,
                                "only_oracle": m.only_oracle,
                            })
                        })
                        .collect();
                    let v = json!({
                        "trees": summary.trees,
                        "pairs": summary.pairs,
                        "empty_pairs": summary.empty_pairs,
                        "all_match": summary.all_match(),
                        "mismatches": mismatches,
                    });
                    serde_json::to_string_pretty(&v).expect("json") + "\n"
                }
                Format::Csv => {
                    let mut rows = Rows::new(&["tree", "n", "only_algorithm", "only_oracle"]);
                    for m in &summary.mismatches {
                        rows.push(vec![
                            m.tree.clone(),
                            m.n.to_string(),
                            join_covers(&m.only_algorithm),
                            join_covers(&m.only_oracle),
                        ]);
                    }
                    render_rows(&rows, format)
                }
            };
            Ok(Outcome { output, exit_code })
        }
    }
}

fn join_covers(covers: &[SweepCover]) -> String {
    covers
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_covers<'a>(covers: impl IntoIterator<Item = &'a SweepCover>, format: Format) -> String {
    let covers: Vec<&SweepCover> = covers.into_iter().collect();
    match format {
        Format::Text => covers.iter().map(|c| format!("{c}\n")).collect(),
        Format::Json => serde_json::to_string_pretty(&covers).expect("covers serialize") + "\n",
        Format::Csv => {
            let mut rows = Rows::new(&["cover", "set", "node"]);
            for (i, c) in covers.iter().enumerate() {
                for (j, set) in c.sets().iter().enumerate() {
                    for node in set {
                        rows.push(vec![i.to_string(), j.to_string(), node.to_string()]);
                    }
                }
            }
            render_rows(&rows, format)
        }
    }
}

/// Writes `text` to `out`, or standard output when absent.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..9").unwrap(), 2..=9);
        assert_eq!(parse_range("2..=9").unwrap(), 2..=9);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("9..2").is_err());
        assert!(parse_range("a..2").is_err());
        assert!(parse_range("-1..2").is_err());
    }
}
