//! The `compcount` command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and writes the result
//! as plain text, CSV or JSON. Exit codes: 0 success, 1 domain error (or a
//! failed verification), 2 usage error, 3 resource guard.

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::compositions::{self, PartBounds, TriangleKind, UpperBound};
use crate::exactnum;
use crate::graphcomp::{self, GraphFamily, DEFAULT_CAP, MAX_CAP};
use crate::series;
use crate::Error;

pub mod output;
pub mod verify;

pub use output::{Entry, Format, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "compcount",
    version,
    about = "Exact counts of integer and graph compositions"
)]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for randomized verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Vertex cap for the subset dynamic program.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count compositions under one constraint family.
    #[command(subcommand)]
    Count(CountCommand),
    /// Print the Π[n,k] or C[n,k] triangle.
    Triangle {
        #[arg(long, value_enum)]
        kind: TriangleArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
    },
    /// Expand a generating function.
    Series {
        #[arg(long, value_enum)]
        family: SeriesFamily,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        order: usize,
    },
    /// Graph composition counts.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Run the oracle cross-checks.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct NK {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: i64,
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// C(n,k,a,b): k parts, each in [min, max].
    #[command(allow_negative_numbers = true)]
    Restricted {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: i64,
        #[arg(long, default_value_t = 1)]
        min: u64,
        /// Omit for no upper bound.
        #[arg(long)]
        max: Option<u64>,
    },
    /// Distinct parts: C[n,k], or C[n] without --k.
    #[command(allow_negative_numbers = true)]
    Distinct {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
        /// Count partitions Π[n,k] instead of compositions (needs --k).
        #[arg(long)]
        partitions: bool,
    },
    /// Leading summand k bounds later parts; totals over k without --k.
    #[command(allow_negative_numbers = true)]
    Leading {
        #[arg(long, value_enum)]
        mode: LeadingMode,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Compositions of n with no part equal to k.
    Avoid(NK),
    /// Compositions of n with some part equal to k.
    Contain(NK),
    /// Compositions of n into parts at most m.
    #[command(allow_negative_numbers = true)]
    Fib {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
    },
    /// Bell number B_n.
    Bell {
        #[arg(long)]
        n: u64,
    },
    /// Stirling numbers of either kind.
    Stirling {
        #[arg(long, value_enum)]
        kind: StirlingKind,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Evaluate through the sum over compositions.
        #[arg(long)]
        via_compositions: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Count compositions of a graph read from an edge-list file.
    Count {
        #[arg(long)]
        file: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = GraphMethod::Reduce)]
        method: GraphMethod,
    },
    /// Closed-form count for a graph family.
    Family {
        #[arg(long)]
        name: FamilyArg,
        #[arg(long)]
        n: u64,
        /// Print the family member as an edge list instead of its count.
        #[arg(long)]
        emit_graph: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TriangleArg {
    Pi,
    Cdistinct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeriesFamily {
    Fstrict,
    Fweak,
    Avoid,
    Contain,
    DistinctTotal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Compositions,
    Series,
    Graphs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LeadingMode {
    Strict,
    Weak,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StirlingKind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphMethod {
    Reduce,
    Dp,
}

#[derive(Debug, Clone, Copy)]
struct FamilyArg(GraphFamily);

impl std::str::FromStr for FamilyArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse().map(FamilyArg)
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    if cli.cap > MAX_CAP {
        let _ = writeln!(
            err,
            "error: --cap {} exceeds the maximum of {MAX_CAP}",
            cli.cap
        );
        return EXIT_USAGE;
    }
    match execute(&cli) {
        Ok((rendered, code)) => match rendered.write(cli.format, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(output::Rendered, i32), Error> {
    let rendered = match &cli.command {
        Command::Count(c) => count(c)?,
        Command::Triangle { kind, rows } => triangle(*kind, *rows as usize),
        Command::Series { family, k, order } => series_cmd(*family, *k, *order)?,
        Command::Graph(g) => graph(g, cli.cap)?,
        Command::Verify { suite, max_n } => return Ok(verify_cmd(*suite, *max_n, cli)),
    };
    Ok((rendered, EXIT_OK))
}

fn single(
    record: OutputRecord,
    index: impl ToString,
    value: &exactnum::BigCount,
) -> output::Rendered {
    let mut record = record;
    record.push_count(index, value);
    output::Rendered::single(record)
}

fn count(c: &CountCommand) -> Result<output::Rendered, Error> {
    Ok(match c {
        CountCommand::Restricted { n, k, min, max } => {
            let upper = max.map_or(UpperBound::Unbounded, UpperBound::Finite);
            let bounds = PartBounds::new(*min, upper)?;
            let value = compositions::count_restricted(*n, *k, bounds);
            let rec = OutputRecord::new("count restricted")
                .param("n", n)
                .param("k", k)
                .param("min", min)
                .param("max", max.map_or("inf".to_string(), |b| b.to_string()));
            single(rec, n, &value)
        }
        CountCommand::Distinct { n, k, partitions } => {
            let rec = OutputRecord::new("count distinct").param("n", n);
            match (k, partitions) {
                (Some(k), false) => {
                    let v = compositions::count_compositions_distinct(*n, *k);
                    single(rec.param("k", k), n, &v)
                }
                (Some(k), true) => {
                    let v = compositions::count_partitions_distinct(*n, *k);
                    single(rec.param("k", k).param("kind", "partitions"), n, &v)
                }
                (None, false) => {
                    single(rec, n, &compositions::count_compositions_distinct_total(*n))
                }
                (None, true) => return Err(Error::Usage("--partitions needs --k".into())),
            }
        }
        CountCommand::Leading { mode, n, k } => {
            type PerK = fn(i64, i64) -> exactnum::BigCount;
            type Total = fn(i64) -> exactnum::BigCount;
            let (name, per_k, total): (_, PerK, Total) = match mode {
                LeadingMode::Strict => (
                    "strict",
                    compositions::count_leading_strict,
                    compositions::count_leading_strict_total,
                ),
                LeadingMode::Weak => (
                    "weak",
                    compositions::count_leading_weak,
                    compositions::leading_weak_total,
                ),
            };
            let rec = OutputRecord::new("count leading")
                .param("mode", name)
                .param("n", n);
            match k {
                Some(k) => single(rec.param("k", k), n, &per_k(*n, *k)),
                None => single(rec, n, &total(*n)),
            }
        }
        CountCommand::Avoid(NK { n, k }) => {
            if *k < 1 {
                return Err(Error::Domain(format!("--k must be at least 1, got {k}")));
            }
            let rec = OutputRecord::new("count avoid").param("n", n).param("k", k);
            single(rec, n, &compositions::count_avoiding(*n, *k))
        }
        CountCommand::Contain(NK { n, k }) => {
            if *k < 1 {
                return Err(Error::Domain(format!("--k must be at least 1, got {k}")));
            }
            let rec = OutputRecord::new("count contain")
                .param("n", n)
                .param("k", k);
            single(rec, n, &compositions::count_containing(*n, *k))
        }
        CountCommand::Fib { m, n } => {
            let rec = OutputRecord::new("count fib").param("m", m).param("n", n);
            single(rec, n, &compositions::fibonacci_higher(*m, *n))
        }
        CountCommand::Bell { n } => single(
            OutputRecord::new("count bell").param("n", n),
            n,
            &exactnum::bell(*n),
        ),
        CountCommand::Stirling {
            kind,
            n,
            k,
            via_compositions,
        } => {
            let value = match (kind, via_compositions) {
                (StirlingKind::First, false) => exactnum::stirling1(*n, *k),
                (StirlingKind::First, true) => exactnum::stirling1_via_compositions(*n, *k),
                (StirlingKind::Second, false) => exactnum::stirling2(*n, *k),
                (StirlingKind::Second, true) => exactnum::stirling2_via_compositions(*n, *k),
            };
            let kind_name = match kind {
                StirlingKind::First => "first",
                StirlingKind::Second => "second",
            };
            let rec = OutputRecord::new("count stirling")
                .param("kind", kind_name)
                .param("n", n)
                .param("k", k);
            single(rec, format!("{n},{k}"), &value)
        }
    })
}

fn triangle(kind: TriangleArg, rows: usize) -> output::Rendered {
    let (kind, name) = match kind {
        TriangleArg::Pi => (TriangleKind::PartitionsDistinct, "pi"),
        TriangleArg::Cdistinct => (TriangleKind::CompositionsDistinct, "cdistinct"),
    };
    let t = compositions::triangle(kind, rows);
    let mut rec = OutputRecord::new("triangle")
        .param("kind", name)
        .param("rows", rows);
    for (n, row) in t.rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            rec.push_count(format!("{n},{k}"), v);
        }
    }
    output::Rendered::new(rec, t.to_string())
}

fn series_cmd(
    family: SeriesFamily,
    k: Option<u32>,
    order: usize,
) -> Result<output::Rendered, Error> {
    let need_k = |k: Option<u32>| k.ok_or_else(|| Error::Usage("this family needs --k".into()));
    let (name, s) = match family {
        SeriesFamily::Fstrict => (
            "fstrict",
            match k {
                Some(k) => series::gf_leading_strict(k)?.expand(order)?,
                None => series::gf_leading_strict_total(order),
            },
        ),
        SeriesFamily::Fweak => (
            "fweak",
            match k {
                Some(k) => series::gf_leading_weak(k)?.expand(order)?,
                None => series::gf_leading_weak_total(order),
            },
        ),
        SeriesFamily::Avoid => ("avoid", series::gf_avoiding(need_k(k)?)?.expand(order)?),
        SeriesFamily::Contain => ("contain", series::gf_containing(need_k(k)?)?.expand(order)?),
        SeriesFamily::DistinctTotal => {
            if k.is_some() {
                return Err(Error::Usage("distinct-total takes no --k".into()));
            }
            ("distinct-total", series::gf_distinct_total(order))
        }
    };
    let mut rec = OutputRecord::new("series")
        .param("family", name)
        .param("order", order);
    if let Some(k) = k {
        rec = rec.param("k", k);
    }
    for (i, c) in s.coeffs().iter().enumerate() {
        rec.push(i, c);
    }
    let plain = s
        .coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    Ok(output::Rendered::new(rec, plain + "\n"))
}

fn graph(g: &GraphCommand, cap: usize) -> Result<output::Rendered, Error> {
    Ok(match g {
        GraphCommand::Count { file, method } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let graph = graphcomp::parse_edge_list(&text)?;
            let (method_name, value) = match method {
                GraphMethod::Reduce => {
                    ("reduce", graphcomp::reduce_and_count_with_cap(&graph, cap)?)
                }
                GraphMethod::Dp => (
                    "dp",
                    graphcomp::count_compositions_graph_with_cap(&graph, cap)?,
                ),
            };
            let rec = OutputRecord::new("graph count")
                .param("file", file.display())
                .param("vertices", graph.vertex_count())
                .param("edges", graph.edge_count())
                .param("method", method_name);
            single(rec, graph.vertex_count(), &value)
        }
        GraphCommand::Family {
            name,
            n,
            emit_graph,
        } => {
            let family = name.0;
            if *emit_graph {
                let graph = graphcomp::build_family(family, *n)?;
                let rec = OutputRecord::new("graph family")
                    .param("name", family)
                    .param("n", n)
                    .param("edge_list", graph.to_edge_list());
                return Ok(output::Rendered::new(rec, graph.to_edge_list()));
            }
            let value = graphcomp::family_count(family, *n)?;
            let rec = OutputRecord::new("graph family")
                .param("name", family)
                .param("n", n);
            single(rec, n, &value)
        }
    })
}

fn verify_cmd(suite: SuiteArg, max_n: usize, cli: &Cli) -> (output::Rendered, i32) {
    let suite = match suite {
        SuiteArg::All => verify::Suite::All,
        SuiteArg::Compositions => verify::Suite::Compositions,
        SuiteArg::Series => verify::Suite::Series,
        SuiteArg::Graphs => verify::Suite::Graphs,
    };
    let config = verify::VerifyConfig {
        suite,
        max_n,
        seed: cli.seed,
        cap: cli.cap,
    };
    let report = verify::run_suite(&config, &verify::Counters::standard());
    let passed = report.passed();
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.name)
        .collect();
    let mut rec = OutputRecord::new("verify")
        .param("suite", format!("{suite:?}").to_lowercase())
        .param("max_n", max_n)
        .param("seed", cli.seed)
        .param("status", if passed { "pass" } else { "fail" })
        .param("failed", failed.join(","));
    let mut plain = String::new();
    for check in &report.checks {
        rec.push(check.name, check.cases);
        plain.push_str(&check.to_string());
        plain.push('\n');
    }
    let mut rendered = output::Rendered::new(rec, plain);
    rendered.header = Some(format!("seed {}", cli.seed));
    (rendered, if passed { EXIT_OK } else { EXIT_DOMAIN })
}
