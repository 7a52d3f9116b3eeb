//! Command-line front end. Exit status: 0 when the verdict is positive
//! (YES / valid), 1 when negative, 2 on usage or input errors.

mod render;
pub mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use render::{annotate_matrix, render_ascii};
use report::{CounterexampleJson, CoverageJson, PatternJson, Report};

use crate::graph::{random_interval_instance, random_rpartite, InstanceSeedSpec};
use crate::instance::Instance;
use crate::models::{build_reach_model, build_run_model, model_counterexample, IntervalModel};
use crate::orderings::{
    compute_coverage, find_forbidden_patterns, generalized_interval_violation, has_hell_huang_pattern, VertexOrdering,
};
use crate::recognition::{
    cross_validate_with_cap, recognize, recognize_exhaustive_with_cap, RecognitionResult, DEFAULT_ORACLE_CAP,
};

pub const ORACLE_CAP_VAR: &str = "RECOG_ORACLE_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "irgraph",
    version,
    about = "Interval r-graph recognition via vertex orderings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Instance file (JSON); `-` reads stdin.
    input: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Which interval construction to apply to an ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// `[p, m_p + 1/2]` from the last neighbor position.
    #[value(name = "thm1")]
    NeighborReach,
    /// `[p, r_p]` from the end of the row run.
    #[value(name = "thm2")]
    RowRun,
}

impl Construction {
    pub fn build(self, instance: &Instance, ordering: &VertexOrdering) -> crate::Result<IntervalModel> {
        match self {
            Construction::NeighborReach => build_reach_model(&instance.graph, ordering),
            Construction::RowRun => build_run_model(&instance.graph, ordering),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the instance's ordering (identity if absent) under all three characterizations.
    CheckOrdering {
        #[command(flatten)]
        io: Io,
        /// Maximum number of pattern witnesses to list.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Search for a certifying ordering and interval model.
    Recognize {
        #[command(flatten)]
        io: Io,
        /// Use the exhaustive oracle instead of the pruned search.
        #[arg(long)]
        oracle: bool,
    },
    /// Build an interval model from the instance's ordering (identity if absent).
    BuildModel {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = Construction::NeighborReach)]
        construction: Construction,
    },
    /// Check the instance's intervals against its graph.
    VerifyModel {
        #[command(flatten)]
        io: Io,
    },
    /// Print the ordered adjacency matrix with its row and column runs.
    AnnotateMatrix {
        #[command(flatten)]
        io: Io,
    },
    /// Generate a random instance.
    Generate {
        /// Number of vertices.
        #[arg(short, long)]
        n: usize,
        /// Number of parts.
        #[arg(short, long)]
        r: usize,
        /// Edge density for random r-partite graphs.
        #[arg(short, long, default_value_t = 0.5)]
        p: f64,
        /// RNG seed; the same seed gives the same instance.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Generate from random intervals (always an interval r-graph).
        #[arg(long)]
        interval: bool,
        /// Write the instance here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare the pruned search with the exhaustive oracle.
    CrossValidate {
        #[command(flatten)]
        io: Io,
    },
    /// Draw the instance's intervals (or a constructed model) as text.
    Render {
        #[command(flatten)]
        io: Io,
        /// Construct the model from the ordering even if intervals are present.
        #[arg(long, value_enum)]
        construction: Option<Construction>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    body: String,
    positive: bool,
    notes: Vec<String>,
}

fn oracle_cap() -> Result<usize, Failure> {
    match std::env::var(ORACLE_CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure(format!("{ORACLE_CAP_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn load(io: &Io, stdin: &mut dyn Read, notes: &mut Vec<String>) -> Result<Instance, Failure> {
    let text = if io.input.as_os_str() == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&io.input).map_err(|e| Failure(format!("cannot read {}: {e}", io.input.display())))?
    };
    let instance = Instance::parse(&text)?;
    notes.extend(instance.warnings.iter().cloned());
    Ok(instance)
}

fn ordering_of(instance: &Instance) -> VertexOrdering {
    instance
        .ordering
        .clone()
        .unwrap_or_else(|| VertexOrdering::identity(instance.graph.n()))
}

fn verdict(positive: bool, yes: &'static str, no: &'static str) -> &'static str {
    if positive {
        yes
    } else {
        no
    }
}

fn format_ordering(o: &VertexOrdering) -> String {
    o.order()
        .iter()
        .map(|v| format!("v{}", v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_model(m: &IntervalModel) -> String {
    m.intervals()
        .iter()
        .enumerate()
        .map(|(v, iv)| format!("v{}={iv}", v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_ordering(instance: &Instance, limit: Option<usize>, format: Format) -> Result<Output, Failure> {
    let g = &instance.graph;
    let ordering = ordering_of(instance);
    let violation = generalized_interval_violation(g, &ordering)?;
    let patterns = find_forbidden_patterns(g, &ordering, limit)?;
    let pattern_free = find_forbidden_patterns(g, &ordering, Some(1))?.is_empty();
    let coverage = compute_coverage(g, &ordering)?;
    let mut checks = BTreeMap::from([
        ("generalized_interval", violation.is_none()),
        ("pattern_free", pattern_free),
        ("r_interval", coverage.is_complete()),
    ]);
    if g.r() == 2 {
        checks.insert(
            "hell_huang_free_reversed",
            has_hell_huang_pattern(g, &ordering.reversed())?.is_none(),
        );
    }
    let gio = violation.is_none();
    let mut notes = Vec::new();
    if gio != pattern_free || gio != coverage.is_complete() {
        notes.push(format!("characterizations disagree on this ordering: {checks:?}"));
    }
    let positive = gio && pattern_free && coverage.is_complete();
    let body = match format {
        Format::Json => {
            let mut report = Report::new(verdict(positive, "valid", "invalid")).with_ordering(&ordering);
            report.checks = Some(checks);
            report.violation = violation.map(Into::into);
            report.patterns = Some(patterns.iter().map(PatternJson::from).collect());
            report.coverage = Some(CoverageJson::from(&coverage));
            report.warnings = instance.warnings.clone();
            report.to_json()
        }
        Format::Text => {
            let mut s = format!("ordering: {}\n", format_ordering(&ordering));
            for (name, ok) in &checks {
                s.push_str(&format!("{name}: {ok}\n"));
            }
            if let Some(v) = violation {
                s.push_str(&format!(
                    "first violation: edge at positions {}..{}, position {} not adjacent to the lower endpoint\n",
                    v.lower + 1,
                    v.upper + 1,
                    v.middle + 1
                ));
            }
            for w in &patterns {
                let [i, j, k] = w.positions;
                s.push_str(&format!(
                    "pattern {} at positions ({},{},{})\n",
                    w.kind,
                    i + 1,
                    j + 1,
                    k + 1
                ));
            }
            s.push_str(&format!("verdict: {}\n", verdict(positive, "valid", "invalid")));
            s
        }
    };
    Ok(Output { body, positive, notes })
}

fn recognition_report(instance: &Instance, result: &RecognitionResult, format: Format) -> String {
    let yes = result.is_yes();
    let mut stats = BTreeMap::from([
        ("nodes_expanded", json!(result.stats.nodes_expanded)),
        ("memo_hits", json!(result.stats.memo_hits)),
    ]);
    if let Some(k) = result.stats.orderings_examined {
        stats.insert("orderings_examined", json!(k));
    }
    if let Some(k) = result.stats.valid_orderings {
        stats.insert("valid_orderings", json!(k));
    }
    if let Some(k) = result.stats.disagreements {
        stats.insert("disagreements", json!(k));
    }
    match format {
        Format::Json => {
            let mut report = Report::new(verdict(yes, "yes", "no")).with_graph(&instance.graph);
            if let Some(cert) = &result.certificate {
                report = report.with_ordering(&cert.ordering).with_model(&cert.model);
            }
            report.stats = Some(stats);
            report.warnings = instance.warnings.clone();
            report.to_json()
        }
        Format::Text => {
            let mut s = format!("verdict: {}\n", verdict(yes, "YES", "NO"));
            if let Some(cert) = &result.certificate {
                s.push_str(&format!("ordering: {}\n", format_ordering(&cert.ordering)));
                s.push_str(&format!("intervals: {}\n", format_model(&cert.model)));
            }
            for (k, v) in stats {
                s.push_str(&format!("{k}: {v}\n"));
            }
            s
        }
    }
}

fn model_report(
    instance: &Instance,
    ordering: Option<&VertexOrdering>,
    model: &IntervalModel,
    format: Format,
) -> Result<Output, Failure> {
    let counterexample = model_counterexample(&instance.graph, model)?;
    let positive = counterexample.is_none();
    let body = match format {
        Format::Json => {
            let mut report = Report::new(verdict(positive, "valid", "invalid")).with_graph(&instance.graph);
            if let Some(o) = ordering {
                report = report.with_ordering(o);
            }
            report = report.with_model(model);
            report.counterexample = counterexample.map(CounterexampleJson::from);
            report.warnings = instance.warnings.clone();
            report.to_json()
        }
        Format::Text => {
            let mut s = format!("intervals: {}\n", format_model(model));
            if let Some(c) = counterexample {
                let c = CounterexampleJson::from(c);
                s.push_str(&format!(
                    "counterexample: v{} v{} ({})\n",
                    c.pair[0] + 1,
                    c.pair[1] + 1,
                    c.failure
                ));
            }
            s.push_str(&format!("verdict: {}\n", verdict(positive, "valid", "invalid")));
            s
        }
    };
    Ok(Output {
        body,
        positive,
        notes: Vec::new(),
    })
}

fn execute(
    command: &Command,
    stdin: &mut dyn Read,
    notes: &mut Vec<String>,
) -> Result<(Output, Option<PathBuf>), Failure> {
    let out = match command {
        Command::CheckOrdering { io, limit } => (check_ordering(&load(io, stdin, notes)?, *limit, io.format)?, io),
        Command::Recognize { io, oracle } => {
            let instance = load(io, stdin, notes)?;
            let result = if *oracle {
                recognize_exhaustive_with_cap(&instance.graph, oracle_cap()?)?
            } else {
                recognize(&instance.graph)?
            };
            let body = recognition_report(&instance, &result, io.format);
            let positive = result.is_yes();
            (
                Output {
                    body,
                    positive,
                    notes: Vec::new(),
                },
                io,
            )
        }
        Command::BuildModel { io, construction } => {
            let instance = load(io, stdin, notes)?;
            let ordering = ordering_of(&instance);
            let model = construction.build(&instance, &ordering)?;
            (model_report(&instance, Some(&ordering), &model, io.format)?, io)
        }
        Command::VerifyModel { io } => {
            let instance = load(io, stdin, notes)?;
            let model = instance
                .model
                .clone()
                .ok_or_else(|| Failure("instance has no \"intervals\" or \"intervals_x2\"".into()))?;
            (
                model_report(&instance, instance.ordering.as_ref(), &model, io.format)?,
                io,
            )
        }
        Command::AnnotateMatrix { io } => {
            let instance = load(io, stdin, notes)?;
            let ordering = ordering_of(&instance);
            let coverage = compute_coverage(&instance.graph, &ordering)?;
            let body = match io.format {
                Format::Text => annotate_matrix(&instance.graph, &ordering)?,
                Format::Json => {
                    let mut report =
                        Report::new(verdict(coverage.is_complete(), "valid", "invalid")).with_ordering(&ordering);
                    report.coverage = Some(CoverageJson::from(&coverage));
                    report.to_json()
                }
            };
            let positive = coverage.is_complete();
            (
                Output {
                    body,
                    positive,
                    notes: Vec::new(),
                },
                io,
            )
        }
        Command::Generate {
            n,
            r,
            p,
            seed,
            interval,
            output,
        } => {
            let instance = if *interval {
                let (g, m) = random_interval_instance(*n, *r, *seed)?;
                Instance::from_graph(g).with_model(Some(m))
            } else {
                Instance::from_graph(random_rpartite(&InstanceSeedSpec {
                    n: *n,
                    r: *r,
                    p: *p,
                    seed: *seed,
                })?)
            };
            let mut body = instance.to_json();
            body.push('\n');
            return Ok((
                Output {
                    body,
                    positive: true,
                    notes: Vec::new(),
                },
                output.clone(),
            ));
        }
        Command::CrossValidate { io } => {
            let instance = load(io, stdin, notes)?;
            let cv = cross_validate_with_cap(&instance.graph, oracle_cap()?)?;
            let positive = cv.agrees();
            let body = match io.format {
                Format::Json => {
                    let mut report = Report::new(verdict(positive, "valid", "invalid"));
                    report.stats = Some(BTreeMap::from([
                        (
                            "search_verdict",
                            json!(verdict(cv.search == crate::Verdict::Yes, "yes", "no")),
                        ),
                        (
                            "oracle_verdict",
                            json!(verdict(cv.oracle == crate::Verdict::Yes, "yes", "no")),
                        ),
                        ("same_certificate", json!(cv.same_certificate)),
                        ("orderings_examined", json!(cv.orderings_examined)),
                        ("three_way_agreements", json!(cv.three_way_agreements)),
                        ("disagreements", json!(cv.disagreements)),
                    ]));
                    report.reproducer = cv.reproducer.as_deref().map(serde_json::from_str).transpose()?;
                    report.to_json()
                }
                Format::Text => {
                    let mut s = format!(
                        "search: {:?}\noracle: {:?}\nsame certificate: {}\norderings examined: {}\nthree-way agreements: {}\ndisagreements: {}\n",
                        cv.search, cv.oracle, cv.same_certificate, cv.orderings_examined, cv.three_way_agreements, cv.disagreements
                    );
                    if let Some(r) = &cv.reproducer {
                        s.push_str("reproducer:\n");
                        s.push_str(r);
                        s.push('\n');
                    }
                    s
                }
            };
            (
                Output {
                    body,
                    positive,
                    notes: Vec::new(),
                },
                io,
            )
        }
        Command::Render { io, construction } => {
            let instance = load(io, stdin, notes)?;
            let model = match (construction, &instance.model) {
                (None, Some(m)) => m.clone(),
                (c, _) => c
                    .unwrap_or(Construction::NeighborReach)
                    .build(&instance, &ordering_of(&instance))?,
            };
            let positive = model_counterexample(&instance.graph, &model)?.is_none();
            let body = render_ascii(&model, &instance.graph)?;
            (
                Output {
                    body,
                    positive,
                    notes: Vec::new(),
                },
                io,
            )
        }
    };
    let (output, io) = out;
    Ok((output, io.output.clone()))
}

/// Runs one command. `args` includes the program name.
pub fn run_cli<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
            let _ = writeln!(stderr, "{line}");
            return 2;
        }
    };
    let mut notes = Vec::new();
    let outcome = execute(&cli.command, stdin, &mut notes);
    for note in &notes {
        let _ = writeln!(stderr, "warning: {note}");
    }
    match outcome {
        Ok((output, path)) => {
            for note in &output.notes {
                let _ = writeln!(stderr, "warning: {note}");
            }
            let written = match path {
                Some(p) => {
                    fs::write(&p, output.body.as_bytes()).map_err(|e| format!("cannot write {}: {e}", p.display()))
                }
                None => stdout.write_all(output.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "error: {msg}");
                return 2;
            }
            if output.positive {
                0
            } else {
                1
            }
        }
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {}", msg.lines().next().unwrap_or(""));
            2
        }
    }
}
