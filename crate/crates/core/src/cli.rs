//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::{catalogue, load_generators, parse_group_expr, GroupExpr, LoadError};
use crate::error::GroupError;
use crate::harness::{run_suite, Report, Subject, Suite};
use crate::invariants::{
    commuting_probability_from_classes, d_pi_from_classes, k_pi_from_classes, pi_part,
    prime_divisors, thresholds, ExactRatio, PrimeSet,
};
use crate::perm::{PermGroup, DEFAULT_CAP};
use crate::structure::{
    conjugacy_classes_capped, construct_nilpotent_hall_with_budget, derived_subgroup,
    has_abelian_hall, HallConstruction, DEFAULT_CONJUGATE_BUDGET,
};

/// Caps above this need `--allow-large-cap`.
pub const LARGE_CAP: u64 = 10_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hallgroup",
    version,
    about = "Hall subgroups and π-class counts of permutation groups"
)]
struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "HALLGROUP_FORMAT",
        default_value = "text"
    )]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, class counts, d_π, Pr and the thresholds for the smallest prime of π.
    Invariants(GroupArgs),
    /// Decide nilpotent and abelian Hall π-subgroups and build a witness.
    Hall {
        #[command(flatten)]
        group: GroupArgs,
        /// Conjugates examined while assembling a witness.
        #[arg(long, default_value_t = DEFAULT_CONJUGATE_BUDGET)]
        budget: usize,
    },
    /// Run verification suites and emit a report.
    Verify {
        /// One of hall, pr, sylow, simple, torus, sharpness, all.
        suite: String,
        /// Run per-group suites on this group instead of the catalogue.
        #[arg(long)]
        group: Option<String>,
        /// Generator file to run per-group suites on.
        #[arg(long, conflicts_with = "group")]
        file: Option<PathBuf>,
        /// Largest π size tried per group.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_pi: u64,
        /// Generator file for J1 (degree 266); the J1 check is skipped without it.
        #[arg(long)]
        j1: Option<PathBuf>,
    },
    /// List catalogue groups with orders and tags.
    Catalogue,
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Group expression such as "Sym(4) x Cyclic(5)".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    expr: Option<String>,
    /// Generator file instead of an expression.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Comma-separated primes; defaults to every prime dividing |G|.
    #[arg(long)]
    pi: Option<String>,
    /// Largest group order enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Permit `--cap` above 10^7.
    #[arg(long)]
    allow_large_cap: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Load(#[from] LoadError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Load(LoadError::Group(_)) | Self::Group(_) => EXIT_COMPUTATION,
            Self::Load(_) => EXIT_USAGE,
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_COMPUTATION;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    match &cli.command {
        Command::Invariants(args) => invariants(args, cli.format).map(|s| (s, EXIT_OK)),
        Command::Hall { group, budget } => hall(group, *budget, cli.format).map(|s| (s, EXIT_OK)),
        Command::Verify {
            suite,
            group,
            file,
            max_pi,
            j1,
        } => {
            let suite: Suite = suite.parse().map_err(CliError::Usage)?;
            let subject = match (group, file) {
                (Some(text), _) => Some(Subject::from_expr(&parse_expr(text)?)?),
                (None, Some(path)) => Some(Subject {
                    name: path.display().to_string(),
                    group: load_generators(path)?,
                    factors: vec![],
                }),
                (None, None) => None,
            };
            let max_pi = usize::try_from(*max_pi).unwrap_or(usize::MAX);
            let report = run_suite(
                suite,
                subject.as_ref().map(std::slice::from_ref),
                max_pi,
                j1.as_deref(),
            );
            let code = if report.has_counterexample() {
                EXIT_COUNTEREXAMPLE
            } else {
                EXIT_OK
            };
            Ok((render_report(&report, cli.format), code))
        }
        Command::Catalogue => catalogue_listing(cli.format).map(|s| (s, EXIT_OK)),
    }
}

fn parse_expr(text: &str) -> Result<GroupExpr, CliError> {
    parse_group_expr(text).map_err(|e| CliError::Usage(format!("cannot parse {text:?}: {e}")))
}

fn parse_pi(text: &str) -> Result<PrimeSet, CliError> {
    text.parse()
        .map_err(|e| CliError::Usage(format!("invalid --pi: {e}")))
}

struct Input {
    name: String,
    group: PermGroup,
    pi: PrimeSet,
    cap: u64,
}

fn load_input(args: &GroupArgs) -> Result<Input, CliError> {
    if args.cap > LARGE_CAP && !args.allow_large_cap {
        return Err(CliError::Usage(format!(
            "--cap {} exceeds {LARGE_CAP}; pass --allow-large-cap to confirm",
            args.cap
        )));
    }
    let pi = args.pi.as_deref().map(parse_pi).transpose()?;
    let (name, group) = match (&args.expr, &args.file) {
        (Some(text), _) => {
            let expr = parse_expr(text)?;
            (expr.to_string(), expr.build()?)
        }
        (None, Some(path)) => (path.display().to_string(), load_generators(path)?),
        (None, None) => return Err(CliError::Usage("no group given".into())),
    };
    if group.order() > args.cap {
        return Err(GroupError::OrderExceedsCap(args.cap).into());
    }
    let pi = match pi {
        Some(pi) => pi,
        None => PrimeSet::new(prime_divisors(group.order()))?,
    };
    Ok(Input {
        name,
        group,
        pi,
        cap: args.cap,
    })
}

#[derive(Serialize)]
struct InvariantsOutput {
    group: String,
    pi: String,
    order: u64,
    order_pi: u64,
    k: u64,
    k_pi: u64,
    d_pi: ExactRatio,
    pr: ExactRatio,
    /// Smallest prime of π.
    p: Option<u64>,
    nilpotent_threshold: Option<ExactRatio>,
    abelian_threshold: Option<ExactRatio>,
    above_nilpotent_threshold: Option<bool>,
    above_abelian_threshold: Option<bool>,
}

fn invariants(args: &GroupArgs, format: Format) -> Result<String, CliError> {
    let input = load_input(args)?;
    let classes = conjugacy_classes_capped(&input.group, input.cap)?;
    let order = input.group.order();
    let d = d_pi_from_classes(&classes, order, &input.pi);
    let p = input.pi.primes().first().copied();
    let t = p.map(thresholds);
    let output = InvariantsOutput {
        group: input.name,
        pi: input.pi.to_string(),
        order,
        order_pi: pi_part(order, &input.pi),
        k: classes.len() as u64,
        k_pi: k_pi_from_classes(&classes, &input.pi),
        pr: commuting_probability_from_classes(&classes, order),
        p,
        above_nilpotent_threshold: t.as_ref().map(|t| d > t.nilpotent),
        above_abelian_threshold: t.as_ref().map(|t| d > t.abelian),
        nilpotent_threshold: t.as_ref().map(|t| t.nilpotent.clone()),
        abelian_threshold: t.map(|t| t.abelian),
        d_pi: d,
    };
    render_record(&output, format)
}

#[derive(Serialize)]
struct HallOutput {
    group: String,
    pi: String,
    order_pi: u64,
    nilpotent: bool,
    abelian: bool,
    /// `witness`, `exists-by-lemma-only` or `absent`.
    construction: &'static str,
    witness_order: Option<u64>,
    witness_derived_order: Option<u64>,
    witness_generators: Option<Vec<String>>,
}

fn hall(args: &GroupArgs, budget: usize, format: Format) -> Result<String, CliError> {
    let input = load_input(args)?;
    let construction = construct_nilpotent_hall_with_budget(&input.group, &input.pi, budget)?;
    let nilpotent = !matches!(construction, HallConstruction::Absent);
    let abelian = nilpotent && has_abelian_hall(&input.group, &input.pi)?;
    let mut output = HallOutput {
        group: input.name,
        pi: input.pi.to_string(),
        order_pi: pi_part(input.group.order(), &input.pi),
        nilpotent,
        abelian,
        construction: match construction {
            HallConstruction::Witness(_) => "witness",
            HallConstruction::ExistsByLemmaOnly => "exists-by-lemma-only",
            HallConstruction::Absent => "absent",
        },
        witness_order: None,
        witness_derived_order: None,
        witness_generators: None,
    };
    if let Some(h) = construction.witness() {
        output.witness_order = Some(h.order());
        output.witness_derived_order = Some(derived_subgroup(&h.subgroup)?.order());
        output.witness_generators = Some(
            h.subgroup
                .nontrivial_generators()
                .map(ToString::to_string)
                .collect(),
        );
    }
    render_record(&output, format)
}

#[derive(Serialize)]
struct CatalogueRow {
    name: String,
    order: u64,
    degree: usize,
    tags: String,
}

fn catalogue_listing(format: Format) -> Result<String, CliError> {
    let mut rows = Vec::new();
    for entry in catalogue() {
        let group = entry.expr.build()?;
        rows.push(CatalogueRow {
            name: entry.name,
            order: group.order(),
            degree: group.degree(),
            tags: entry.tags.join(";"),
        });
    }
    Ok(match format {
        Format::Json => json(&rows),
        Format::Csv => csv_rows(&rows),
        Format::Text => {
            let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
            rows.iter()
                .map(|r| {
                    format!(
                        "{:<width$}  order {:>6}  degree {:>4}  {}\n",
                        r.name, r.order, r.degree, r.tags
                    )
                })
                .collect()
        }
    })
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows<T: Serialize>(rows: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

/// A single record: pretty JSON, a `key,value` CSV, or `key: value` lines.
fn render_record<T: Serialize>(record: &T, format: Format) -> Result<String, CliError> {
    if format == Format::Json {
        return Ok(json(record));
    }
    let value = serde_json::to_value(record).expect("serializable");
    let fields = value.as_object().expect("record is a struct");
    let show = |v: &serde_json::Value| match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => "-".into(),
        serde_json::Value::Array(items) => items
            .iter()
            .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_string))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    };
    Ok(match format {
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["key", "value"])
                .expect("in-memory write");
            for (k, v) in fields {
                writer
                    .write_record([k.as_str(), &show(v)])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
        }
        _ => {
            let width = fields.keys().map(String::len).max().unwrap_or(0);
            fields
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {}\n", show(v)))
                .collect()
        }
    })
}
