//! Argument parsing and command execution for the `qfib` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use qfib::partitions::{enumerate_partitions_avoiding, parse_partition_list, SetPartition};
use qfib::permstats::{enumerate_avoiders, parse_pattern_list, west_class, Permutation, WestClass};
use qfib::qfib::{identity_catalog, verify_all, verify_identity, Engine, Family, IdentityReport, Method};
use qfib::{Error, Monomial, MultiPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qfib", version, about = "q-Fibonacci polynomials of pattern-restricted permutation classes")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the members of a class
    Enumerate {
        /// Comma-separated patterns (`123,132,213`), partition patterns (`13/2,123`) or W1|W2|W3
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distribution of a statistic over a permutation class, as a polynomial in q
    Distribution {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        stat: Stat,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One q-Fibonacci polynomial
    Qfib {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "oracle")]
        method: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check an identity against the oracle
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        identity: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_n: Option<usize>,
        /// Cap on the first index of two-index identities
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Polynomials for n = 0..=max-n
    Table {
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "oracle")]
        method: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Latex)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Latex,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Inv,
    Maj,
    Des,
    Cyc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassSpec {
    Permutations(Vec<Permutation>),
    Partitions(Vec<SetPartition>),
    West(WestClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Enumerate { class: ClassSpec, n: usize, format: Format },
    Distribution { patterns: Vec<Permutation>, n: usize, stat: Stat, format: Format },
    Qfib { family: Family, n: usize, method: Method, format: Format },
    Verify { identity: Option<String>, max_n: Option<usize>, max_m: Option<usize>, format: Format },
    Table { family: Family, max_n: usize, method: Method, format: TableFormat },
}

/// A command line that did not produce a command: a rejection, or a help
/// or version request (exit code 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError {
    pub message: String,
    pub exit_code: i32,
}

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(flag: &str, e: impl std::fmt::Display) -> UsageError {
    UsageError { message: format!("error: invalid value for --{flag}: {e}\n"), exit_code: EXIT_USAGE }
}

fn parse_class(s: &str) -> Result<ClassSpec, UsageError> {
    if let Ok(w) = s.parse::<WestClass>() {
        return Ok(ClassSpec::West(w));
    }
    if s.contains('/') {
        parse_partition_list(s).map(ClassSpec::Partitions).map_err(|e| usage("class", e))
    } else {
        parse_pattern_list(s).map(ClassSpec::Permutations).map_err(|e| usage("class", e))
    }
}

fn parse_family(s: &str) -> Result<Family, UsageError> {
    let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
    s.parse()
        .map_err(|e| usage("family", format!("{e}; valid families: {}", names.join(", "))))
}

fn parse_method(s: &str, family: Family) -> Result<Method, UsageError> {
    let m: Method = s
        .parse()
        .map_err(|_| usage("method", format!("{s:?}; valid methods: oracle, recursion, closed-form")))?;
    match m {
        Method::Recursion if !family.has_recursion() => {
            Err(usage("method", format!("family {family} has no recursion")))
        }
        Method::ClosedForm if family != Family::I => Err(usage("method", "closed-form exists only for family I")),
        _ => Ok(m),
    }
}

fn parse_identity(s: &str) -> Result<String, UsageError> {
    let catalog = identity_catalog();
    catalog
        .iter()
        .find(|i| i.id.eq_ignore_ascii_case(s.trim()))
        .map(|i| i.id.to_string())
        .ok_or_else(|| {
            let ids: Vec<&str> = catalog.iter().map(|i| i.id).collect();
            usage("identity", format!("{s:?} is not a catalog id; valid ids: {}", ids.join(", ")))
        })
}

/// Parses and validates a full argument vector; `argv[0]` is the verb.
pub fn parse_args<I, T>(argv: I) -> Result<Command, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("qfib")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| UsageError {
        message: e.render().to_string(),
        exit_code: if e.use_stderr() { EXIT_USAGE } else { EXIT_OK },
    })?;
    Ok(match cli.verb {
        Verb::Enumerate { class, n, format } => Command::Enumerate { class: parse_class(&class)?, n, format },
        Verb::Distribution { class, n, stat, format } => match parse_class(&class)? {
            ClassSpec::Permutations(patterns) => Command::Distribution { patterns, n, stat, format },
            ClassSpec::West(w) => Command::Distribution { patterns: w.patterns(), n, stat, format },
            ClassSpec::Partitions(_) => {
                return Err(usage("class", "distribution takes permutation patterns"));
            }
        },
        Verb::Qfib { family, n, method, format } => {
            let family = parse_family(&family)?;
            let method = parse_method(&method, family)?;
            if family.west_class().is_some() && n == 0 {
                return Err(usage("n", "West families start at n = 1"));
            }
            Command::Qfib { family, n, method, format }
        }
        Verb::Verify { identity, all, max_n, max_m, format } => {
            let identity = if all { None } else { identity.as_deref().map(parse_identity).transpose()? };
            Command::Verify { identity, max_n, max_m, format }
        }
        Verb::Table { family, max_n, method, format } => {
            let family = parse_family(&family)?;
            let method = parse_method(&method, family)?;
            Command::Table { family, max_n, method, format }
        }
    })
}

fn fail(e: Error) -> (String, i32) {
    let code = match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        _ => EXIT_USAGE,
    };
    (format!("error: {e}\n"), code)
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| format!("{i}\n")).collect()
}

fn json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn poly_out(p: &MultiPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{}\n", p.canonical_text()),
        Format::Json => json(p),
    }
}

fn statistic(p: &Permutation, stat: Stat) -> usize {
    match stat {
        Stat::Inv => p.inv(),
        Stat::Maj => p.maj(),
        Stat::Des => p.descent_set().len(),
        Stat::Cyc => p.cycle_decomposition().count(),
    }
}

fn run(c: &Command) -> Result<(String, i32), Error> {
    Ok(match c {
        Command::Enumerate { class, n, format } => {
            let out = match class {
                ClassSpec::Permutations(pats) => {
                    let v = enumerate_avoiders(*n, pats)?;
                    if *format == Format::Json { json(&v) } else { lines(&v) }
                }
                ClassSpec::West(w) => {
                    let v = west_class(*n, *w)?;
                    if *format == Format::Json { json(&v) } else { lines(&v) }
                }
                ClassSpec::Partitions(pats) => {
                    let v = enumerate_partitions_avoiding(*n, pats)?;
                    if *format == Format::Json { json(&v) } else { lines(&v) }
                }
            };
            (out, EXIT_OK)
        }
        Command::Distribution { patterns, n, stat, format } => {
            let mut p = MultiPoly::zero();
            for sigma in enumerate_avoiders(*n, patterns)? {
                p.add_term(Monomial::q_pow(statistic(&sigma, *stat) as i32), 1.into());
            }
            (poly_out(&p, *format), EXIT_OK)
        }
        Command::Qfib { family, n, method, format } => {
            (poly_out(&Engine::shared().compute(*family, *n, *method)?, *format), EXIT_OK)
        }
        Command::Verify { identity, max_n, max_m, format } => {
            let reports = match identity {
                Some(id) => vec![verify_identity(id, *max_n, *max_m)?],
                None => verify_all(*max_n)?,
            };
            let code = if reports.iter().all(IdentityReport::some_reading_holds) { EXIT_OK } else { EXIT_FAILS };
            let out = match (format, identity) {
                (Format::Json, Some(_)) => json(&reports[0]),
                (Format::Json, None) => json(&reports),
                (Format::Text, _) => reports.iter().map(summary).collect(),
            };
            (out, code)
        }
        Command::Table { family, max_n, method, format } => {
            let engine = Engine::shared();
            let start = usize::from(family.west_class().is_some());
            let mut out = String::new();
            match format {
                TableFormat::Latex => {
                    out.push_str("\\begin{tabular}{r|l}\n$n$ & $F_n");
                    let _ = writeln!(out, "^{{{}}}$ \\\\ \\hline", family.name());
                    for n in start..=*max_n {
                        let p = engine.compute(*family, n, *method)?;
                        let _ = writeln!(out, "{n} & ${}$ \\\\", p.to_latex());
                    }
                    out.push_str("\\end{tabular}\n");
                }
                TableFormat::Csv => {
                    out.push_str("n,count,polynomial\n");
                    for n in start..=*max_n {
                        let p = engine.compute(*family, n, *method)?;
                        let _ = writeln!(out, "{n},{},\"{}\"", family.class_size(n), p.canonical_text());
                    }
                }
            }
            (out, EXIT_OK)
        }
    })
}

fn summary(r: &IdentityReport) -> String {
    let holds = r.holding_readings();
    let range = match r.max_m {
        Some(m) => format!("n <= {}, m <= {m}", r.max_n),
        None => format!("{} <= n <= {}", r.min_n, r.max_n),
    };
    let mut s = if holds.is_empty() {
        format!("{}: FAILS for every reading ({range})\n", r.id)
    } else {
        format!("{}: holds ({range}); readings: {}\n", r.id, holds.join("; "))
    };
    if let Some(ce) = &r.counterexample {
        let _ = writeln!(s, "  counterexample {:?} [{}]:\n    lhs = {}\n    rhs = {}", ce.indices, ce.reading, ce.lhs, ce.rhs);
    }
    for n in &r.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

/// Runs a validated command, returning stdout text and the exit code.
/// Errors are rendered into the text.
pub fn execute(c: &Command) -> (String, i32) {
    run(c).unwrap_or_else(fail)
}
