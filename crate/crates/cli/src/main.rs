use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use spatial_entropy::counting::{count, CountMode};
use spatial_entropy::entropy::{omega_entropy, projectional_entropy, rect_entropy_table, EntropySequence};
use spatial_entropy::error::Error;
use spatial_entropy::io::{fmt12, parse_lattice_arg, parse_spec_arg, parse_system_arg, round12};
use spatial_entropy::lattice::{is_tessellation, Point, DEFAULT_TESSELLATION_BOUND};
use spatial_entropy::mixing::{verify_block_gluing, GluingVariant};
use spatial_entropy::multiplicative::entropy_x_q0_series;
use spatial_entropy::reproduce::{reproduce, Params, Target};
use spatial_entropy::systems::{condition_report, omega_q_entropy_series, ConditionOptions};

/// Admissible-pattern counts and spatial entropies of two-dimensional shifts
/// of finite type.
///
/// Logarithms are natural. Reals are printed with 12 significant digits and
/// exact counts in full decimal. Exit codes: 0 success or pass, 1 failed
/// reproduction, 2 usage or parse error, 3 budget exceeded.
#[derive(Parser)]
#[command(name = "spatial-entropy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format; each command has its own default.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Refuse lattices with more than this many cells.
    #[arg(long, value_name = "CELLS")]
    budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    /// Whitespace-separated `index ratio` pairs.
    Plot,
}

#[derive(Subcommand)]
enum Command {
    /// Count patterns on one lattice.
    Count {
        /// Builtin name (golden-mean-h, hard-squares, full:N, ...), JSON, or file.
        #[arg(long)]
        spec: String,
        /// Short form (rect:m,n, omega_q:q,n, stick:n,vx,vy,b, ...), JSON, or file.
        #[arg(long)]
        lattice: String,
        /// `local` or `ext:<margin>`.
        #[arg(long, default_value = "local")]
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// Table of `ln Γ / mn` over rectangles up to `M×N`. Plot data is the diagonal.
    EntropyRect {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "12x12", value_name = "MxN")]
        table: String,
        #[command(flatten)]
        common: Common,
    },
    /// Entropy ratios along an expanding system.
    EntropyOmega {
        #[arg(long)]
        spec: String,
        /// squares, rect:W,H, omega_q:q, stick:vx,vy[,a], lshape, staircase, JSON, or file.
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "1:8", value_name = "A:B")]
        n_range: String,
        #[command(flatten)]
        common: Common,
    },
    /// Entropy of the restriction to the line through `v`.
    Projectional {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "1,0", value_name = "X,Y")]
        v: String,
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value = "local")]
        mode: String,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form entropy series with a bound on the omitted tail.
    Series {
        #[arg(long, value_enum, default_value = "omega-q")]
        kind: SeriesKind,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long, default_value_t = 40)]
        terms: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Boundary, complement, block and run-length ratios along a system.
    Conditions {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "1:20", value_name = "A:B")]
        n_range: String,
        #[arg(long, default_value_t = 3)]
        m_max: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded block-gluing check.
    Gluing {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 1.0)]
        gap: f64,
        #[arg(long, default_value_t = 2)]
        window: u64,
        #[arg(long, default_value_t = 4)]
        extent: i64,
        #[arg(long, value_enum, default_value = "full")]
        variant: Variant,
        #[command(flatten)]
        common: Common,
    },
    /// Whether translates of a lattice partition the plane.
    Tessellation {
        #[arg(long)]
        lattice: String,
        #[arg(long, default_value_t = DEFAULT_TESSELLATION_BOUND)]
        bound: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute a named identity or inequality and report pass or fail.
    Reproduce {
        /// eq1_7, eq1_10, eq1_11, eq1_12, eq1_13, eq1_5, prop2_1, lemma3_1, thm4_1, thm4_2.
        target: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        terms: Option<u64>,
        #[arg(long, value_name = "MxN")]
        table: Option<String>,
        #[arg(long)]
        spec: Option<String>,
        #[arg(long)]
        system: Option<String>,
        #[arg(long, value_name = "A:B")]
        n_range: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    OmegaQ,
    Multiplicative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Full,
    Horizontal,
    Vertical,
}

enum Failure {
    Lib(Error),
    Reproduction,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn parse_pair(text: &str, sep: char, what: &str) -> Result<(u64, u64), Error> {
    text.split_once(sep)
        .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| Error::Parse(format!("{what} must look like A{sep}B, got {text:?}")))
}

fn parse_range(text: &str) -> Result<(u64, u64), Error> {
    let (a, b) = parse_pair(text, ':', "--n-range")?;
    if a > b {
        return Err(Error::InvalidArgument(format!("empty range {text}")));
    }
    Ok((a, b))
}

fn parse_vector(text: &str) -> Result<Point, Error> {
    text.split_once(',')
        .and_then(|(a, b)| Some(Point::new(a.trim().parse().ok()?, b.trim().parse().ok()?)))
        .ok_or_else(|| Error::Parse(format!("vector must look like X,Y, got {text:?}")))
}

fn within(budget: Option<u64>, cells: u64) -> Result<(), Error> {
    match budget {
        Some(b) if cells > b => Err(Error::BudgetExceeded {
            what: "lattice cells",
            needed: cells,
            budget: b,
        }),
        _ => Ok(()),
    }
}

/// Serializes with every float rounded to 12 significant digits.
fn json<T: Serialize>(value: &T) -> String {
    fn round(v: Value) -> Value {
        match v {
            Value::Number(n) if n.is_f64() => {
                serde_json::Number::from_f64(round12(n.as_f64().unwrap())).map_or(Value::Null, Value::Number)
            }
            Value::Array(a) => Value::Array(a.into_iter().map(round).collect()),
            Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round(v))).collect()),
            other => other,
        }
    }
    let v = round(serde_json::to_value(value).expect("plain data"));
    serde_json::to_string_pretty(&v).expect("plain data") + "\n"
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format.to_possible_value().unwrap().get_name().to_owned();
    Failure::Lib(Error::InvalidArgument(format!(
        "{command} does not support --format {name}"
    )))
}

fn sequence_output(seq: &EntropySequence, format: Format) -> Result<String, Failure> {
    let mut s = String::new();
    match format {
        Format::Json => return Ok(json(seq)),
        Format::Csv => {
            s.push_str("n,size,log_count,ratio\n");
            for r in &seq.records {
                writeln!(s, "{},{},{},{}", r.n, r.size, fmt12(r.log_count), fmt12(r.ratio)).unwrap();
            }
        }
        Format::Plot => {
            for r in &seq.records {
                writeln!(s, "{} {}", r.n, fmt12(r.ratio)).unwrap();
            }
        }
        Format::Text => {
            for r in &seq.records {
                writeln!(s, "n={} size={} ratio={}", r.n, r.size, fmt12(r.ratio)).unwrap();
            }
            writeln!(s, "estimate {}", fmt12(seq.estimate)).unwrap();
        }
    }
    Ok(s)
}

/// Returns the text to emit and whether the run counts as a pass.
fn run(command: Command) -> Result<(String, Common, bool), Failure> {
    Ok(match command {
        Command::Count {
            spec,
            lattice,
            mode,
            common,
        } => {
            let spec = parse_spec_arg(&spec)?;
            let lattice = parse_lattice_arg(&lattice)?;
            let mode: CountMode = mode.parse()?;
            within(common.budget, lattice.len() as u64)?;
            let r = count(&lattice, &spec, mode)?;
            let text = match common.format.unwrap_or(Format::Text) {
                Format::Text => format!("{}\n", r.value),
                Format::Json => json(&r),
                Format::Csv => format!("count,mode,size\n{},{},{}\n", r.value, r.mode, r.lattice_size),
                f @ Format::Plot => return Err(unsupported(f, "count")),
            };
            (text, common, true)
        }
        Command::EntropyRect { spec, table, common } => {
            let spec = parse_spec_arg(&spec)?;
            let (m, n) = parse_pair(&table, 'x', "--table")?;
            within(common.budget, m * n)?;
            let t = rect_entropy_table(&spec, m, n)?;
            let mut s = String::new();
            match common.format.unwrap_or(Format::Csv) {
                Format::Json => s = json(&t),
                Format::Csv => {
                    s.push_str("m,n,log_count,ratio\n");
                    for (m, n, lc, r) in t.entries() {
                        writeln!(s, "{m},{n},{},{}", fmt12(lc), fmt12(r)).unwrap();
                    }
                }
                Format::Plot => {
                    for k in 1..=m.min(n) {
                        writeln!(s, "{k} {}", fmt12(t.ratio(k, k))).unwrap();
                    }
                }
                Format::Text => {
                    writeln!(s, "minimum {} at {}x{}", fmt12(t.estimate), t.argmin.0, t.argmin.1).unwrap();
                }
            }
            (s, common, true)
        }
        Command::EntropyOmega {
            spec,
            system,
            n_range,
            common,
        } => {
            let spec = parse_spec_arg(&spec)?;
            let system = parse_system_arg(&system)?;
            let (lo, hi) = parse_range(&n_range)?;
            for n in lo..=hi {
                within(common.budget, system.lattice(n)?.len() as u64)?;
            }
            let seq = omega_entropy(&spec, &system, lo, hi)?;
            (
                sequence_output(&seq, common.format.unwrap_or(Format::Csv))?,
                common,
                true,
            )
        }
        Command::Projectional {
            spec,
            v,
            n_max,
            mode,
            common,
        } => {
            let spec = parse_spec_arg(&spec)?;
            let seq = projectional_entropy(&spec, parse_vector(&v)?, n_max, mode.parse()?)?;
            (
                sequence_output(&seq, common.format.unwrap_or(Format::Csv))?,
                common,
                true,
            )
        }
        Command::Series { kind, q, terms, common } => {
            let s = match kind {
                SeriesKind::OmegaQ => omega_q_entropy_series(q, terms)?,
                SeriesKind::Multiplicative => entropy_x_q0_series(q, terms)?,
            };
            let text = match common.format.unwrap_or(Format::Text) {
                Format::Text => format!(
                    "{} (tail <= {}, {} terms)\n",
                    fmt12(s.value),
                    fmt12(s.tail_bound),
                    s.terms
                ),
                Format::Json => json(&s),
                Format::Csv => format!(
                    "q,terms,value,tail_bound\n{q},{},{},{}\n",
                    s.terms,
                    fmt12(s.value),
                    fmt12(s.tail_bound)
                ),
                f @ Format::Plot => return Err(unsupported(f, "series")),
            };
            (text, common, true)
        }
        Command::Conditions {
            system,
            n_range,
            m_max,
            common,
        } => {
            let system = parse_system_arg(&system)?;
            let (lo, hi) = parse_range(&n_range)?;
            for n in lo..=hi {
                within(common.budget, system.lattice(n)?.len() as u64)?;
            }
            let r = condition_report(
                &system,
                lo,
                hi,
                &ConditionOptions {
                    m_max,
                    ..Default::default()
                },
            )?;
            let mut s = String::new();
            match common.format.unwrap_or(Format::Csv) {
                Format::Json => s = json(&r),
                Format::Csv => {
                    s.push_str("n,size,boundary_ratio,complement_ratio");
                    for b in r.rows.first().map(|row| &row.blocks[..]).unwrap_or_default() {
                        write!(s, ",beta_{}x{}", b.k, b.l).unwrap();
                    }
                    for m in 1..=m_max {
                        write!(s, ",run_h_{m}").unwrap();
                    }
                    for m in 1..=m_max {
                        write!(s, ",run_v_{m}").unwrap();
                    }
                    s.push('\n');
                    for row in &r.rows {
                        write!(
                            s,
                            "{},{},{},{}",
                            row.n,
                            row.size,
                            fmt12(row.boundary_ratio),
                            fmt12(row.complement_ratio)
                        )
                        .unwrap();
                        for x in row
                            .blocks
                            .iter()
                            .map(|b| b.ratio)
                            .chain(row.run_ratios_h.iter().copied())
                            .chain(row.run_ratios_v.iter().copied())
                        {
                            write!(s, ",{}", fmt12(x)).unwrap();
                        }
                        s.push('\n');
                    }
                }
                Format::Plot => {
                    for row in &r.rows {
                        writeln!(s, "{} {}", row.n, fmt12(row.boundary_ratio)).unwrap();
                    }
                }
                Format::Text => {
                    let v = &r.verdicts;
                    writeln!(s, "boundary {:?}\ncomplement {:?}", v.boundary, v.complement).unwrap();
                    for ((k, l), t) in &v.blocks {
                        writeln!(s, "beta_{k}x{l} {t:?}").unwrap();
                    }
                    for (m, t) in v.runs_h.iter().enumerate() {
                        writeln!(s, "run_h_{} {t:?}", m + 1).unwrap();
                    }
                    for (m, t) in v.runs_v.iter().enumerate() {
                        writeln!(s, "run_v_{} {t:?}", m + 1).unwrap();
                    }
                }
            }
            (s, common, true)
        }
        Command::Gluing {
            spec,
            gap,
            window,
            extent,
            variant,
            common,
        } => {
            let spec = parse_spec_arg(&spec)?;
            let variant = match variant {
                Variant::Full => GluingVariant::Full,
                Variant::Horizontal => GluingVariant::Horizontal,
                Variant::Vertical => GluingVariant::Vertical,
            };
            let v = verify_block_gluing(&spec, gap, window, extent, variant)?;
            let text = match common.format.unwrap_or(Format::Text) {
                Format::Json => json(&v),
                Format::Text if v.is_verified() => {
                    format!("verified: {} blocks, {} offsets\n", v.blocks, v.offsets)
                }
                Format::Text => format!("counterexample: {}", json(&v.result)),
                f => return Err(unsupported(f, "gluing")),
            };
            (text, common, true)
        }
        Command::Tessellation { lattice, bound, common } => {
            let l = parse_lattice_arg(&lattice)?;
            within(common.budget, l.len() as u64)?;
            let t = is_tessellation(&l, bound);
            let text = match common.format.unwrap_or(Format::Text) {
                Format::Json => json(&t),
                Format::Text => match t {
                    spatial_entropy::lattice::Tessellation::Yes { v1, v2 } => format!("yes {v1} {v2}\n"),
                    other => format!("{}\n", format!("{other:?}").to_lowercase()),
                },
                f => return Err(unsupported(f, "tessellation")),
            };
            (text, common, true)
        }
        Command::Reproduce {
            target,
            q,
            n,
            terms,
            table,
            spec,
            system,
            n_range,
            common,
        } => {
            let target: Target = target.parse()?;
            let params = Params {
                q,
                n,
                terms,
                table: table.map(|t| parse_pair(&t, 'x', "--table")).transpose()?,
                spec: spec.map(|s| parse_spec_arg(&s)).transpose()?,
                system: system.map(|s| parse_system_arg(&s)).transpose()?,
                n_range: n_range.map(|r| parse_range(&r)).transpose()?,
            };
            let report = reproduce(target, &params)?;
            let pass = report.pass();
            let text = match common.format.unwrap_or(Format::Text) {
                Format::Json => json(&report),
                Format::Csv => {
                    let mut s = String::from("check,measured,expected,pass\n");
                    for c in &report.checks {
                        writeln!(s, "\"{}\",\"{}\",\"{}\",{}", c.name, c.measured, c.expected, c.pass).unwrap();
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in &report.checks {
                        let tag = if c.pass { "pass" } else { "FAIL" };
                        writeln!(s, "{tag} {}: measured {}, expected {}", c.name, c.measured, c.expected).unwrap();
                    }
                    writeln!(s, "{target}: {}", if pass { "pass" } else { "FAIL" }).unwrap();
                    s
                }
                f @ Format::Plot => return Err(unsupported(f, "reproduce")),
            };
            (text, common, pass)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command).and_then(|(text, common, pass)| {
        match &common.out {
            Some(path) => std::fs::write(path, &text).map_err(Failure::Io)?,
            None => std::io::stdout().write_all(text.as_bytes()).map_err(Failure::Io)?,
        }
        if pass {
            Ok(())
        } else {
            Err(Failure::Reproduction)
        }
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reproduction) => ExitCode::from(1),
        Err(Failure::Lib(e @ Error::BudgetExceeded { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
