//! The `catcodes` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input object,
//! 3 resource or size limit.

pub mod emit;

use std::io::{self, BufRead, Write};

use catcodes_core::{
    ballot_table, catalan, chi_decode, chi_encode, convert, exact_stats, family_iter,
    monte_carlo_stats_sharded, render_trajectories, subdiagonal_table, two_row_count,
    verify_family, BigUint, CodeRanker, CodeSampler, Error, Family, Object, RenderFormat,
    StatsReport, StatsSource, Trajectory,
};
use clap::{Parser, Subcommand, ValueEnum};

use emit::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "catcodes",
    version,
    about = "Codes, Dyck words, 123-avoiding permutations and two-row tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Code,
    Dyck,
    Perm,
    Tableau,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Code => Family::Code,
            FamilyArg::Dyck => Family::Dyck,
            FamilyArg::Perm => Family::Perm,
            FamilyArg::Tableau => Family::Tableau,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Ballot,
    Subdiagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RenderArg {
    Ascii,
    Svg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C_n, the ballot number l(n, k), or a two-row tableau count.
    Count {
        /// Size n.
        #[arg(long, required_unless_present = "shape")]
        n: Option<u64>,
        /// Count codes of length n ending in k.
        #[arg(long, requires = "n")]
        k: Option<u64>,
        /// Two-row shape "L1,L2": number of standard tableaux.
        #[arg(long, value_parser = parse_shape, conflicts_with_all = ["n", "k"])]
        shape: Option<(u64, u64)>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the ballot table l(n, k) or its West + North companion.
    Table {
        #[arg(long, value_enum, default_value = "ballot")]
        kind: TableKind,
        /// Last row to print.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream every object of size n in code order.
    Enumerate {
        /// Object size.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "code")]
        family: FamilyArg,
        /// Stop after this many objects.
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Convert objects read from stdin, one per line.
    Convert {
        #[arg(long, value_enum)]
        from: FamilyArg,
        #[arg(long, value_enum)]
        to: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lexicographic rank of each object on stdin (through its code).
    Rank {
        #[arg(long, value_enum, default_value = "code")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Object of the given rank; ranks are read from stdin when --rank is absent.
    Unrank {
        /// Object size.
        #[arg(long)]
        n: usize,
        /// Rank, from 0 to C_n - 1.
        #[arg(long)]
        rank: Option<BigUint>,
        #[arg(long, value_enum, default_value = "code")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Stream uniform random objects of size n.
    Sample {
        /// Object size.
        #[arg(long)]
        n: usize,
        /// Decimal or 0x-prefixed hexadecimal.
        #[arg(long, value_parser = parse_seed)]
        seed: u64,
        /// Number of objects.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, value_enum, default_value = "code")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reserve-account statistics, exact or by Monte Carlo.
    Simulate {
        /// Code length.
        #[arg(long)]
        n: usize,
        /// Monte Carlo sample count.
        #[arg(long, conflicts_with = "exact", requires = "seed")]
        samples: Option<u64>,
        /// Decimal or 0x-prefixed hexadecimal.
        #[arg(long, value_parser = parse_seed, requires = "samples")]
        seed: Option<u64>,
        /// Parallel shards, each seeded from --seed.
        #[arg(long, default_value_t = 1, requires = "samples")]
        shards: usize,
        /// Exact distribution over every code; the default without --samples.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the coding conditions exhaustively for one family and size.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Object size, at most 9.
        #[arg(long)]
        n: usize,
    },
    /// Plot codes or trajectories read from stdin (a line starting with 0 is a trajectory).
    Render {
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderArg,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

fn parse_shape(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("shape {s:?} must look like L1,L2"))?;
    let part = |t: &str| {
        t.parse::<u64>()
            .map_err(|e| format!("shape part {t:?}: {e}"))
    };
    Ok((part(a)?, part(b)?))
}

/// Failure of a subcommand, mapped onto an exit code.
enum Failure {
    Input(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs one invocation. `argv` excludes the program name.
pub fn run<I, S>(
    argv: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("catcodes"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::InvalidData => {
            let _ = writeln!(stderr, "error: Parse: {e}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_RESOURCE
        }
        Err(Failure::Input(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource_limit() {
                EXIT_RESOURCE
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn read_lines(stdin: &mut dyn BufRead) -> impl Iterator<Item = io::Result<String>> + '_ {
    stdin
        .lines()
        .map(|l| l.map(|s| s.trim_end_matches('\r').to_string()))
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Count {
            n,
            k,
            shape,
            format,
        } => {
            let (name, value) = match (n, k, shape) {
                (_, _, Some((l1, l2))) => ("two_row_count", two_row_count(l1, l2)?),
                (Some(n), Some(k), None) => {
                    if n > 10_000 {
                        return Err(
                            Error::ResourceLimit(format!("ballot table for n = {n}")).into()
                        );
                    }
                    (
                        "ballot",
                        ballot_table(n as usize).get(n as usize, k as usize),
                    )
                }
                (Some(n), None, None) => ("catalan", catalan(n)),
                (None, _, None) => unreachable!("clap requires --n or --shape"),
            };
            writeln!(out, "{}", emit::named(name, value, format))?;
        }
        Command::Table { kind, n, format } => write_table(kind, n, format, out)?,
        Command::Enumerate {
            n,
            family,
            limit,
            format,
        } => {
            let items = family_iter(n, family.into());
            let items: Box<dyn Iterator<Item = _>> = match limit {
                Some(l) => Box::new(items.take(l as usize)),
                None => Box::new(items),
            };
            for obj in items {
                writeln!(out, "{}", emit::object(&obj?, format))?;
            }
        }
        Command::Convert { from, to, format } => {
            for line in read_lines(stdin) {
                let obj = emit::parse_object(from.into(), &line?)?;
                writeln!(out, "{}", emit::object(&convert(&obj, to.into())?, format))?;
            }
        }
        Command::Rank { family, format } => {
            let mut ranker: Option<CodeRanker> = None;
            for line in read_lines(stdin) {
                let code = chi_encode(&emit::parse_object(family.into(), &line?)?)?;
                let ranker = match &mut ranker {
                    Some(r) if r.n() == code.len() => r,
                    slot => slot.insert(CodeRanker::new(code.len())),
                };
                writeln!(out, "{}", emit::named("rank", ranker.rank(&code)?, format))?;
            }
        }
        Command::Unrank {
            n,
            rank,
            family,
            format,
        } => {
            let ranker = CodeRanker::new(n);
            let emit_rank = |r: &BigUint, out: &mut dyn Write| -> Result<(), Failure> {
                let obj = chi_decode(&ranker.unrank(r)?, family.into())?;
                writeln!(out, "{}", emit::object(&obj, format))?;
                Ok(())
            };
            match rank {
                Some(r) => emit_rank(&r, out)?,
                None => {
                    for line in read_lines(stdin) {
                        let line = line?;
                        let r: BigUint = line
                            .trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("rank {line:?}: {e}")))?;
                        emit_rank(&r, out)?;
                    }
                }
            }
        }
        Command::Sample {
            n,
            seed,
            count,
            family,
            format,
        } => {
            let sampler = CodeSampler::new(n);
            let mut rng = catcodes_core::enumeration::rng_from_seed(seed);
            for _ in 0..count {
                let obj = chi_decode(&sampler.sample(&mut rng), family.into())?;
                writeln!(out, "{}", emit::object(&obj, format))?;
            }
        }
        Command::Simulate {
            n,
            samples,
            seed,
            shards,
            exact,
            format,
        } => {
            let report = match (samples, seed) {
                (Some(samples), Some(seed)) if !exact => {
                    monte_carlo_stats_sharded(n, samples, seed, shards)?
                }
                _ => exact_stats(n)?,
            };
            write_report(&report, format, out)?;
        }
        Command::Verify { family, n } => {
            let report = verify_family(family.into(), n)?;
            writeln!(out, "{report}")?;
        }
        Command::Render { format } => {
            let mut trajectories = Vec::new();
            for line in read_lines(stdin) {
                let line = line?;
                if line.is_empty() {
                    continue;
                }
                let t = if line.starts_with('0') {
                    line.parse::<Trajectory>()?
                } else {
                    match emit::parse_object(Family::Code, &line)? {
                        Object::Code(c) => Trajectory::from_code(&c)?,
                        _ => unreachable!("code records parse to codes"),
                    }
                };
                trajectories.push(t);
            }
            let format = match format {
                RenderArg::Ascii => RenderFormat::Ascii,
                RenderArg::Svg => RenderFormat::Svg,
            };
            write!(out, "{}", render_trajectories(&trajectories, format))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn write_table(
    kind: TableKind,
    n: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    if n > 1000 {
        return Err(Error::ResourceLimit(format!("table with {n} rows")).into());
    }
    let (label, first, rows): (&str, usize, Vec<Vec<String>>) = match kind {
        TableKind::Ballot => {
            let t = ballot_table(n);
            let rows = (0..=n)
                .map(|i| (0..=n).map(|k| t.get(i, k).to_string()).collect())
                .collect();
            ("ballot_row", 0, rows)
        }
        TableKind::Subdiagonal => {
            let s = subdiagonal_table(n);
            let rows = (1..=n)
                .map(|i| (1..=n).map(|j| s.cell(i, j).to_string()).collect())
                .collect();
            ("subdiagonal_row", 1, rows)
        }
    };
    match format {
        Format::Structured => {
            for (i, r) in rows.iter().enumerate() {
                writeln!(out, "{}", emit::row(label, i + first, r))?;
            }
        }
        Format::Text => {
            let width = rows
                .iter()
                .flatten()
                .map(String::len)
                .max()
                .unwrap_or(1)
                .max(n.to_string().len());
            if kind == TableKind::Ballot {
                let header: Vec<String> = (0..=n).map(|k| format!("{k:>width$}")).collect();
                writeln!(
                    out,
                    "{:>w$} | {}",
                    "n\\k",
                    header.join(" "),
                    w = width.max(3)
                )?;
            }
            for (i, r) in rows.iter().enumerate() {
                let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
                if kind == TableKind::Ballot {
                    writeln!(
                        out,
                        "{:>w$} | {}",
                        i + first,
                        cells.join(" "),
                        w = width.max(3)
                    )?;
                } else {
                    writeln!(out, "{}", cells.join(" "))?;
                }
            }
        }
    }
    Ok(())
}

fn write_report(report: &StatsReport, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Text => write!(out, "{report}")?,
        Format::Structured => {
            writeln!(out, "{}", emit::named("n", report.n, format))?;
            match &report.source {
                StatsSource::Exact => writeln!(out, "{}", emit::named("source", "exact", format))?,
                StatsSource::MonteCarlo {
                    seed,
                    samples,
                    shards,
                } => {
                    writeln!(out, "{}", emit::named("source", "monte-carlo", format))?;
                    writeln!(out, "{}", emit::named("seed", seed, format))?;
                    writeln!(out, "{}", emit::named("samples", samples, format))?;
                    writeln!(out, "{}", emit::named("shards", shards, format))?;
                }
            }
            writeln!(out, "{}", emit::named("total", &report.total, format))?;
            for (name, value) in report.entries() {
                writeln!(out, "{}", emit::rational(&name, &value))?;
            }
        }
    }
    Ok(())
}

/// Parses a whole object for callers that already know its family.
pub fn parse_object(family: Family, text: &str) -> Result<Object, Error> {
    emit::parse_object(family, text)
}
