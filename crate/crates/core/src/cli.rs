//! The `eulerchar` command line tool.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::complex::Complex;
use crate::engine::{euler, Algorithm, EngineConfig, EngineStats, PivotStrategy};
use crate::error::{Error, Result};
use crate::format::{self, Document};
use crate::generators::GeneratorSpec;
use crate::oracle;
use crate::reductions;
use crate::translation;

#[derive(Debug, Parser)]
#[command(
    name = "eulerchar",
    version,
    about = "Reduced Euler characteristics of simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the reduced Euler characteristic of a complex or ideal file.
    Euler(EulerArgs),
    /// Generate a benchmark complex, e.g. `rook:6,6`, `match:9`,
    /// `nicgraph:7,2` or `random:20,100,seed=7`.
    Gen {
        spec: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Turn a DIMACS CNF formula into a complex whose Euler characteristic,
    /// times the reported sign, counts satisfying assignments.
    Reduce {
        input: String,
        /// Check the count against a truth table (at most 20 variables).
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Build a complex with the given reduced Euler characteristic.
    ConstructEuler {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Write the nerve of a complex.
    Nerve {
        input: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Transpose an ideal (for a complex input, write the transposed ideal
    /// translated back to a complex).
    Transpose {
        input: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Translate a complex to its square-free monomial ideal or back.
    Translate {
        input: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Print the f-vector and the total number of faces.
    Fvector { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Bcrt,
    Dbms,
    OracleSubsets,
    OracleIe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndependenceArg {
    Root,
    All,
    Off,
}

#[derive(Debug, clap::Args)]
struct EulerArgs {
    /// Input file, or `-` for standard input.
    input: String,
    #[arg(long, value_enum, default_value = "dbms")]
    algorithm: AlgorithmArg,
    /// Pivot strategy; defaults to raremax for dbms and popvar for bcrt.
    #[arg(long)]
    pivot: Option<String>,
    #[arg(long, value_enum, default_value = "on")]
    nerve: Toggle,
    #[arg(long, value_enum, default_value = "root")]
    independence: IndependenceArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print a JSON line of engine counters after the value.
    #[arg(long)]
    stats: bool,
    /// Run this many times and report the median time on standard error.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
}

/// Runs the tool on `argv` (without the program name) and returns the
/// process exit code: 0 on success, 1 for input errors, 2 for capacity or
/// overflow errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = std::iter::once(OsString::from("eulerchar")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Euler(args) => run_euler(&args),
        Command::Gen { spec, output } => {
            let spec: GeneratorSpec = spec.parse()?;
            emit_complex(&spec.generate()?, output.as_deref(), &format!("# {spec}\n"))
        }
        Command::Reduce {
            input,
            verify,
            output,
        } => {
            let f = format::parse_dimacs(&read_input(&input)?)?;
            let (c, sign) = reductions::sat_to_complex(&f)?;
            if verify {
                verify_reduction(&f, &c, sign)?;
            }
            emit_complex(&c, output.as_deref(), &format!("# sign {sign}\n"))
        }
        Command::ConstructEuler { k, output } => {
            let c = reductions::complex_with_euler(k)?;
            emit_complex(&c, output.as_deref(), &format!("# euler {k}\n"))
        }
        Command::Nerve { input, output } => {
            let c = read_complex(&input)?;
            emit_complex(&c.nerve()?, output.as_deref(), "")
        }
        Command::Transpose { input, output } => match format::parse_document(&read_input(&input)?)?
        {
            Document::Ideal(i) => {
                let t = translation::transpose_ideal(&i)?;
                write_output(output.as_deref(), &format::write_ideal_text(&t))
            }
            Document::Complex(c) => {
                let t = translation::transpose_ideal(&translation::complex_to_ideal(&c))?;
                emit_complex(&translation::ideal_to_complex(&t), output.as_deref(), "")
            }
        },
        Command::Translate { input, output } => match format::parse_document(&read_input(&input)?)?
        {
            Document::Ideal(i) => {
                emit_complex(&translation::ideal_to_complex(&i), output.as_deref(), "")
            }
            Document::Complex(c) => {
                let i = translation::complex_to_ideal(&c);
                write_output(output.as_deref(), &format::write_ideal_text(&i))
            }
        },
        Command::Fvector { input } => {
            let f = oracle::f_vector(&read_complex(&input)?)?;
            let entries: Vec<String> = f.entries.iter().map(|e| e.to_string()).collect();
            write_output(
                None,
                &format!("f-vector: {}\nfaces: {}\n", entries.join(" "), f.total()),
            )
        }
    }
}

/// Counters printed by `euler --stats`. Timing goes to standard error so
/// that standard output is reproducible.
#[derive(Serialize)]
struct StatsLine<'a> {
    algorithm: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivot: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none", flatten)]
    engine: Option<&'a EngineStats>,
}

fn run_euler(args: &EulerArgs) -> Result<()> {
    let c = read_complex(&args.input)?;
    let cfg = match args.algorithm {
        AlgorithmArg::Bcrt | AlgorithmArg::Dbms => {
            let algorithm = if args.algorithm == AlgorithmArg::Bcrt {
                Algorithm::Bcrt
            } else {
                Algorithm::Dbms
            };
            let mut cfg = EngineConfig::new(algorithm).with_seed(args.seed);
            if let Some(p) = &args.pivot {
                cfg.pivot = p.parse::<PivotStrategy>()?;
            }
            cfg.use_nerve = args.nerve == Toggle::On;
            cfg.use_independence_at_root = args.independence != IndependenceArg::Off;
            cfg.use_independence_interior = args.independence == IndependenceArg::All;
            cfg.validate()?;
            Some(cfg)
        }
        _ if args.pivot.is_some() => {
            return Err(Error::input("--pivot only applies to bcrt and dbms"));
        }
        _ => None,
    };

    let mut times = Vec::new();
    let mut result = None;
    for _ in 0..args.repeat {
        let start = std::time::Instant::now();
        let (value, stats) = match &cfg {
            Some(cfg) => {
                let (v, s) = euler(&c, cfg)?;
                (v, Some(s))
            }
            None if args.algorithm == AlgorithmArg::OracleSubsets => {
                (oracle::euler_by_subsets(&c)?, None)
            }
            None => (oracle::euler_by_inclusion_exclusion(&c)?, None),
        };
        times.push(start.elapsed());
        if let Some((prev, _)) = &result {
            if *prev != value {
                return Err(Error::input(format!(
                    "repeated runs disagree: {prev} vs {value}"
                )));
            }
        }
        result = Some((value, stats));
    }
    let (value, stats) = result.expect("at least one run");

    let mut out = format!("{value}\n");
    if args.stats {
        let line = StatsLine {
            algorithm: match args.algorithm {
                AlgorithmArg::Bcrt => "bcrt",
                AlgorithmArg::Dbms => "dbms",
                AlgorithmArg::OracleSubsets => "oracle-subsets",
                AlgorithmArg::OracleIe => "oracle-ie",
            },
            pivot: cfg.as_ref().map(|c| c.pivot.name()),
            engine: stats.as_ref(),
        };
        out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
        out.push('\n');
        eprintln!("elapsed_ms: {:.3}", millis(median(&mut times)));
    } else if args.repeat > 1 {
        eprintln!("elapsed_ms: {:.3}", millis(median(&mut times)));
    }
    write_output(None, &out)
}

fn verify_reduction(f: &reductions::CnfFormula, c: &Complex, sign: i64) -> Result<()> {
    if f.num_vars() > reductions::MAX_BRUTEFORCE_VARS {
        eprintln!(
            "verify: skipped, more than {} variables",
            reductions::MAX_BRUTEFORCE_VARS
        );
        return Ok(());
    }
    let count = reductions::count_sat_bruteforce(f)?;
    let (chi, _) = euler(c, &EngineConfig::default())?;
    let via_complex = chi.get().checked_mul(sign).ok_or(Error::Overflow)?;
    if i64::try_from(count).ok() != Some(via_complex) {
        return Err(Error::input(format!(
            "verification failed: truth table gives {count}, complex gives {via_complex}"
        )));
    }
    eprintln!("verify: {count} satisfying assignments");
    Ok(())
}

fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    times[times.len() / 2]
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

/// Reads a complex; an ideal file is translated to its complex.
fn read_complex(path: &str) -> Result<Complex> {
    let text = read_input(path)?;
    if path.ends_with(".json") {
        return format::parse_complex_json(&text);
    }
    Ok(match format::parse_document(&text)? {
        Document::Complex(c) => c,
        Document::Ideal(i) => translation::ideal_to_complex(&i),
    })
}

/// Writes a complex as JSON when the output path ends in `.json`, and as
/// text (after `header` comment lines) otherwise.
fn emit_complex(c: &Complex, output: Option<&str>, header: &str) -> Result<()> {
    let text = match output {
        Some(p) if p.ends_with(".json") => format::write_complex_json(c),
        _ => format!("{header}{}", format::write_complex_text(c)),
    };
    write_output(output, &text)
}

fn write_output(output: Option<&str>, text: &str) -> Result<()> {
    match output {
        None | Some("-") => {
            let mut stdout = io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
        Some(path) => fs::write(path, text)?,
    }
    Ok(())
}
