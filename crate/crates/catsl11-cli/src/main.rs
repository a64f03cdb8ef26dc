use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use catsl11::report::{Case, Format, Report, RunConfig};
use catsl11::suites::{self, BimodWhich, SuiteError};
use catsl11::zoo::Which;

const DEFAULT_N: usize = 3;

#[derive(Parser)]
#[command(name = "catsl11", version, about = "Exact check suites for the U_t(sl(1|1)) categorification")]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Worker threads (parallel builds only).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized smoke tests.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run one check suite.
    Check {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Print Hom-space dimensions of an algebra.
    Dims {
        #[arg(long, value_parser = parse_which)]
        which: Which,
        #[command(flatten)]
        n: NArg,
    },
    /// Run every suite.
    All {
        #[command(flatten)]
        n: NArg,
    },
}

#[derive(Subcommand)]
enum Suite {
    Hopf,
    Rep {
        #[command(flatten)]
        n: NArg,
    },
    Algebra {
        #[arg(long, value_parser = parse_which)]
        which: Which,
        #[command(flatten)]
        n: NArg,
    },
    Formality {
        #[command(flatten)]
        n: NArg,
    },
    Bimodule {
        #[arg(long, value_parser = parse_bimod)]
        which: BimodWhich,
        #[command(flatten)]
        n: NArg,
    },
    Decat {
        #[command(flatten)]
        n: NArg,
    },
    Rook {
        #[command(flatten)]
        n: NArg,
    },
}

#[derive(Args, Clone, Copy)]
struct NArg {
    #[arg(long)]
    n: Option<usize>,
}

fn parse_which(s: &str) -> Result<Which, String> {
    Which::parse(s).ok_or_else(|| format!("expected one of A, AoA, B, Rn, HRn, AxRn, got {s}"))
}

fn parse_bimod(s: &str) -> Result<BimodWhich, String> {
    BimodWhich::parse(s).ok_or_else(|| format!("expected one of N, S, Cn, got {s}"))
}

/// Upper bound on n from `CAT_SL11_MAX_N`, if set.
fn env_cap() -> Result<Option<usize>, String> {
    match std::env::var("CAT_SL11_MAX_N") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| format!("CAT_SL11_MAX_N={v} is not a number")),
        Err(_) => Ok(None),
    }
}

fn resolve_n(arg: NArg, cap: Option<usize>) -> Result<usize, String> {
    let n = arg.n.unwrap_or(cap.map_or(DEFAULT_N, |c| c.min(DEFAULT_N)));
    match cap {
        Some(c) if n > c => Err(format!("n = {n} exceeds CAT_SL11_MAX_N = {c}")),
        _ => Ok(n),
    }
}

enum Outcome {
    Report(Vec<Case>),
    Text(String),
}

fn run(cmd: &Cmd, n: usize, seed: u64) -> Result<Outcome, SuiteError> {
    Ok(match cmd {
        Cmd::Check { suite } => Outcome::Report(match suite {
            Suite::Hopf => suites::hopf(),
            Suite::Rep { .. } => suites::rep(n)?,
            Suite::Algebra { which, .. } => suites::algebra(*which, n)?,
            Suite::Formality { .. } => suites::formality(n)?,
            Suite::Bimodule { which, .. } => suites::bimodule(*which, n)?,
            Suite::Decat { .. } => suites::decat(n)?,
            Suite::Rook { .. } => suites::rook(n, seed)?,
        }),
        Cmd::Dims { which, .. } => Outcome::Text(suites::dims(*which, n)?),
        Cmd::All { .. } => Outcome::Report(suites::all(n, seed)?),
    })
}

fn suite_name(cmd: &Cmd) -> String {
    match cmd {
        Cmd::Check { suite } => match suite {
            Suite::Hopf => "hopf".into(),
            Suite::Rep { .. } => "rep".into(),
            Suite::Algebra { which, .. } => format!("algebra {which:?}"),
            Suite::Formality { .. } => "formality".into(),
            Suite::Bimodule { which, .. } => format!("bimodule {which:?}"),
            Suite::Decat { .. } => "decat".into(),
            Suite::Rook { .. } => "rook".into(),
        },
        Cmd::Dims { which, .. } => format!("dims {which:?}"),
        Cmd::All { .. } => "all".into(),
    }
}

fn n_arg(cmd: &Cmd) -> NArg {
    match cmd {
        Cmd::Check { suite } => match suite {
            Suite::Hopf => NArg { n: None },
            Suite::Rep { n }
            | Suite::Algebra { n, .. }
            | Suite::Formality { n }
            | Suite::Bimodule { n, .. }
            | Suite::Decat { n }
            | Suite::Rook { n } => *n,
        },
        Cmd::Dims { n, .. } | Cmd::All { n } => *n,
    }
}

fn write_out(path: Option<&std::path::Path>, s: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, s).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(s.as_bytes())?;
            if !s.ends_with('\n') {
                out.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let bad = |msg: String| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    let n = match env_cap().and_then(|cap| resolve_n(n_arg(&cli.cmd), cap)) {
        Ok(n) => n,
        Err(e) => return bad(e),
    };
    #[cfg(feature = "parallel")]
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            return bad(e.to_string());
        }
    }

    let config = RunConfig {
        suite: suite_name(&cli.cmd),
        n,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        threads: if catsl11::par::is_parallel() { cli.threads } else { Some(1) },
        seed: cli.seed,
    };
    let start = Instant::now();
    let cases = match run(&cli.cmd, n, cli.seed) {
        Ok(Outcome::Text(s)) => {
            return match write_out(cli.out.as_deref(), &s) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => bad(format!("{e:#}")),
            };
        }
        Ok(Outcome::Report(cases)) => cases,
        Err(e @ SuiteError::Bound { .. }) | Err(e @ SuiteError::Unknown(_)) => return bad(e.to_string()),
        // A structure that cannot be built is a failed check, not a usage error.
        Err(e) => vec![Case::new("build", 0, Some(e.to_string()))],
    };
    log::info!("{} finished in {:.2?}", config.suite, start.elapsed());
    let report = Report::new(config, cases);
    if let Err(e) = write_out(cli.out.as_deref(), &report.emit()) {
        return bad(format!("{e:#}"));
    }
    if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
