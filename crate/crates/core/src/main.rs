use clap::{Args, Parser, Subcommand, ValueEnum};
use cychains::suite::{run_suite, SuiteConfig, SuiteName};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cychains", version, about = "Exact checks of cyclic chain identities over the algebraic torus")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity suites (the default).
    Run(RunArgs),
    /// Evaluate one expression and print its canonical form.
    Eval {
        /// For example `div ω_std (∂1)` or `B (t1 (x) t2)`.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long = "u-cap", default_value_t = 4)]
    ucap: usize,
    #[arg(long = "arity-cap", default_value_t = 3)]
    arity_cap: usize,
    /// Exponent window `lo..hi`.
    #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
    window: String,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also run the planted-error controls, which must fail.
    #[arg(long)]
    with_controls: bool,
    /// Record elapsed milliseconds per identity (reports are then not reproducible).
    #[arg(long)]
    timings: bool,
}

fn parse_window(s: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("window `{s}` is not of the form lo..hi"))?;
    let parse = |x: &str| x.trim().parse::<i32>().map_err(|e| format!("window bound `{x}`: {e}"));
    Ok((parse(lo)?, parse(hi)?))
}

fn config(a: &RunArgs) -> Result<SuiteConfig, String> {
    let cfg = SuiteConfig {
        suite: a.suite.parse::<SuiteName>().map_err(|e| e.to_string())?,
        dim: a.dim,
        ucap: a.ucap,
        arity_cap: a.arity_cap,
        window: parse_window(&a.window)?,
        trials: a.trials,
        seed: a.seed,
        with_controls: a.with_controls,
        timings: a.timings,
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn run(a: &RunArgs) -> ExitCode {
    let cfg = match config(a) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match a.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    if report.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        None => run(&cli.run),
        Some(Command::Run(a)) => run(&a),
        Some(Command::Eval { expr, dim }) => match cychains::expr::eval(&expr, dim) {
            Ok(out) => {
                println!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
