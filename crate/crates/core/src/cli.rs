//! Command-line front end. The `bmw6` binary is a thin wrapper around [`run`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bmw::{Bmw6Params, ParamValues};
use crate::config::load_param_set;
use crate::curves::{grid, CurveTable, Func, Spacing};
use crate::error::{Error, Result};
use crate::figures::{write_figures, PanelSelection};
use crate::reductions::{classify, equivalence_report, NamedFamily, DEFAULT_CLASSIFY_TOL};
use crate::sampler::{sample, DrawOutcome, SeedSpec};

#[derive(Debug, Parser)]
#[command(
    name = "bmw6",
    version,
    about = "Beta modified Weibull distribution toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate pdf, cdf, survival, hazard or quantile on a grid, as CSV.
    Eval {
        /// One of pdf, cdf, survival, hazard, quantile.
        func: Func,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 1e-3)]
        xmin: f64,
        #[arg(long, default_value_t = 8.0)]
        xmax: f64,
        #[arg(short = 'n', default_value_t = 100)]
        n: usize,
        /// linear or log
        #[arg(long, default_value = "linear")]
        spacing: Spacing,
    },
    /// Write the built-in plot sets as CSV files.
    Figure {
        /// FigA, FigB or all.
        #[arg(default_value = "all")]
        panel: PanelSelection,
        #[arg(long, default_value = "figures")]
        out: PathBuf,
    },
    /// Name the sub-family a parameter set reduces to and check it against the closed form.
    Reduce {
        #[command(flatten)]
        params: ParamArgs,
        /// Print the report as CSV instead of a table.
        #[arg(long)]
        csv: bool,
    },
    /// Draw lifetimes; `cured` marks draws in the defective mass.
    Sample {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(short = 'n', default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
    },
}

/// Parameters in (a, b, λ, β, γ, τ) order, optionally seeded from a parameter file.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub tau: Option<f64>,
    /// JSON file of named parameter sets.
    #[arg(long, requires = "set")]
    pub params_file: Option<PathBuf>,
    /// Name of the set to load from --params-file. Explicit flags override it.
    #[arg(long, requires = "params_file")]
    pub set: Option<String>,
}

impl ParamArgs {
    pub fn resolve(&self) -> Result<Bmw6Params> {
        let base = match (&self.params_file, &self.set) {
            (Some(path), Some(name)) => Some(load_param_set(path, name)?),
            _ => None,
        };
        let pick = |flag: Option<f64>, from_file: Option<f64>, name: &str| {
            flag.or(from_file)
                .ok_or_else(|| Error::Domain(format!("missing parameter --{name}")))
        };
        let values = ParamValues {
            a: pick(self.a, base.map(|v| v.a), "a")?,
            b: pick(self.b, base.map(|v| v.b), "b")?,
            lambda: pick(self.lambda, base.map(|v| v.lambda), "lambda")?,
            beta: pick(self.beta, base.map(|v| v.beta), "beta")?,
            gamma: pick(self.gamma, base.map(|v| v.gamma), "gamma")?,
            tau: pick(self.tau, base.map(|v| v.tau), "tau")?,
        };
        Bmw6Params::from_values(values)
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    }
}

/// 200-point log grid on [1e-3·β, 10·β] used by `reduce`.
pub fn reduce_grid(p: &Bmw6Params) -> Vec<f64> {
    let beta = p.inner().beta();
    grid(1e-3 * beta, 10.0 * beta, 200, Spacing::Log).expect("positive scale gives a valid grid")
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Eval {
            func,
            params,
            xmin,
            xmax,
            n,
            spacing,
        } => {
            let p = params.resolve()?;
            let x = grid(*xmin, *xmax, *n, *spacing)?;
            let table = CurveTable::evaluate(&p, x, &[*func])?;
            out.write_all(table.to_csv().as_bytes()).map_err(io_err)
        }
        Command::Figure { panel, out: dir } => {
            for path in write_figures(*panel, dir)? {
                writeln!(out, "{}", path.display()).map_err(io_err)?;
            }
            Ok(())
        }
        Command::Reduce { params, csv } => {
            let p = params.resolve()?;
            let family = classify(&p, DEFAULT_CLASSIFY_TOL);
            writeln!(out, "family: {family}").map_err(io_err)?;
            if family != NamedFamily::Bmw6 {
                let report = equivalence_report(&p, family, &reduce_grid(&p))?;
                let text = if *csv {
                    report.to_csv()
                } else {
                    report.to_table()
                };
                out.write_all(text.as_bytes()).map_err(io_err)?;
            }
            Ok(())
        }
        Command::Sample {
            params,
            n,
            seed,
            stream,
        } => {
            let p = params.resolve()?;
            let draws = sample(&p, *n, SeedSpec::new(*seed, *stream))?;
            let mut finite = 0;
            for d in &draws {
                if let DrawOutcome::Finite(_) = d {
                    finite += 1;
                }
                writeln!(out, "{d}").map_err(io_err)?;
            }
            writeln!(out, "# finite={finite} cured={}", draws.len() - finite).map_err(io_err)
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Returns the
/// process exit code: 0 success, 2 usage or domain error, 3 evaluation error,
/// 4 I/O error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version also land here, with exit code 0
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return code;
        }
    };
    match execute(&cli.command, out).and_then(|()| out.flush().map_err(io_err)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
