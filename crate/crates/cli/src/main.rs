use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use newtonfoil::check::{run_checks, Model};
use newtonfoil::config::{parse_coeffs, quadrature, DEFAULT_QUAD_NODES, DEFAULT_QUAD_TOL};
use newtonfoil::{cmd_optimize, cmd_profile, cmd_sweep, CliError, QuadMethod, Report, RunConfig};

/// Minimum-resistance quadratic Bezier profiles under Newton's
/// sin-squared pressure law.
#[derive(Parser)]
#[command(name = "newtonfoil", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample F(a) on an equally spaced apex grid (CSV "a,F").
    Sweep(FlowArgs),
    /// Locate the apex minimizing F(a).
    Optimize(FlowArgs),
    /// Sample the profile curve (CSV "t,x,y").
    Profile {
        #[arg(long)]
        apex: f64,
        #[arg(long, default_value_t = 201)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in consistency checks.
    Check,
}

#[derive(Args)]
struct FlowArgs {
    /// Speed polynomial coefficients in ascending powers, e.g. "0,0,0,-5".
    #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = true)]
    velocity: ::std::vec::Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    rho: f64,
    #[arg(long, default_value_t = 0.0)]
    a_min: f64,
    #[arg(long, default_value_t = 1.0)]
    a_max: f64,
    #[arg(long, default_value_t = 101)]
    grid: usize,
    /// Width of the final optimizer bracket.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = QuadMethod::Simpson)]
    quad: QuadMethod,
    #[arg(long, default_value_t = DEFAULT_QUAD_TOL)]
    quad_tol: f64,
    #[arg(long, default_value_t = DEFAULT_QUAD_NODES)]
    nodes: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl FlowArgs {
    fn into_config(self) -> Result<RunConfig, CliError> {
        let cfg = RunConfig {
            velocity_coeffs: self.velocity,
            rho: self.rho,
            apex_range: (self.a_min, self.a_max),
            grid_size: self.grid,
            opt_tol: self.tol,
            quad: quadrature(self.quad, self.quad_tol, self.nodes)?,
            output_path: self.out,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (report, out): (Report, Option<PathBuf>) = match cli.command {
        Command::Sweep(args) => {
            let cfg = args.into_config()?;
            (cmd_sweep(&cfg)?.1, cfg.output_path)
        }
        Command::Optimize(args) => {
            let cfg = args.into_config()?;
            (cmd_optimize(&cfg)?.1, cfg.output_path)
        }
        Command::Profile { apex, samples, out } => (cmd_profile(apex, samples)?, out),
        Command::Check => {
            let outcomes = run_checks(&Model::reference());
            for o in &outcomes {
                println!("{o}");
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if failed == 0 {
                println!("all checks passed");
                return Ok(0);
            }
            println!("{failed} of {} checks failed", outcomes.len());
            return Ok(1);
        }
    };
    report.emit(out.as_deref())?;
    Ok(report.exit_code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
