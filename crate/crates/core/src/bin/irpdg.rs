//! Command-line driver. Exit code 2 signals a region-violation abort.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use irpdg::flux::{exact_riemann_primitive, wave_speed_bounds, Primitive};
use irpdg::harness::{
    parse_list, parse_primitive, run_experiment, CflChoice, ExperimentSpec, LimiterChoice,
};
use irpdg::{FluxKind, GasModel, IrpError};

#[derive(Parser)]
#[command(
    name = "irpdg",
    version,
    about = "Invariant-region-preserving DG solver for the Euler equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one benchmark on one or more meshes and write its outputs.
    Run(RunArgs),
    /// Print a convergence table.
    Table {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "markdown")]
        format: TableFormat,
    },
    /// Print the star state of a Riemann problem.
    Riemann {
        /// Left state `rho,u,p`.
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        /// Right state `rho,u,p`.
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, default_value_t = 1.4)]
        gamma: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Markdown,
    Csv,
}

#[derive(Args, Default)]
struct RunArgs {
    /// Benchmark id, e.g. ex1-1d-accuracy or ex3.
    #[arg(long)]
    example: Option<String>,
    #[arg(long)]
    degree: Option<usize>,
    /// Cells per axis; a comma separated list runs a mesh sweep.
    #[arg(long)]
    cells: Option<String>,
    /// lxf-global, lxf-local, hll, hllc or godunov.
    #[arg(long)]
    flux: Option<String>,
    /// irp, positivity or off.
    #[arg(long)]
    limiter: Option<String>,
    #[arg(long)]
    tfinal: Option<f64>,
    /// theoretical or practical.
    #[arg(long)]
    cfl: Option<String>,
    /// Use `dt = dx / (d * sigma)` instead of the default practical divisor.
    #[arg(long)]
    dt_divisor: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value file; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn build_spec(a: &RunArgs) -> Result<ExperimentSpec, IrpError> {
    let text = match &a.config {
        Some(p) => std::fs::read_to_string(p)?,
        None => String::new(),
    };
    let example = match &a.example {
        Some(e) => e.parse()?,
        None => text
            .lines()
            .filter_map(|l| l.split_once('='))
            .find(|(k, _)| k.trim() == "example")
            .map(|(_, v)| v.parse())
            .transpose()?
            .ok_or_else(|| IrpError::Config("no example given (use --example)".into()))?,
    };
    let mut spec = ExperimentSpec::for_example(example);
    spec.apply_config(&text)?;
    spec.example = example;
    if let Some(k) = a.degree {
        spec.degree = k;
    }
    if let Some(c) = &a.cells {
        spec.cells = parse_list("cells", c)?;
    }
    if let Some(f) = &a.flux {
        spec.flux = f.parse::<FluxKind>()?;
    }
    if let Some(l) = &a.limiter {
        spec.limiter = l.parse::<LimiterChoice>()?;
    }
    if let Some(t) = a.tfinal {
        spec.t_final = t;
    }
    if let Some(c) = &a.cfl {
        spec.cfl = c.parse::<CflChoice>()?;
    }
    if a.dt_divisor.is_some() {
        spec.dt_divisor = a.dt_divisor;
    }
    if a.out.is_some() {
        spec.out = a.out.clone();
    }
    spec.validate()?;
    Ok(spec)
}

fn run(a: &RunArgs) -> Result<(), IrpError> {
    let spec = build_spec(a)?;
    let report = run_experiment(&spec)?;
    println!(
        "{} k={} flux={} limiter={} T={}",
        spec.example, spec.degree, spec.flux, spec.limiter, spec.t_final
    );
    for (n, steps, events, secs) in &report.runs {
        println!("N={n}: {steps} steps, {events} limiter activations, {secs:.2} s");
    }
    if let Some(e) = &report.errors {
        println!("\n{}", e.to_markdown());
    }
    for f in &report.files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn table(a: &RunArgs, format: TableFormat) -> Result<(), IrpError> {
    let spec = build_spec(a)?;
    if !spec.example.has_exact() {
        return Err(IrpError::Config(format!(
            "{} has no exact solution",
            spec.example
        )));
    }
    let report = run_experiment(&spec)?;
    let errors = report.errors.expect("exact solution available");
    match format {
        TableFormat::Markdown => {
            println!("{}", errors.to_markdown());
            println!("{}", errors.first_events_markdown());
        }
        TableFormat::Csv => print!("{}", errors.to_csv()),
    }
    Ok(())
}

fn riemann(left: &str, right: &str, gamma: f64) -> Result<(), IrpError> {
    let gas = GasModel::new(gamma, 1e-13, 0.0)?;
    let l: Primitive = parse_primitive(left)?;
    let r: Primitive = parse_primitive(right)?;
    let star = exact_riemann_primitive(&l, &r, &gas)?;
    let (sl, sr) = wave_speed_bounds(&l, &r, &gas)?;
    println!("p_star     {:.10}", star.p_star);
    println!("u_star     {:.10}", star.u_star);
    println!("rho_star_l {:.10}", star.rho_star_l);
    println!("rho_star_r {:.10}", star.rho_star_r);
    println!("speeds     {sl:.10} {sr:.10}");
    Ok(())
}

fn main() -> ExitCode {
    // Usage errors exit with 1 so that 2 stays reserved for region violations.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Run(a) => run(a),
        Command::Table { run, format } => table(run, *format),
        Command::Riemann { left, right, gamma } => riemann(left, right, *gamma),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_region_violation() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
