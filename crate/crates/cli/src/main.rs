use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mlrelax::dielectrics::Mode;
use mlrelax_cli::commands::FIGURE_IDS;
use mlrelax_cli::{
    cmd_capacitor, cmd_eval, cmd_figure, cmd_table1, cmd_verify, render_eval, write_atomic,
    CapacitorArgs, CapacitorMethod, CliError, EvalPoint, Suite,
};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Mittag-Leffler relaxation: evaluation, table and figure data, capacitor
/// discharge curves and self-checks.
#[derive(Parser)]
#[command(name = "mlrelax", version)]
struct Cli {
    /// Absolute accuracy requested from the numerical methods
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate E_alpha(-x), or e_alpha(t) = E_alpha(-t^alpha)
    Eval(EvalArgs),
    /// E_0.1(-x), 1/(1 + x/gamma(1.1)) and E_0.5(-x) at the reference abscissae
    Table1,
    /// Data series of a figure (1-7 or 9) as CSV
    Figure {
        #[arg(value_parser = parse_figure_id)]
        id: u8,
    },
    /// Capacitor discharge or recharge voltage U(t) as CSV
    Capacitor(CapacitorFlags),
    /// Run a verification suite and report pass/fail per property
    Verify {
        #[arg(value_parser = clap::value_parser!(Suite))]
        suite: Suite,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("point").required(true).args(["x", "t"])))]
struct EvalArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodFlag {
    Ml,
    ClosedForm,
    Gross,
    Volterra,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeFlag {
    Discharge,
    Recharge,
}

#[derive(Args)]
struct CapacitorFlags {
    /// Geometric capacitance
    #[arg(long = "C", default_value_t = 1.0)]
    capacitance: f64,
    /// Terminal resistance; "inf" for an open circuit
    #[arg(long = "R", default_value_t = 1e6)]
    resistance: f64,
    /// Schweidler amplitude
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Schweidler exponent
    #[arg(long, conflicts_with = "p")]
    n: Option<f64>,
    /// Order p = 1 - n
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    u0: f64,
    /// Charging or short-circuit time; "inf" for a full charge
    #[arg(long, default_value_t = f64::INFINITY)]
    t0: f64,
    #[arg(long, value_enum, default_value_t = ModeFlag::Discharge)]
    mode: ModeFlag,
    #[arg(long, value_enum, default_value_t = MethodFlag::Ml)]
    method: MethodFlag,
    #[arg(long, default_value_t = 1.0)]
    horizon: f64,
    #[arg(long, default_value_t = 100)]
    steps: usize,
}

impl From<&CapacitorFlags> for CapacitorArgs {
    fn from(f: &CapacitorFlags) -> Self {
        let n = match (f.n, f.p) {
            (Some(n), _) => n,
            (None, Some(p)) => 1.0 - p,
            (None, None) => CapacitorArgs::default().n,
        };
        CapacitorArgs {
            capacitance: f.capacitance,
            resistance: f.resistance,
            beta: f.beta,
            n,
            u0: f.u0,
            t0: f.t0,
            mode: match f.mode {
                ModeFlag::Discharge => Mode::Discharge,
                ModeFlag::Recharge => Mode::Recharge,
            },
            method: match f.method {
                MethodFlag::Ml => CapacitorMethod::Ml,
                MethodFlag::ClosedForm => CapacitorMethod::ClosedForm,
                MethodFlag::Gross => CapacitorMethod::Gross,
                MethodFlag::Volterra => CapacitorMethod::Volterra,
            },
            horizon: f.horizon,
            steps: f.steps,
        }
    }
}

fn parse_figure_id(s: &str) -> Result<u8, String> {
    match s.parse::<u8>() {
        Ok(id) if FIGURE_IDS.contains(&id) => Ok(id),
        _ => Err(format!("unknown figure {s:?}; expected one of 1-7, 9")),
    }
}

/// Output text and whether the command succeeded.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    Ok(match &cli.command {
        Command::Eval(a) => {
            let point = match (a.x, a.t) {
                (Some(x), None) => EvalPoint::X(x),
                (None, Some(t)) => EvalPoint::T(t),
                _ => return Err(CliError::Usage("give exactly one of --x, --t".into())),
            };
            (render_eval(&cmd_eval(a.alpha, point, cli.tol)?), true)
        }
        Command::Table1 => (cmd_table1(cli.tol)?.render(), true),
        Command::Figure { id } => (cmd_figure(*id, cli.tol)?.render(), true),
        Command::Capacitor(flags) => (cmd_capacitor(&flags.into(), cli.tol)?.render(), true),
        Command::Verify { suite } => {
            let report = cmd_verify(*suite);
            (report.render(), report.passed())
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => write_atomic(path, &text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
