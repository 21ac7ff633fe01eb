use crate::table::{format_value, CsvTable};
use crate::CliError;
use mlrelax::dielectrics::{
    cole_potential, solve_discharge_closed_form, solve_discharge_gross, solve_discharge_ml,
    solve_discharge_volterra, CapacitorModel, ColeCircuit, Mode,
};
use mlrelax::mittag_leffler::{power_law_tail, rational_approx, stretched_exponential};
use mlrelax::spectra::k_alpha;
use mlrelax::{e_alpha, ml_eval, EvalResult, Order};

pub const TABLE1_ABSCISSAE: [f64; 10] = [0.0, 0.2, 0.4, 0.6, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0];
pub const FIGURE_IDS: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 9];

fn order(alpha: f64) -> Result<Order, CliError> {
    Ok(Order::new(alpha)?)
}

/// Argument of an evaluation: E_α(−x) directly, or e_α(t) = E_α(−t^α).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalPoint {
    X(f64),
    T(f64),
}

pub fn cmd_eval(alpha: f64, point: EvalPoint, tol: f64) -> Result<EvalResult, CliError> {
    let o = order(alpha)?;
    Ok(match point {
        EvalPoint::X(x) => ml_eval(o, x, tol)?,
        EvalPoint::T(t) => e_alpha(o, t, tol)?,
    })
}

pub fn render_eval(r: &EvalResult) -> String {
    format!(
        "value = {}\nmethod = {}\nerr_estimate = {}\n",
        format_value(r.value),
        r.method,
        format_value(r.err_estimate)
    )
}

/// E_0.1(−x), its one-pole approximation 1/(1 + x/Γ(1.1)) and E_0.5(−x).
pub fn cmd_table1(tol: f64) -> Result<CsvTable, CliError> {
    let (tenth, half) = (order(0.1)?, order(0.5)?);
    let mut table = CsvTable::new(["x", "E_0.1(-x)", "1/(1+x/gamma(1.1))", "E_0.5(-x)"]);
    for x in TABLE1_ABSCISSAE {
        table.push_row(vec![
            x,
            ml_eval(tenth, x, tol)?.value,
            rational_approx(tenth, x),
            ml_eval(half, x, tol)?.value,
        ])?;
    }
    Ok(table)
}

fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..points)
        .map(|i| {
            if i + 1 == points {
                hi
            } else {
                10f64.powf(a + (b - a) * i as f64 / (points - 1) as f64)
            }
        })
        .collect()
}

fn linear_grid(hi: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|i| hi * i as f64 / steps as f64).collect()
}

fn label(prefix: &str, alpha: f64) -> String {
    format!("{prefix}_{alpha}")
}

/// Order shown in each of the asymptotic-comparison figures 3 to 7.
pub fn asymptotic_figure_order(id: u8) -> Option<f64> {
    match id {
        3 => Some(0.25),
        4 => Some(0.5),
        5 => Some(0.75),
        6 => Some(0.9),
        7 => Some(0.99),
        _ => None,
    }
}

pub fn cmd_figure(id: u8, tol: f64) -> Result<CsvTable, CliError> {
    match id {
        1 => spectrum_figure(),
        2 => relaxation_figure(tol),
        3..=7 => asymptotic_figure(asymptotic_figure_order(id).expect("id in 3..=7"), tol),
        9 => cole_figure(tol),
        _ => Err(CliError::Usage(format!(
            "unknown figure {id}; expected one of 1-7, 9"
        ))),
    }
}

fn spectrum_figure() -> Result<CsvTable, CliError> {
    let alphas = [0.25, 0.5, 0.75, 0.9];
    let mut table = CsvTable::new(std::iter::once("r".to_string()).chain(alphas.iter().map(|&a| label("K", a))));
    table.comment("frequency spectrum K_alpha(r), r in [1e-6, 2]");
    for r in log_grid(1e-6, 2.0, 161) {
        let mut row = vec![r];
        for &a in &alphas {
            row.push(k_alpha(order(a)?, r)?);
        }
        table.push_row(row)?;
    }
    Ok(table)
}

fn relaxation_figure(tol: f64) -> Result<CsvTable, CliError> {
    let alphas = [0.25, 0.5, 0.75, 0.9, 1.0];
    let mut table = CsvTable::new(std::iter::once("t".to_string()).chain(alphas.iter().map(|&a| label("e", a))));
    table.comment("relaxation function e_alpha(t) = E_alpha(-t^alpha)");
    for t in linear_grid(15.0, 300) {
        let mut row = vec![t];
        for &a in &alphas {
            row.push(e_alpha(order(a)?, t, tol)?.value);
        }
        table.push_row(row)?;
    }
    Ok(table)
}

fn asymptotic_figure(alpha: f64, tol: f64) -> Result<CsvTable, CliError> {
    let o = order(alpha)?;
    let mut table = CsvTable::new(["t", "e_alpha", "stretched_exponential", "power_law"]);
    table.comment(format!("alpha = {alpha}"));
    table.comment("e_alpha(t) with exp(-t^alpha/gamma(1+alpha)) and t^-alpha/gamma(1-alpha)");
    for t in log_grid(1e-5, 1e5, 101) {
        table.push_row(vec![
            t,
            e_alpha(o, t, tol)?.value,
            stretched_exponential(o, t),
            power_law_tail(o, t)?,
        ])?;
    }
    Ok(table)
}

fn cole_figure(tol: f64) -> Result<CsvTable, CliError> {
    let alphas = [0.25, 0.5, 0.75, 1.0];
    let circuits = alphas
        .iter()
        .map(|&a| Ok(ColeCircuit::unit(order(a)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut table = CsvTable::new(std::iter::once("t".to_string()).chain(alphas.iter().map(|&a| label("e_P", a))));
    table.comment(format!(
        "E = R = r = K = 1, lambda = {}, plateau = {}",
        format_value(circuits[0].rate()),
        format_value(circuits[0].plateau())
    ));
    for t in linear_grid(10.0, 1000) {
        let mut row = vec![t];
        for c in &circuits {
            row.push(cole_potential(c, t, tol)?);
        }
        table.push_row(row)?;
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapacitorMethod {
    Ml,
    ClosedForm,
    Gross,
    Volterra,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacitorArgs {
    pub capacitance: f64,
    pub resistance: f64,
    pub beta: f64,
    pub n: f64,
    pub u0: f64,
    pub t0: f64,
    pub mode: Mode,
    pub method: CapacitorMethod,
    pub horizon: f64,
    pub steps: usize,
}

impl Default for CapacitorArgs {
    fn default() -> Self {
        CapacitorArgs {
            capacitance: 1.0,
            resistance: 1e6,
            beta: 1.0,
            n: 0.9,
            u0: 1.0,
            t0: f64::INFINITY,
            mode: Mode::Discharge,
            method: CapacitorMethod::Ml,
            horizon: 1.0,
            steps: 100,
        }
    }
}

pub fn cmd_capacitor(args: &CapacitorArgs, tol: f64) -> Result<CsvTable, CliError> {
    let m = CapacitorModel::new(args.capacitance, args.resistance, args.beta, args.n, args.u0, args.t0, args.mode)?;
    let sol = match args.method {
        CapacitorMethod::Ml => solve_discharge_ml(&m, args.horizon, args.steps, tol)?,
        CapacitorMethod::ClosedForm => solve_discharge_closed_form(&m, args.horizon, args.steps)?,
        CapacitorMethod::Gross => solve_discharge_gross(&m, args.horizon, args.steps, tol)?,
        CapacitorMethod::Volterra => solve_discharge_volterra(&m, args.horizon, args.steps)?,
    };
    let mut table = CsvTable::new(["t", "U"]);
    table.comment(format!(
        "k = {}, p = {}, lambda = {}, A = {}",
        format_value(m.k()),
        format_value(m.p()),
        format_value(m.lambda()),
        format_value(m.a_const())
    ));
    table.comment(format!("method = {}", sol.method));
    for (t, u) in sol.curve.iter() {
        table.push_row(vec![t, u])?;
    }
    Ok(table)
}
