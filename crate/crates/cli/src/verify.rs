use crate::table::format_value;
use mlrelax::fracops::{caputo_derivative, laplace_transform, rl_derivative, SampledFunction};
use mlrelax::mittag_leffler::ml_bounds;
use mlrelax::spectra::{h_alpha, h_alpha_closed_form, k_alpha, reconstruct_e_alpha, SpectralDensity, SpectralDomain};
use mlrelax::{e_alpha, FracOrder, Order};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bounds,
    Spectra,
    Laplace,
    Fracres,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bounds" => Ok(Suite::Bounds),
            "spectra" => Ok(Suite::Spectra),
            "laplace" => Ok(Suite::Laplace),
            "fracres" => Ok(Suite::Fracres),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?}; expected bounds, spectra, laplace, fracres or all")),
        }
    }
}

/// One verified property: its worst residual (or smallest margin) over the
/// sampled grid and the limit it is held to.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub worst: f64,
    pub limit: f64,
    pub passed: bool,
    relation: &'static str,
}

impl Check {
    fn at_most(name: &str, worst: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            worst,
            limit,
            passed: worst <= limit,
            relation: "<=",
        }
    }

    fn above(name: &str, worst: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            worst,
            limit,
            passed: worst > limit,
            relation: ">",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: worst {} (limit {} {})",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            format_value(self.worst),
            self.relation,
            format_value(self.limit)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| format!("{c}\n")).collect();
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}

/// Worst value of `f` over the inputs, with any error counting as NaN so
/// the enclosing check fails.
fn worst<I, F>(inputs: I, f: F) -> f64
where
    I: IntoIterator,
    F: Fn(I::Item) -> mlrelax::Result<f64>,
{
    inputs
        .into_iter()
        .map(|x| f(x).unwrap_or(f64::NAN))
        .fold(f64::NEG_INFINITY, |acc, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

fn tenths() -> Vec<Order> {
    (1..=9).map(|i| Order::new(i as f64 / 10.0).expect("valid order")).collect()
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    (0..n).map(|i| 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64)).collect()
}

fn bounds() -> Vec<Check> {
    let points: Vec<(Order, f64)> = tenths()
        .into_iter()
        .flat_map(|o| log_grid(1e-5, 1e5, 41).into_iter().map(move |t| (o, t)))
        .collect();
    // negated smallest margin of e_α inside the bounds
    let neg_margin = worst(points, |(o, t)| {
        let b = ml_bounds(o, t)?;
        let e = e_alpha(o, t, 1e-12)?.value;
        Ok(-((e - b.lower).min(b.upper - e)))
    });
    vec![Check::above("bounds/sandwich margin", -neg_margin, 0.0)]
}

fn spectra() -> Vec<Check> {
    let grid = log_grid(1e-4, 1e4, 81);
    let pairs: Vec<(Order, f64)> = tenths()
        .into_iter()
        .flat_map(|o| grid.clone().into_iter().map(move |y| (o, y)))
        .collect();
    let negativity = worst(pairs.clone(), |(o, y)| Ok(-(k_alpha(o, y)?.min(h_alpha(o, y)?))));
    let scaling = worst(pairs, |(o, tau)| {
        let direct = h_alpha(o, tau)?;
        Ok(((direct - h_alpha_closed_form(o, tau)?) / direct).abs())
    });
    let mass = worst(tenths(), |o| {
        let d = SpectralDensity::new(o, SpectralDomain::Frequency)?;
        Ok((d.total_mass(1e-9)? - 1.0).abs())
    });
    let recon_points: Vec<(Order, f64)> = tenths()
        .into_iter()
        .flat_map(|o| [0.01, 0.1, 1.0, 10.0, 100.0].into_iter().map(move |t| (o, t)))
        .collect();
    let recon = worst(recon_points, |(o, t)| {
        Ok((reconstruct_e_alpha(o, t, 1e-9)? - e_alpha(o, t, 1e-12)?.value).abs())
    });
    vec![
        Check::at_most("spectra/non-negative (max of -K, -H)", negativity, 0.0),
        Check::at_most("spectra/unit mass", mass, 1e-6),
        Check::at_most("spectra/relaxation-time form (relative)", scaling, 1e-12),
        Check::at_most("spectra/reconstruction", recon, 1e-6),
    ]
}

const RESIDUAL_ORDERS: [f64; 3] = [0.25, 0.5, 0.75];
const RESIDUAL_TIMES: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 5.0];

fn relaxation(o: Order) -> SampledFunction<'static> {
    SampledFunction::from_fn(move |t| e_alpha(o, t, 1e-13).map(|r| r.value).unwrap_or(f64::NAN))
}

fn laplace() -> Vec<Check> {
    let points: Vec<(f64, f64)> = RESIDUAL_ORDERS
        .iter()
        .flat_map(|&a| [0.5, 1.0, 2.0].into_iter().map(move |s| (a, s)))
        .collect();
    let residual = worst(points, |(a, s)| {
        let f = relaxation(Order::new(a)?);
        let exact = s.powf(a - 1.0) / (s.powf(a) + 1.0);
        Ok((laplace_transform(&f, s, 1e-8)? - exact).abs())
    });
    vec![Check::at_most("laplace/transform pair", residual, 1e-5)]
}

fn fracres() -> Vec<Check> {
    let points: Vec<(f64, f64)> = RESIDUAL_ORDERS
        .iter()
        .flat_map(|&a| RESIDUAL_TIMES.into_iter().map(move |t| (a, t)))
        .collect();
    let caputo = worst(points.clone(), |(a, t)| {
        let f = relaxation(Order::new(a)?);
        Ok((caputo_derivative(&f, FracOrder::new(a)?, t, 1e-9)? + f.eval(t)).abs())
    });
    let rl = worst(points, |(a, t)| {
        let f = relaxation(Order::new(a)?);
        let h = 1e-4 * t;
        let slope = (f.eval(t + h) - f.eval(t - h)) / (2.0 * h);
        Ok((slope + rl_derivative(&f, FracOrder::new(1.0 - a)?, t, 1e-9)?).abs())
    });
    vec![
        Check::at_most("fracres/caputo residual", caputo, 1e-4),
        Check::at_most("fracres/riemann-liouville residual", rl, 1e-3),
    ]
}

pub fn cmd_verify(suite: Suite) -> VerifyReport {
    let checks = match suite {
        Suite::Bounds => bounds(),
        Suite::Spectra => spectra(),
        Suite::Laplace => laplace(),
        Suite::Fracres => fracres(),
        Suite::All => [bounds(), spectra(), laplace(), fracres()].concat(),
    };
    VerifyReport { checks }
}
