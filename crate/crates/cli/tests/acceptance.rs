//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use mlrelax::dielectrics::{
    gross_approximation, solve_discharge_closed_form, solve_discharge_ml, solve_discharge_volterra,
    solve_volterra, CapacitorModel, VolterraProblem,
};
use mlrelax::fracops::SampledFunction;
use mlrelax::{e_alpha, ml_eval, Order};
use mlrelax_cli::{cmd_figure, cmd_table1, cmd_verify, CsvTable, Suite};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ord(a: f64) -> Order {
    Order::new(a).unwrap()
}

fn erfcx(x: f64) -> f64 {
    (x * x).exp() * libm::erfc(x)
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn table1() -> Outcome {
    // (x, E_0.1(-x), 1/(1+1.051x), E_0.5(-x)) as printed
    let printed = [
        (0.0, 1.000, 1.000, 1.000),
        (0.2, 0.8259, 0.8264, 0.8090),
        (0.4, 0.7031, 0.7040, 0.6708),
        (0.6, 0.6118, 0.6133, 0.5678),
        (1.0, 0.4856, 0.4876, 0.4276),
        (2.0, 0.3200, 0.3224, 0.2655),
        (4.0, 0.1901, 0.1922, 0.1370),
        (6.0, 0.1353, 0.1369, 0.0940),
        (8.0, 0.1049, 0.1063, 0.0650),
        (10.0, 0.0857, 0.0869, 0.0564),
    ];
    let t = cmd_table1(1e-10).map_err(|e| e.to_string())?;
    let (mut d1, mut d2, mut d3) = (0.0f64, 0.0f64, 0.0f64);
    let mut misprints = Vec::new();
    for (row, &(x, e1, r, e5)) in t.rows().iter().zip(&printed) {
        if row[0] != x {
            return Err(format!("abscissa {} where {x} expected", row[0]));
        }
        d1 = d1.max((row[1] - e1).abs());
        d2 = d2.max((row[2] - r).abs());
        d3 = d3.max((row[3] - erfcx(x)).abs());
        if (row[3] - e5).abs() > 1e-3 {
            misprints.push(format!("{x}"));
        }
    }
    check(
        d1 <= 2e-3 && d2 <= 5e-4 && d3 <= 1e-3,
        format!(
            "max |E_0.1 - table| {d1:.1e}, |rational - table| {d2:.1e}, |E_0.5 - erfcx| {d3:.1e}; printed E_0.5 off at x = {}",
            misprints.join(", ")
        ),
    )
}

fn special_cases() -> Outcome {
    let (mut exp_err, mut erfc_err) = (0.0f64, 0.0f64);
    for i in 0..100 {
        let t = 0.1 * i as f64;
        exp_err = exp_err.max((e_alpha(ord(1.0), t, 1e-12).map_err(|e| e.to_string())?.value - (-t).exp()).abs());
        let v = ml_eval(ord(0.5), t, 1e-13).map_err(|e| e.to_string())?.value;
        erfc_err = erfc_err.max((v - erfcx(t)).abs());
    }
    check(
        exp_err == 0.0 && erfc_err < 1e-10,
        format!("max |e_1 - exp| {exp_err:.1e}, max |E_0.5 - erfcx| {erfc_err:.1e}"),
    )
}

fn suite(s: Suite) -> Outcome {
    let report = cmd_verify(s);
    let detail = report
        .checks
        .iter()
        .map(|c| format!("{} {:.2e}", c.name, c.worst))
        .collect::<Vec<_>>()
        .join("; ");
    check(report.passed(), detail)
}

fn castro_chain() -> Outcome {
    let err = |e: mlrelax::Error| e.to_string();
    let m = CapacitorModel::full_charge(1.0, 1e6, 1.0, 0.9, 1.0).map_err(err)?;
    let ml = solve_discharge_ml(&m, 1.0, 100, 1e-12).map_err(err)?.curve;
    let cf = solve_discharge_closed_form(&m, 1.0, 100).map_err(err)?.curve;
    let vo = solve_discharge_volterra(&m, 1.0, 4096).map_err(err)?.curve;
    let mut worst = 0.0f64;
    for ((_, a), (t, b)) in ml.iter().zip(cf.iter()).skip(1) {
        let c = vo.interpolate(t);
        worst = worst.max((a - b).abs()).max((a - c).abs()).max((b - c).abs());
    }

    let (lambda, k) = (0.5, 1.0);
    let rate = lambda * (1.0 + k);
    let error = |n: usize| -> Result<f64, String> {
        let prob = VolterraProblem::new(lambda, k, 1.0, SampledFunction::from_fn(|_| 1.0), 2.0, n).map_err(err)?;
        let sol = solve_volterra(&prob).map_err(err)?;
        Ok(sol.psi.iter().map(|(t, v)| (v - (-rate * t).exp()).abs()).fold(0.0, f64::max))
    };
    let order = (error(512)? / error(4096)?).ln() / 8f64.ln();
    check(
        worst < 1e-3 && order >= 1.8,
        format!("max pairwise |dU|/U0 {worst:.2e} at R = 1e6; p = 1 convergence order {order:.3}"),
    )
}

fn gross_claim() -> Outcome {
    let err = |e: mlrelax::Error| e.to_string();
    let mut worst = 0.0f64;
    for r in [1.0, 1e6] {
        let m = CapacitorModel::full_charge(1.0, r, 1.0, 0.9, 1.0).map_err(err)?;
        let ml = solve_discharge_ml(&m, 0.05, 50, 1e-12).map_err(err)?.curve;
        for (t, u) in ml.iter() {
            worst = worst.max((gross_approximation(&m, t, 1e-12).map_err(err)? - u).abs());
        }
    }
    check(worst < 1e-2, format!("max |gross - rigorous|/U0 {worst:.2e} for t <= 0.05, R in {{1, 1e6}}"))
}

fn col(t: &CsvTable, name: &str) -> Result<Vec<f64>, String> {
    t.column(name).ok_or_else(|| format!("missing column {name}"))
}

fn non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] <= w[0])
}

fn non_decreasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[1] >= w[0])
}

fn figure(id: u8) -> Result<CsvTable, String> {
    cmd_figure(id, 1e-10).map_err(|e| e.to_string())
}

fn figure_invariants() -> Outcome {
    let mut failures = Vec::new();
    let mut fail = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };

    let f1 = figure(1)?;
    let r = col(&f1, "r")?;
    let ks: Vec<Vec<f64>> = ["K_0.25", "K_0.5", "K_0.75", "K_0.9"].iter().map(|c| col(&f1, c)).collect::<Result<_, _>>()?;
    let near_one = (0..r.len()).min_by(|&a, &b| (r[a] - 1.0).abs().total_cmp(&(r[b] - 1.0).abs())).unwrap();
    fail(ks.iter().flatten().all(|&k| k >= 0.0), "fig 1 non-negative");
    fail(ks.windows(2).all(|w| w[1][near_one] > w[0][near_one]), "fig 1 order at r = 1");
    fail(ks.windows(2).all(|w| w[1][0] < w[0][0]), "fig 1 order at small r");
    fail(ks[..2].iter().all(|k| non_increasing(k)), "fig 1 decreasing for alpha <= 0.5");

    let f2 = figure(2)?;
    let es: Vec<Vec<f64>> = ["e_0.25", "e_0.5", "e_0.75", "e_0.9", "e_1"].iter().map(|c| col(&f2, c)).collect::<Result<_, _>>()?;
    fail(es.iter().all(|e| e[0] == 1.0 && non_increasing(e)), "fig 2 decreasing from 1");
    fail(es.iter().flatten().all(|&v| (0.0..=1.0).contains(&v)), "fig 2 range");
    fail(es.windows(2).all(|w| w[0].last() > w[1].last()), "fig 2 order at t = 15");

    for id in 3..=7 {
        let f = figure(id)?;
        let (t, e, s, p) = (col(&f, "t")?, col(&f, "e_alpha")?, col(&f, "stretched_exponential")?, col(&f, "power_law")?);
        let n = t.len() - 1;
        fail(t[0] == 1e-5 && t[n] == 1e5, "figs 3-7 grid extremes");
        fail(s[0] <= e[0] && e[0] <= p[0], &format!("fig {id} bracket at t = 1e-5"));
        fail(s[n] <= e[n] && (e[n] / p[n] - 1.0).abs() < 0.05, &format!("fig {id} power law at t = 1e5"));
        fail((1.0 - e[0] / s[0]).abs() < 1e-2, &format!("fig {id} stretched exponential at t = 1e-5"));
        fail(non_increasing(&e), &format!("fig {id} decreasing"));
    }

    let f9 = figure(9)?;
    let ps: Vec<Vec<f64>> = ["e_P_0.25", "e_P_0.5", "e_P_0.75", "e_P_1"].iter().map(|c| col(&f9, c)).collect::<Result<_, _>>()?;
    let t9 = col(&f9, "t")?;
    let at = t9.iter().position(|&t| (t - 0.01).abs() < 1e-12).ok_or("no t = 0.01 row")?;
    fail(ps.iter().all(|p| p[0] == 0.0 && non_decreasing(p)), "fig 9 rises from 0");
    fail(ps.iter().flatten().all(|&v| v <= 0.5), "fig 9 below plateau");
    fail(ps.windows(2).all(|w| w[0][at] > w[1][at]), "fig 9 order at t = 0.01");

    check(
        failures.is_empty(),
        if failures.is_empty() { "figures 1-7, 9 satisfy their invariants".into() } else { failures.join(", ") },
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("table 1 reproduction", Duration::from_secs(1), table1),
        ("special-case identities", Duration::from_secs(1), special_cases),
        ("laplace pair", Duration::from_secs(10), || suite(Suite::Laplace)),
        ("spectral suite", Duration::from_secs(30), || suite(Suite::Spectra)),
        ("bounds sandwich", Duration::from_secs(5), || suite(Suite::Bounds)),
        ("fractional-relaxation residual", Duration::from_secs(30), || suite(Suite::Fracres)),
        ("capacitor consistency chain", Duration::from_secs(60), castro_chain),
        ("gross approximation", Duration::from_secs(10), gross_claim),
        ("figure data invariants", Duration::from_secs(60), figure_invariants),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over time budget")),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {} {}: {} ({:.2} s of {} s) {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            elapsed.as_secs_f64(),
            budget.as_secs(),
            detail
        );
    }
    println!("{} criteria, {} failed", 9, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
