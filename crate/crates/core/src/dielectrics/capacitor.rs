use super::volterra::{solve_volterra, VolterraProblem};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::fracops::SampledFunction;
use crate::mittag_leffler::ml_eval;
use crate::order::Order;
use crate::quadrature::Quadrature;
use crate::special::gamma;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Discharge,
    Recharge,
}

impl Mode {
    /// δ = +1 for discharge, −1 for recharge.
    pub fn sign(self) -> f64 {
        match self {
            Mode::Discharge => 1.0,
            Mode::Recharge => -1.0,
        }
    }
}

/// Capacitor with a Schweidler after-effect function φ(t) = β t^{−n},
/// charged to U₀ for a time t₀ (infinite for a full charge) and then
/// discharged or short-circuited and left to recharge through R.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacitorModel {
    pub capacitance: f64,
    pub resistance: f64,
    pub beta: f64,
    pub n: f64,
    pub u0: f64,
    pub t0: f64,
    pub mode: Mode,
}

impl CapacitorModel {
    pub fn new(capacitance: f64, resistance: f64, beta: f64, n: f64, u0: f64, t0: f64, mode: Mode) -> Result<Self> {
        if !(capacitance.is_finite() && capacitance > 0.0) {
            return Err(Error::Domain(format!("capacitance must be positive, got {capacitance}")));
        }
        if !(resistance > 0.0) {
            return Err(Error::Domain(format!("resistance must be positive or infinite, got {resistance}")));
        }
        if !(beta.is_finite() && beta >= 0.0) {
            return Err(Error::Domain(format!("β must be finite and ≥ 0, got {beta}")));
        }
        if !(0.0..=1.0).contains(&n) {
            return Err(Error::Domain(format!("Schweidler exponent must lie in [0, 1], got {n}")));
        }
        if !u0.is_finite() {
            return Err(Error::Domain(format!("U0 must be finite, got {u0}")));
        }
        if !(t0 >= 0.0) {
            return Err(Error::Domain(format!("t0 must be ≥ 0, got {t0}")));
        }
        if mode == Mode::Recharge && t0 == 0.0 {
            return Err(Error::Domain("recharge needs a positive short-circuit time t0".into()));
        }
        Ok(CapacitorModel {
            capacitance,
            resistance,
            beta,
            n,
            u0,
            t0,
            mode,
        })
    }

    /// Full-charge discharge, t₀ = ∞.
    pub fn full_charge(capacitance: f64, resistance: f64, beta: f64, n: f64, u0: f64) -> Result<Self> {
        CapacitorModel::new(capacitance, resistance, beta, n, u0, f64::INFINITY, Mode::Discharge)
    }

    pub fn p(&self) -> f64 {
        1.0 - self.n
    }

    /// k = βR.
    pub fn k(&self) -> f64 {
        if self.beta == 0.0 {
            0.0
        } else {
            self.beta * self.resistance
        }
    }

    /// λ = 1/(RC), zero for an open circuit.
    pub fn lambda(&self) -> f64 {
        1.0 / (self.resistance * self.capacitance)
    }

    /// A = β/(pC).
    pub fn a_const(&self) -> f64 {
        self.beta / (self.p() * self.capacitance)
    }

    pub fn is_full_charge(&self) -> bool {
        self.t0.is_infinite()
    }

    pub fn initial_voltage(&self) -> f64 {
        match self.mode {
            Mode::Discharge => self.u0,
            Mode::Recharge => 0.0,
        }
    }

    /// i₀(t) = δ U₀ φ(t + t₀); vanishes after a full charge.
    pub fn charging_current(&self, t: f64) -> f64 {
        if self.is_full_charge() || self.beta == 0.0 {
            return 0.0;
        }
        self.mode.sign() * self.u0 * self.beta * (t + self.t0).powf(-self.n)
    }

    fn require_p(&self) -> Result<f64> {
        let p = self.p();
        if p > 0.0 {
            Ok(p)
        } else {
            Err(Error::UnsupportedOrder(p))
        }
    }
}

/// f(t) = −[λ U(0) + i₀(t)/C]. With R infinite this is −i₀/C.
pub fn discharge_forcing(m: &CapacitorModel, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !(t + m.t0 > 0.0) {
        return Err(Error::Domain(format!("forcing needs t ≥ 0 and t + t0 > 0, got t = {t}")));
    }
    Ok(-(m.lambda() * m.initial_voltage() + m.charging_current(t) / m.capacitance))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionMethod {
    MlConvolution,
    ClosedFormJ,
    GrossApprox,
    VolterraNumeric,
}

impl SolutionMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionMethod::MlConvolution => "ml-convolution",
            SolutionMethod::ClosedFormJ => "closed-form-J",
            SolutionMethod::GrossApprox => "gross-approx",
            SolutionMethod::VolterraNumeric => "volterra-numeric",
        }
    }
}

impl fmt::Display for SolutionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DischargeSolution {
    pub curve: Curve,
    pub method: SolutionMethod,
}

fn grid(horizon: f64, steps: usize) -> Result<Vec<f64>> {
    if !(horizon.is_finite() && horizon > 0.0) || steps == 0 {
        return Err(Error::Domain(format!(
            "need a positive horizon and at least one step, got {horizon}, {steps}"
        )));
    }
    let h = horizon / steps as f64;
    Ok((0..=steps).map(|i| i as f64 * h).collect())
}

/// ∫₀ᵗ g(s) ds for g with an s^{p−1}-type endpoint behaviour at 0, using
/// s = w^{1/p}.
fn integrate_from_origin<F: Fn(f64) -> f64>(g: F, p: f64, t: f64, tol: f64) -> Result<f64> {
    let inv_p = 1.0 / p;
    let integrand = |w: f64| g(w.powf(inv_p)) * inv_p * w.powf(inv_p - 1.0);
    let w_end = t.powf(p);
    Ok(Quadrature::with_tol(tol).max_panels(2000).integrate(integrand, 0.0, w_end)?.value)
}

/// U(t) = U(0) + ∫₀ᵗ E_p[−(β/C)Γ(p)(t − s)^p] f(s) ds.
///
/// The integral is split at t/2; the left half uses s = w^{1/p}, the right
/// half t − s = v^{1/p}, so the resolvent is sampled as the entire function
/// E_p(−c v) and a Schweidler singularity of f at 0 is absorbed.
pub fn solve_discharge_ml(m: &CapacitorModel, horizon: f64, steps: usize, tol: f64) -> Result<DischargeSolution> {
    let p = m.require_p()?;
    let order = Order::new(p)?;
    let c = m.beta / m.capacitance * gamma(p);
    let ml_tol = (1e-2 * tol).max(1e-14);
    let resolvent = |x: f64| -> f64 {
        if x == 0.0 {
            1.0
        } else {
            ml_eval(order, x, ml_tol).map(|r| r.value).unwrap_or(f64::NAN)
        }
    };
    let forcing = |s: f64| discharge_forcing(m, s).unwrap_or(f64::NAN);

    let times = grid(horizon, steps)?;
    let u_init = m.initial_voltage();
    let mut values = Vec::with_capacity(times.len());
    for &t in &times {
        if t == 0.0 {
            values.push(u_init);
            continue;
        }
        let half = 0.5 * t;
        let left = integrate_from_origin(|s| resolvent(c * (t - s).powf(p)) * forcing(s), p, half, 0.5 * tol)?;
        let inv_p = 1.0 / p;
        let right_integrand = |v: f64| resolvent(c * v) * forcing(t - v.powf(inv_p)) * inv_p * v.powf(inv_p - 1.0);
        let right = Quadrature::with_tol(0.5 * tol)
            .max_panels(2000)
            .integrate(right_integrand, 0.0, half.powf(p))?
            .value;
        let u = u_init + left + right;
        if !u.is_finite() {
            return Err(Error::QuadratureFailure {
                tol,
                estimate: f64::NAN,
                evaluations: 0,
            });
        }
        values.push(u);
    }
    Ok(DischargeSolution {
        curve: Curve::new(times, values)?,
        method: SolutionMethod::MlConvolution,
    })
}

fn even_reciprocal(p: f64) -> Result<usize> {
    let m = (1.0 / p).round();
    if p > 0.0 && m >= 2.0 && m % 2.0 == 0.0 && (m * p - 1.0).abs() < 1e-9 {
        Ok(m as usize)
    } else {
        Err(Error::UnsupportedOrder(p))
    }
}

/// J(t) = ∫₀ᵗ ds/(1 + A s^p) in closed form for p = 1/m, m even:
///
/// ```text
/// J = 1/(p A^m) [ Σ_{j=1}^{m−1} (−1)^{j−1} A^{m−j} t^{1−jp}/(m−j) − ln(1 + A t^p) ]
/// ```
///
/// With U = A t^p this is (t/p)[Σ (−1)^{j−1} U^{−j}/(m−j) − ln(1+U)/U^m],
/// evaluated as written for U ≥ 1/2 and as (t/p) Σ_{i≥0} (−1)^i U^i/(m+i)
/// below, where the bracket cancels.
pub fn closed_form_j(m: &CapacitorModel, t: f64) -> Result<f64> {
    let p = m.p();
    let m_even = even_reciprocal(p)?;
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("time must be finite and ≥ 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let u = m.a_const() * t.powf(p);
    let mf = m_even as f64;
    let bracket = if u < 0.5 {
        let mut sum = 0.0;
        let mut pow = 1.0;
        for i in 0..200 {
            let term = pow / (mf + i as f64);
            sum += if i % 2 == 0 { term } else { -term };
            if term < 1e-17 * sum.abs() {
                break;
            }
            pow *= u;
        }
        sum
    } else {
        let mut sum = 0.0;
        for j in 1..m_even {
            let term = u.powi(-(j as i32)) / (mf - j as f64);
            sum += if j % 2 == 1 { term } else { -term };
        }
        sum - u.ln_1p() / u.powi(m_even as i32)
    };
    Ok(t / p * bracket)
}

/// U(t) = U₀ − U₀/(RC) · J(t) on a uniform grid, for a full-charge discharge.
pub fn solve_discharge_closed_form(m: &CapacitorModel, horizon: f64, steps: usize) -> Result<DischargeSolution> {
    if !m.is_full_charge() || m.mode != Mode::Discharge {
        return Err(Error::Domain("the closed form covers full-charge discharge only".into()));
    }
    even_reciprocal(m.p())?;
    let times = grid(horizon, steps)?;
    let rate = m.u0 * m.lambda();
    let values = times
        .iter()
        .map(|&t| closed_form_j(m, t).map(|j| m.u0 - rate * j))
        .collect::<Result<Vec<_>>>()?;
    Ok(DischargeSolution {
        curve: Curve::new(times, values)?,
        method: SolutionMethod::ClosedFormJ,
    })
}

/// Gross's approximation U₀ exp{(1/U₀) ∫₀ᵗ f(s) ds/(1 + A s^p)}, A = β/(pC).
pub fn gross_approximation(m: &CapacitorModel, t: f64, tol: f64) -> Result<f64> {
    let p = m.require_p()?;
    if m.mode != Mode::Discharge {
        return Err(Error::Domain("the Gross approximation describes discharge only".into()));
    }
    if m.u0 == 0.0 {
        return Err(Error::Domain("the Gross approximation needs U0 ≠ 0".into()));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("time must be finite and ≥ 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(m.u0);
    }
    let a = m.a_const();
    let g = |s: f64| discharge_forcing(m, s).unwrap_or(f64::NAN) / (1.0 + a * s.powf(p));
    let integral = integrate_from_origin(g, p, t, tol * m.u0.abs())?;
    Ok(m.u0 * (integral / m.u0).exp())
}

pub fn solve_discharge_gross(m: &CapacitorModel, horizon: f64, steps: usize, tol: f64) -> Result<DischargeSolution> {
    let times = grid(horizon, steps)?;
    let values = times
        .iter()
        .map(|&t| gross_approximation(m, t, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(DischargeSolution {
        curve: Curve::new(times, values)?,
        method: SolutionMethod::GrossApprox,
    })
}

/// Numerical solution of the full equation with finite R, through the
/// Volterra kernel λ[1 + k u^{p−1}] and forcing −[λU(0) + i₀/C].
pub fn solve_discharge_volterra(m: &CapacitorModel, horizon: f64, steps: usize) -> Result<DischargeSolution> {
    let p = m.require_p()?;
    if m.resistance.is_infinite() {
        return Err(Error::Domain(
            "the Volterra kernel needs a finite terminal resistance".into(),
        ));
    }
    let forcing = SampledFunction::from_fn(|s| discharge_forcing(m, s).unwrap_or(f64::NAN));
    let prob = VolterraProblem::new(m.lambda(), m.k(), p, forcing, horizon, steps)?;
    let sol = solve_volterra(&prob)?;
    Ok(DischargeSolution {
        curve: sol.voltage(m.initial_voltage()),
        method: SolutionMethod::VolterraNumeric,
    })
}
