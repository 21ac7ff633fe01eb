//! Fractional derivatives of order 0 < μ < 1 and a numerical Laplace
//! transform.
//!
//! The Caputo derivative is the primitive,
//!
//! ```text
//! *D^μ f(t) = 1/Γ(1−μ) ∫₀ᵗ f′(τ) (t−τ)^{−μ} dτ,
//! ```
//!
//! and the Riemann-Liouville derivative is obtained from it by adding the
//! initial-value term f(0⁺) t^{−μ}/Γ(1−μ).

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::order::FracOrder;
use crate::quadrature::Quadrature;
use crate::special::gamma;

/// A function of time given either as a callable or as samples.
pub enum SampledFunction<'a> {
    Evaluator(Box<dyn Fn(f64) -> f64 + 'a>),
    Samples(&'a Curve),
}

impl<'a> SampledFunction<'a> {
    pub fn from_fn<F: Fn(f64) -> f64 + 'a>(f: F) -> Self {
        SampledFunction::Evaluator(Box::new(f))
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            SampledFunction::Evaluator(f) => f(t),
            SampledFunction::Samples(c) => c.interpolate(t),
        }
    }

    /// f(0⁺), the value at the left end of the grid.
    pub fn initial_value(&self) -> f64 {
        match self {
            SampledFunction::Evaluator(f) => f(0.0),
            SampledFunction::Samples(c) => c.first().1,
        }
    }
}

impl<'a> From<&'a Curve> for SampledFunction<'a> {
    fn from(c: &'a Curve) -> Self {
        SampledFunction::Samples(c)
    }
}

fn check_time(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("derivative needs t > 0, got {t}")))
    }
}

/// Caputo derivative *D^μ f(t).
///
/// For a callable the derivative is computed in the integrated-by-parts form
///
/// ```text
/// [ (f(t) − f(0)) t^{−μ} + μ ∫₀ᵗ (f(t) − f(t−σ)) σ^{−μ−1} dσ ] / Γ(1−μ)
/// ```
///
/// with σ = w^{1/(1−μ)}, under which the integrand becomes the bounded
/// difference quotient (f(t) − f(t−σ))/σ. No derivative of f is needed.
///
/// For samples on a uniform grid starting at 0, f′ is taken by central
/// differences and its piecewise-linear interpolant is integrated exactly
/// against (t−τ)^{−μ}; the discretisation error is estimated by repeating
/// the computation on every second node.
pub fn caputo_derivative(f: &SampledFunction<'_>, mu: FracOrder, t: f64, tol: f64) -> Result<f64> {
    check_time(t)?;
    match f {
        SampledFunction::Evaluator(g) => caputo_callable(g.as_ref(), mu.mu(), t, tol),
        SampledFunction::Samples(c) => caputo_samples(c, mu.mu(), t, tol),
    }
}

/// Riemann-Liouville derivative D^μ f(t) = *D^μ f(t) + f(0⁺) t^{−μ}/Γ(1−μ).
pub fn rl_derivative(f: &SampledFunction<'_>, mu: FracOrder, t: f64, tol: f64) -> Result<f64> {
    let caputo = caputo_derivative(f, mu, t, tol)?;
    let m = mu.mu();
    Ok(caputo + f.initial_value() * t.powf(-m) / gamma(1.0 - m))
}

fn caputo_callable(f: &dyn Fn(f64) -> f64, mu: f64, t: f64, tol: f64) -> Result<f64> {
    let g1 = gamma(1.0 - mu);
    let ft = f(t);
    let f0 = f(0.0);
    let boundary = (ft - f0) * t.powf(-mu);

    let q = 1.0 / (1.0 - mu);
    // below this lag the difference quotient is dominated by rounding in f
    let sigma_min = 1e-6 * t;
    let dq = |sigma: f64| (ft - f(t - sigma)) / sigma;
    let q_min = dq(sigma_min);
    let slope = (dq(2.0 * sigma_min) - q_min) / sigma_min;
    let quotient = |w: f64| -> f64 {
        let sigma = w.powf(q).min(t);
        if sigma < sigma_min {
            q_min + slope * (sigma - sigma_min)
        } else {
            dq(sigma)
        }
    };
    let w_end = t.powf(1.0 - mu);
    let quad = Quadrature::with_tol(tol * g1 / (mu * q)).max_panels(2000);
    let est = quad.integrate_split(quotient, &[0.0, 0.5 * w_end, 0.9 * w_end, w_end])?;
    Ok((boundary + mu * q * est.value) / g1)
}

/// ∫_{t_a}^{t_b} (c0 + c1 (τ − t_a)) (t − τ)^{−μ} dτ for t_b ≤ t.
fn linear_moment(t: f64, ta: f64, tb: f64, c0: f64, c1: f64, mu: f64) -> f64 {
    let sa = t - ta;
    let sb = t - tb;
    let p1 = 1.0 - mu;
    let p2 = 2.0 - mu;
    let m0 = (sa.powf(p1) - sb.powf(p1)) / p1;
    // ∫ (σ_a − σ) σ^{−μ} dσ over [σ_b, σ_a]
    let m1 = sa * m0 - (sa.powf(p2) - sb.powf(p2)) / p2;
    c0 * m0 + c1 * m1
}

fn product_integrate(times: &[f64], values: &[f64], mu: f64, t: f64) -> f64 {
    let n = times.len();
    let h = times[1] - times[0];
    // f′ at the nodes: central inside, second-order one-sided at the ends
    let deriv: Vec<f64> = (0..n)
        .map(|i| {
            if n < 3 {
                (values[1] - values[0]) / h
            } else if i == 0 {
                (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h)
            } else if i == n - 1 {
                (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h)
            } else {
                (values[i + 1] - values[i - 1]) / (2.0 * h)
            }
        })
        .collect();

    let mut acc = 0.0;
    for i in 0..n - 1 {
        let (ta, tb) = (times[i], times[i + 1]);
        if ta >= t {
            break;
        }
        let slope = (deriv[i + 1] - deriv[i]) / (tb - ta);
        acc += linear_moment(t, ta, tb.min(t), deriv[i], slope, mu);
    }
    acc / gamma(1.0 - mu)
}

fn caputo_samples(c: &Curve, mu: f64, t: f64, tol: f64) -> Result<f64> {
    let h = c.uniform_step().ok_or_else(|| {
        Error::InvalidCurve("product integration needs a uniform grid".into())
    })?;
    if c.first().0 != 0.0 {
        return Err(Error::InvalidCurve("derivative grid must start at t = 0".into()));
    }
    if t > c.last().0 * (1.0 + 1e-12) {
        return Err(Error::Domain(format!(
            "t = {t} lies beyond the sampled range [0, {}]",
            c.last().0
        )));
    }
    if c.len() < 5 {
        return Err(Error::GridTooCoarse {
            estimate: f64::INFINITY,
            tol,
        });
    }
    let fine = product_integrate(c.times(), c.values(), mu, t);
    let coarse_t: Vec<f64> = c.times().iter().step_by(2).copied().collect();
    let coarse_v: Vec<f64> = c.values().iter().step_by(2).copied().collect();
    let coarse = product_integrate(&coarse_t, &coarse_v, mu, t);
    let estimate = (fine - coarse).abs() / 3.0;
    if estimate > tol {
        return Err(Error::GridTooCoarse { estimate, tol });
    }
    debug_assert!(h > 0.0);
    Ok(fine)
}

/// Laplace transform ∫₀^∞ e^{−st} f(t) dt.
///
/// Integrated over doubling windows [0, 1/s], [1/s, 2/s], [2/s, 4/s], …
/// until the tail bound |f(T)| e^{−sT}/s (valid for completely monotone f,
/// which never exceed their value at T beyond T) falls below a tenth of
/// `tol`. A sampled function is integrated exactly as a piecewise-linear
/// interpolant; its tail bound beyond the last sample must also be met.
pub fn laplace_transform(f: &SampledFunction<'_>, s: f64, tol: f64) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Domain(format!("Laplace variable must be positive, got {s}")));
    }
    match f {
        SampledFunction::Evaluator(g) => laplace_callable(g.as_ref(), s, tol),
        SampledFunction::Samples(c) => laplace_samples(c, s, tol),
    }
}

const MAX_WINDOWS: usize = 80;

fn laplace_callable(f: &dyn Fn(f64) -> f64, s: f64, tol: f64) -> Result<f64> {
    let integrand = |t: f64| (-s * t).exp() * f(t);
    let window_tol = 0.5 * tol / MAX_WINDOWS as f64;
    let quad = Quadrature::with_tol(window_tol).max_panels(2000);

    let mut total = quad.integrate(integrand, 0.0, 1.0 / s)?.value;
    let mut a = 1.0 / s;
    for _ in 0..MAX_WINDOWS {
        let tail = f(a).abs() * (-s * a).exp() / s;
        if tail < 0.1 * tol {
            return Ok(total);
        }
        if !tail.is_finite() {
            break;
        }
        let b = 2.0 * a;
        total += quad.integrate(integrand, a, b)?.value;
        a = b;
    }
    Err(Error::TailUnbounded { horizon: a })
}

fn laplace_samples(c: &Curve, s: f64, tol: f64) -> Result<f64> {
    if c.first().0 != 0.0 {
        return Err(Error::InvalidCurve("Laplace transform needs samples from t = 0".into()));
    }
    let mut total = 0.0;
    for ((ta, fa), (tb, fb)) in c.iter().zip(c.iter().skip(1)) {
        // exact ∫ e^{−st} (fa + m (t − ta)) dt on [ta, tb]
        let h = tb - ta;
        let m = (fb - fa) / h;
        let ea = (-s * ta).exp();
        let eb = (-s * tb).exp();
        total += (fa * ea - fb * eb) / s + m * (ea - eb) / (s * s);
    }
    let (t_end, f_end) = c.last();
    let tail = f_end.abs() * (-s * t_end).exp() / s;
    if tail > 0.1 * tol {
        return Err(Error::TailUnbounded { horizon: t_end });
    }
    Ok(total)
}
