use super::{check_argument, check_tol, EvalResult, Method};
use crate::error::Result;
use crate::order::Order;
use crate::quadrature::Quadrature;
use std::f64::consts::PI;

/// E_α(−x) from the spectral integral e_α(t) = ∫₀^∞ e^{−rt} K_α(r) dr with
/// t = x^{1/α}.
///
/// The range is split at r = 1 and the tail mapped by r → 1/r; since the
/// spectrum is invariant under that map (up to the Jacobian), both halves
/// become ∫₀¹ over r = u^{1/α}, which turns the r^{α−1} endpoint behaviour
/// into the bounded integrand
///
/// ```text
/// sin(απ)/(απ) · [exp(−t u^{1/α}) + exp(−t u^{−1/α})] / (u² + 2u cos(απ) + 1).
/// ```
pub fn ml_integral(order: Order, x: f64, tol: f64) -> Result<EvalResult> {
    check_argument(x)?;
    check_tol(tol)?;
    order.require_fractional()?;
    let alpha = order.alpha();
    let t = x.powf(1.0 / alpha);
    let inv_alpha = 1.0 / alpha;
    let theta = alpha * PI;
    let prefactor = theta.sin() / theta;
    let cos_t = theta.cos();

    let integrand = |u: f64| {
        let short = (-t * u.powf(inv_alpha)).exp();
        let long = if t == 0.0 {
            1.0
        } else {
            (-t * u.powf(-inv_alpha)).exp()
        };
        (short + long) / (u * u + 2.0 * u * cos_t + 1.0)
    };

    // Each exponential switches off where t·u^{±1/α} crosses O(1), i.e. at
    // u = s^α/x and u = x/s^α; resolve those layers explicitly.
    let mut points = vec![0.0, 1.0];
    for s in [1e-2, 0.3, 1.0, 3.0, 10.0, 40.0] {
        let sa = f64::powf(s, alpha);
        for u in [sa / x, x / sa] {
            if u > 0.0 && u < 1.0 {
                points.push(u);
            }
        }
    }
    // spectral peak for α near 1
    if cos_t < 0.0 {
        points.push(-cos_t);
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let quad = Quadrature::with_tol(tol / prefactor).max_panels(2000);
    let est = quad.integrate_split(integrand, &points)?;
    Ok(EvalResult::new(
        prefactor * est.value,
        Method::Integral,
        prefactor * est.abs_err,
    ))
}
