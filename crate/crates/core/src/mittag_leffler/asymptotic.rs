use super::{EvalResult, Method};
use crate::error::{Error, Result};
use crate::order::Order;
use crate::special::{ln_gamma, sin_pi};
use std::f64::consts::PI;

/// (−1)^{n−1} x^{−n} / Γ(1 − αn); exactly zero where Γ has a pole.
fn term(alpha: f64, x: f64, n: usize) -> f64 {
    let z = alpha * n as f64;
    let near = z.round();
    if near >= 1.0 && (z - near).abs() <= 1e-12 * z {
        return 0.0;
    }
    // 1/Γ(1 − z) = Γ(z) sin(πz) / π, assembled in log space
    let mag = (ln_gamma(z) - n as f64 * x.ln()).exp() * sin_pi(z) / PI;
    if n % 2 == 1 {
        mag
    } else {
        -mag
    }
}

/// E_α(−x) ~ Σ_{n≥1} (−1)^{n−1} x^{−n} / Γ(1 − αn), for large x.
///
/// At most `n_terms` terms are summed; summation also stops at the smallest
/// term, where the expansion is optimally truncated.
///
/// The error claim is the first omitted non-zero term, inflated by
/// 1 + 2/sin((1−α)π), plus e^{−t}/α with t = x^{1/α}. The coefficients
/// 1/Γ(1 − αn) are nearly cancelled by sin(παn) when α is close to 1, so the
/// bare omitted term understates the exponentially small remainder that the
/// expansion cannot represent.
pub fn ml_asymptotic(order: Order, x: f64, n_terms: usize) -> Result<EvalResult> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(format!("asymptotic expansion needs finite x > 0, got {x}")));
    }
    if n_terms == 0 {
        return Err(Error::Domain("at least one asymptotic term is required".into()));
    }
    if order.is_exponential() {
        // every coefficient 1/Γ(1 − n) vanishes; e^{−x} is beyond all orders
        return Err(Error::Domain("order 1 has no algebraic tail".into()));
    }
    let alpha = order.alpha();
    let leading = term(alpha, x, 1).abs();
    if leading > 1.0 {
        return Err(Error::DivergentRegime { x, leading });
    }

    let inflate = 1.0 + 2.0 / ((1.0 - alpha) * PI).sin();
    let beyond_all_orders = (-x.powf(1.0 / alpha)).exp() / alpha;
    let finish = |sum: f64, omitted: f64| {
        EvalResult::new(sum, Method::Asymptotic, inflate * omitted + beyond_all_orders)
    };

    let mut sum = 0.0_f64;
    let mut last_mag = f64::INFINITY;
    let mut n = 1;
    loop {
        let b = term(alpha, x, n);
        let mag = b.abs();
        if mag != 0.0 {
            // past the smallest term, out of budget, or negligible
            if mag > last_mag
                || n > n_terms
                || mag <= 1e-3 * f64::EPSILON * sum.abs()
                || mag < f64::MIN_POSITIVE
            {
                return Ok(finish(sum, mag));
            }
            last_mag = mag;
            sum += b;
        }
        n += 1;
    }
}
