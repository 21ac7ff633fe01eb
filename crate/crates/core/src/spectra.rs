//! Spectral densities of the relaxation function.
//!
//! e_α(t) = ∫₀^∞ e^{−rt} K_α(r) dr over relaxation rates r, or equivalently
//! ∫₀^∞ e^{−t/τ} H_α(τ) dτ over relaxation times τ with
//! H_α(τ) = τ^{−2} K_α(1/τ). For the Mittag-Leffler relaxation function the
//! two densities have the same functional form.

use crate::error::{Error, Result};
use crate::order::Order;
use crate::quadrature::Quadrature;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralDomain {
    Frequency,
    RelaxationTime,
}

/// K_α(r) or H_α(τ) for a fixed order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDensity {
    pub order: Order,
    pub domain: SpectralDomain,
}

impl SpectralDensity {
    pub fn new(order: Order, domain: SpectralDomain) -> Result<Self> {
        order.require_fractional()?;
        Ok(SpectralDensity { order, domain })
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match self.domain {
            SpectralDomain::Frequency => k_alpha(self.order, x),
            SpectralDomain::RelaxationTime => h_alpha(self.order, x),
        }
    }

    /// ∫₀^∞ of the density, which is e_α(0) = 1.
    pub fn total_mass(&self, tol: f64) -> Result<f64> {
        reconstruct_e_alpha(self.order, 0.0, tol)
    }
}

/// The rational form shared by K_α and H_α:
/// (1/π) y^{α−1} sin(απ) / (y^{2α} + 2y^α cos(απ) + 1).
fn spectral_form(alpha: f64, y: f64) -> f64 {
    let ya = y.powf(alpha);
    let theta = alpha * PI;
    (ya / y) * theta.sin() / (PI * (ya * ya + 2.0 * ya * theta.cos() + 1.0))
}

fn check_positive(y: f64) -> Result<()> {
    if y.is_finite() && y > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("spectral variable must be positive, got {y}")))
    }
}

/// Frequency spectrum K_α(r) ≥ 0.
pub fn k_alpha(order: Order, r: f64) -> Result<f64> {
    order.require_fractional()?;
    check_positive(r)?;
    Ok(spectral_form(order.alpha(), r))
}

/// Relaxation-time spectrum, H_α(τ) = τ^{−2} K_α(1/τ).
pub fn h_alpha(order: Order, tau: f64) -> Result<f64> {
    order.require_fractional()?;
    check_positive(tau)?;
    Ok(k_alpha(order, 1.0 / tau)? / (tau * tau))
}

/// The closed form of H_α(τ): the K_α expression evaluated at τ.
pub fn h_alpha_closed_form(order: Order, tau: f64) -> Result<f64> {
    order.require_fractional()?;
    check_positive(tau)?;
    Ok(spectral_form(order.alpha(), tau))
}

/// e_α(t) rebuilt from its spectrum: ∫₀^∞ e^{−rt} K_α(r) dr.
///
/// Split at r = 1. On (0, 1) we substitute r = u^{1/α}; on (1, ∞) first
/// r = 1/v (which turns K_α dr into H_α dv) and then v = u^{1/α}. The
/// density is always evaluated through [`k_alpha`] / [`h_alpha`]; only the
/// Jacobian absorbs the endpoint power.
pub fn reconstruct_e_alpha(order: Order, t: f64, tol: f64) -> Result<f64> {
    order.require_fractional()?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Domain(format!("time must be non-negative, got {t}")));
    }
    let alpha = order.alpha();
    let inv_alpha = 1.0 / alpha;
    // K_α(r)·dr/du → sin(απ)/(απ) as u → 0
    let limit = (alpha * PI).sin() / (alpha * PI);

    let jacobian = |u: f64| inv_alpha * u.powf(inv_alpha - 1.0);
    let near = |u: f64| -> f64 {
        let r = u.powf(inv_alpha);
        if r == 0.0 {
            return limit;
        }
        (-r * t).exp() * k_alpha(order, r).unwrap_or(0.0) * jacobian(u)
    };
    let far = |u: f64| -> f64 {
        let tau = u.powf(inv_alpha);
        if tau == 0.0 {
            return 0.0;
        }
        let decay = if t == 0.0 { 1.0 } else { (-t / tau).exp() };
        decay * h_alpha(order, tau).unwrap_or(0.0) * jacobian(u)
    };

    let mut points = vec![0.0, 1.0];
    if t > 0.0 {
        // where e^{−t u^{±1/α}} switches off
        for s in [1e-2, 0.3, 1.0, 3.0, 10.0, 40.0] {
            let u = (s / t).powf(alpha);
            if u > 0.0 && u < 1.0 {
                points.push(u);
            }
            let u = (t / s).powf(alpha);
            if u > 0.0 && u < 1.0 {
                points.push(u);
            }
        }
    }
    let cos_t = (alpha * PI).cos();
    if cos_t < 0.0 {
        points.push(-cos_t);
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let quad = Quadrature::with_tol(0.5 * tol).max_panels(3000);
    let a = quad.integrate_split(near, &points)?;
    let b = quad.integrate_split(far, &points)?;
    Ok(a.value + b.value)
}
