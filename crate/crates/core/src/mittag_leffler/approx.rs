use crate::error::Result;
use crate::order::Order;
use crate::special::gamma;

/// Short-time face of e_α: exp(−t^α / Γ(1 + α)).
pub fn stretched_exponential(order: Order, t: f64) -> f64 {
    let a = order.alpha();
    (-t.powf(a) / gamma(1.0 + a)).exp()
}

/// Long-time face of e_α: t^{−α} / Γ(1 − α). Undefined at α = 1.
pub fn power_law_tail(order: Order, t: f64) -> Result<f64> {
    order.require_fractional()?;
    let a = order.alpha();
    Ok(t.powf(-a) / gamma(1.0 - a))
}

/// One-pole approximation 1/(1 + x/Γ(1 + p)) of E_p(−x), exact in slope at
/// the origin; meant for small p.
pub fn rational_approx(order: Order, x: f64) -> f64 {
    1.0 / (1.0 + x / gamma(1.0 + order.alpha()))
}

/// Two-sided rational bounds on e_α(t).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsPair {
    pub lower: f64,
    pub upper: f64,
}

impl BoundsPair {
    pub fn contains(&self, v: f64) -> bool {
        self.lower <= v && v <= self.upper
    }
}

/// 1/(1 + t^α Γ(1 − α)) ≤ e_α(t) ≤ 1/(1 + t^α / Γ(1 + α)).
pub fn ml_bounds(order: Order, t: f64) -> Result<BoundsPair> {
    order.require_fractional()?;
    let a = order.alpha();
    let ta = t.powf(a);
    Ok(BoundsPair {
        lower: 1.0 / (1.0 + ta * gamma(1.0 - a)),
        upper: 1.0 / (1.0 + ta / gamma(1.0 + a)),
    })
}
