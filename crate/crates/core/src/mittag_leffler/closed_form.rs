use super::{EvalResult, Method};
use crate::error::{Error, Result};
use crate::order::Order;
use crate::special::erfcx;

/// Exact expressions: E₁(−x) = e^{−x} and E_{1/2}(−x) = e^{x²} erfc(x).
///
/// Returns `None` for every other order.
pub fn ml_closed_form(order: Order, x: f64) -> Option<EvalResult> {
    let alpha = order.alpha();
    let value = if alpha == 1.0 {
        (-x).exp()
    } else if alpha == 0.5 {
        if x < 0.0 {
            return None;
        }
        erfcx(x)
    } else {
        return None;
    };
    Some(EvalResult::new(value, Method::ClosedForm, 4.0 * f64::EPSILON * value))
}

/// The α → 0 limit, E₀(−x) = 1/(1 + x), valid for |x| < 1.
pub fn zero_order_limit(x: f64) -> Result<f64> {
    if x.abs() < 1.0 {
        Ok(1.0 / (1.0 + x))
    } else {
        Err(Error::Domain(format!("the order-zero limit needs |x| < 1, got {x}")))
    }
}
