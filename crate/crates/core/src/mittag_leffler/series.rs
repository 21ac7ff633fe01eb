use super::{check_argument, check_tol, EvalResult, Method};
use crate::error::{Error, Result};
use crate::order::Order;
use crate::special::{gamma, ln_gamma};

pub const MAX_SERIES_TERMS: usize = 10_000;

/// |x^n / Γ(αn + 1)|
fn term_magnitude(alpha: f64, x: f64, n: usize) -> f64 {
    let z = alpha * n as f64 + 1.0;
    if z < 170.0 && n < 300 {
        x.powi(n as i32) / gamma(z)
    } else {
        (n as f64 * x.ln() - ln_gamma(z)).exp()
    }
}

/// E_α(−x) from the defining power series Σ (−x)ⁿ / Γ(αn + 1).
///
/// Summation stops once the terms decrease and the next one is below
/// `tol / 2`. The other half of the budget is reserved for rounding, which
/// is estimated as ε·Σ|terms|; exceeding it is reported as
/// [`Error::CatastrophicCancellation`].
pub fn ml_series(order: Order, x: f64, tol: f64) -> Result<EvalResult> {
    check_argument(x)?;
    check_tol(tol)?;
    if x == 0.0 {
        return Ok(EvalResult::new(1.0, Method::Series, 0.0));
    }
    let alpha = order.alpha();
    let half = 0.5 * tol;

    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut mag = 1.0;
    for n in 0..MAX_SERIES_TERMS {
        sum += if n % 2 == 0 { mag } else { -mag };
        abs_sum += mag;
        let rounding = 2.0 * f64::EPSILON * abs_sum;
        if rounding > half {
            return Err(Error::CatastrophicCancellation { rounding, tol });
        }
        let next = term_magnitude(alpha, x, n + 1);
        if next < half && next <= mag {
            return Ok(EvalResult::new(sum, Method::Series, next + rounding));
        }
        mag = next;
    }
    Err(Error::AccuracyUnreachable {
        x,
        tol,
        best: mag,
    })
}
