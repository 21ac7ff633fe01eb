//! Evaluation of the one-parameter Mittag-Leffler function on the negative
//! real axis, E_α(−x) for x ≥ 0 and 0 < α ≤ 1.
//!
//! Four algorithms are available, each returning an [`EvalResult`] that
//! carries its own error claim:
//!
//! * [`ml_series`]: the defining power series, for small arguments;
//! * [`ml_asymptotic`]: the algebraic expansion in 1/x with optimal truncation;
//! * [`ml_integral`]: the Laplace-type integral over the non-negative spectrum;
//! * [`ml_closed_form`]: exact expressions at α = 1 and α = 1/2.
//!
//! [`ml_eval`] picks among them, and [`e_alpha`] evaluates the relaxation
//! function e_α(t) = E_α(−t^α).

mod approx;
mod asymptotic;
mod closed_form;
mod integral;
mod series;

pub use approx::{ml_bounds, power_law_tail, rational_approx, stretched_exponential, BoundsPair};
pub use asymptotic::ml_asymptotic;
pub use closed_form::{ml_closed_form, zero_order_limit};
pub use integral::ml_integral;
pub use series::ml_series;

use crate::error::{Error, Result};
use crate::order::Order;
use std::fmt;

/// Upper bound on the number of terms tried by the dispatcher's asymptotic step.
pub const MAX_ASYMPTOTIC_TERMS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Asymptotic,
    Integral,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::Integral => "integral",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A function value together with the algorithm that produced it and the
/// absolute error that algorithm claims.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub method: Method,
    pub err_estimate: f64,
}

impl EvalResult {
    pub(crate) fn new(value: f64, method: Method, err_estimate: f64) -> Self {
        EvalResult {
            value,
            method,
            err_estimate,
        }
    }
}

pub(crate) fn check_argument(x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("argument must be finite and non-negative, got {x}")))
    }
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// E_α(−x) to absolute accuracy `tol`, choosing the algorithm.
///
/// Closed forms win when they exist. Otherwise the series is used for
/// x ≤ 1, the optimally truncated asymptotic expansion wherever its own
/// error estimate meets `tol`, and the spectral integral in between.
pub fn ml_eval(order: Order, x: f64, tol: f64) -> Result<EvalResult> {
    check_argument(x)?;
    check_tol(tol)?;
    if x == 0.0 {
        return Ok(EvalResult::new(1.0, Method::Series, 0.0));
    }
    if let Some(r) = ml_closed_form(order, x) {
        if r.err_estimate <= tol {
            return Ok(r);
        }
    }

    let mut best = f64::INFINITY;
    let mut accept = |r: Result<EvalResult>| -> Option<EvalResult> {
        match r {
            Ok(r) if r.err_estimate <= tol => Some(r),
            Ok(r) => {
                best = best.min(r.err_estimate);
                None
            }
            Err(_) => None,
        }
    };

    if x <= 1.0 {
        if let Some(r) = accept(ml_series(order, x, tol)) {
            return Ok(r);
        }
    } else if let Some(r) = accept(ml_asymptotic(order, x, MAX_ASYMPTOTIC_TERMS)) {
        return Ok(r);
    }
    if !order.is_exponential() {
        if let Some(r) = accept(ml_integral(order, x, tol)) {
            return Ok(r);
        }
    }
    if x > 1.0 {
        if let Some(r) = accept(ml_series(order, x, tol)) {
            return Ok(r);
        }
    }
    Err(Error::AccuracyUnreachable { x, tol, best })
}

/// The relaxation function e_α(t) = E_α(−t^α), t ≥ 0.
pub fn e_alpha(order: Order, t: f64, tol: f64) -> Result<EvalResult> {
    check_argument(t)?;
    check_tol(tol)?;
    if order.is_exponential() {
        return Ok(EvalResult::new((-t).exp(), Method::ClosedForm, 0.0));
    }
    ml_eval(order, t.powf(order.alpha()), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::erfcx;
    use ::approx::assert_abs_diff_eq;

    fn ord(a: f64) -> Order {
        Order::new(a).unwrap()
    }

    #[test]
    fn dispatcher_table_values() {
        let r = ml_eval(ord(0.1), 2.0, 1e-10).unwrap();
        assert_abs_diff_eq!(r.value, 0.3200, epsilon = 2e-3);
        assert!(r.err_estimate <= 1e-10);
        assert_eq!(ml_eval(ord(0.75), 0.0, 1e-10).unwrap().value, 1.0);
    }

    #[test]
    fn dispatcher_method_selection() {
        assert_eq!(ml_eval(ord(0.5), 1.0, 1e-10).unwrap().method, Method::ClosedForm);
        assert_eq!(ml_eval(ord(0.3), 0.5, 1e-10).unwrap().method, Method::Series);
        assert_eq!(ml_eval(ord(0.3), 50.0, 1e-10).unwrap().method, Method::Asymptotic);
        assert_eq!(ml_eval(ord(0.9), 3.0, 1e-10).unwrap().method, Method::Integral);
    }

    #[test]
    fn e_alpha_special_cases() {
        let r = e_alpha(ord(1.0), 1.0, 1e-12).unwrap();
        assert_eq!(r.value, (-1f64).exp());
        assert_eq!(r.method, Method::ClosedForm);
        assert_abs_diff_eq!(e_alpha(ord(0.5), 1.0, 1e-12).unwrap().value, 0.427_583_576_155_807, epsilon = 1e-12);
        assert_eq!(e_alpha(ord(0.5), 0.0, 1e-12).unwrap().value, 1.0);
        for &t in &[0.01, 0.3, 2.0, 9.0, 150.0] {
            let v = e_alpha(ord(0.5), t, 1e-13).unwrap().value;
            assert_abs_diff_eq!(v, erfcx(t.sqrt()), epsilon = 1e-12);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ml_eval(ord(0.5), -1.0, 1e-8).is_err());
        assert!(ml_eval(ord(0.5), 1.0, 0.0).is_err());
        assert!(e_alpha(ord(0.5), f64::NAN, 1e-8).is_err());
    }

    #[test]
    fn unreachable_tolerance_is_an_error() {
        let err = ml_eval(ord(0.3), 3.0, 1e-300).unwrap_err();
        assert!(matches!(err, Error::AccuracyUnreachable { .. }));
    }
}
