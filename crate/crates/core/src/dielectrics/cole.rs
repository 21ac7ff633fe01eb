use crate::error::{Error, Result};
use crate::mittag_leffler::ml_eval;
use crate::order::Order;

/// Cole's nerve-membrane circuit: an emf E with series resistance r,
/// shunted by R and a polarization element of constant K and order α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColeCircuit {
    pub emf: f64,
    pub series_resistance: f64,
    pub shunt_resistance: f64,
    pub polarization_constant: f64,
    pub order: Order,
}

impl ColeCircuit {
    pub fn new(emf: f64, series_resistance: f64, shunt_resistance: f64, polarization_constant: f64, order: Order) -> Result<Self> {
        for (name, v) in [
            ("emf", emf),
            ("series resistance", series_resistance),
            ("shunt resistance", shunt_resistance),
            ("polarization constant", polarization_constant),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(ColeCircuit {
            emf,
            series_resistance,
            shunt_resistance,
            polarization_constant,
            order,
        })
    }

    /// The nondimensional circuit E = R = r = K = 1.
    pub fn unit(order: Order) -> Self {
        ColeCircuit {
            emf: 1.0,
            series_resistance: 1.0,
            shunt_resistance: 1.0,
            polarization_constant: 1.0,
            order,
        }
    }

    /// λ = K(R + r)/(R r).
    pub fn rate(&self) -> f64 {
        let (r, big_r) = (self.series_resistance, self.shunt_resistance);
        self.polarization_constant * (big_r + r) / (big_r * r)
    }

    /// Long-time potential E R/(R + r).
    pub fn plateau(&self) -> f64 {
        self.emf * self.shunt_resistance / (self.shunt_resistance + self.series_resistance)
    }
}

/// Potential across the polarization element,
/// e_P(t) = E R/(R + r) · [1 − E_α(−λ t^α)].
pub fn cole_potential(c: &ColeCircuit, t: f64, tol: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("time must be non-negative, got {t}")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let x = c.rate() * t.powf(c.order.alpha());
    let e = if x.is_infinite() { 0.0 } else { ml_eval(c.order, x, tol)?.value };
    Ok(c.plateau() * (1.0 - e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exponential_circuit() {
        let c = ColeCircuit::unit(Order::new(1.0).unwrap());
        assert_eq!(c.rate(), 2.0);
        let v = cole_potential(&c, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, 0.5 * (1.0 - (-2.0f64).exp()), epsilon = 1e-15);
        assert_abs_diff_eq!(v, 0.432_332, epsilon = 1e-6);
        assert_eq!(cole_potential(&c, 0.0, 1e-12).unwrap(), 0.0);
    }

    #[test]
    fn half_order_reaches_plateau() {
        let c = ColeCircuit::unit(Order::new(0.5).unwrap());
        let late = cole_potential(&c, 1e12, 1e-10).unwrap();
        assert_abs_diff_eq!(late, 0.5, epsilon = 1e-6);
        assert!(late < 0.5);
    }

    #[test]
    fn rejects_bad_parameters() {
        let o = Order::new(0.5).unwrap();
        assert!(ColeCircuit::new(1.0, 0.0, 1.0, 1.0, o).is_err());
        assert!(ColeCircuit::new(1.0, 1.0, 1.0, f64::NAN, o).is_err());
        assert!(cole_potential(&ColeCircuit::unit(o), -1.0, 1e-8).is_err());
    }
}
