use crate::error::{Error, Result};

/// Fractional order α of the relaxation function, restricted to (0, 1].
///
/// In the capacitor model the same quantity appears as p = 1 − n.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(Order(alpha))
        } else {
            Err(Error::InvalidOrder(alpha))
        }
    }

    /// Order p = 1 − n from a Schweidler exponent n.
    pub fn from_schweidler_exponent(n: f64) -> Result<Self> {
        Order::new(1.0 - n)
    }

    #[inline]
    pub fn alpha(self) -> f64 {
        self.0
    }

    /// α = 1, where the relaxation function is the plain exponential.
    #[inline]
    pub fn is_exponential(self) -> bool {
        self.0 == 1.0
    }

    pub(crate) fn require_fractional(self) -> Result<()> {
        if self.is_exponential() {
            Err(Error::Domain(
                "order 1 has a Dirac spectrum; a fractional order 0 < α < 1 is required".into(),
            ))
        } else {
            Ok(())
        }
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        Order::new(alpha)
    }
}

/// Order μ of a fractional derivative, 0 < μ < 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct FracOrder(f64);

impl FracOrder {
    pub fn new(mu: f64) -> Result<Self> {
        if mu.is_finite() && mu > 0.0 && mu < 1.0 {
            Ok(FracOrder(mu))
        } else {
            Err(Error::InvalidOrder(mu))
        }
    }

    #[inline]
    pub fn mu(self) -> f64 {
        self.0
    }
}
