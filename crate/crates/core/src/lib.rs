//! Mittag-Leffler relaxation toolkit.
//!
//! Evaluates e_α(t) = E_α(−t^α) and E_α(−x) for 0 < α ≤ 1 by several
//! independent algorithms, together with the frequency and relaxation-time
//! spectra of e_α, numerical Caputo / Riemann-Liouville derivatives, a
//! numerical Laplace transform, and two physical applications: the Cole
//! polarization circuit and the after-effect discharge of an imperfect
//! capacitor (a weakly singular Volterra equation).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod dielectrics;
pub mod error;
pub mod fracops;
pub mod mittag_leffler;
pub mod order;
pub mod quadrature;
pub mod special;
pub mod spectra;

pub use curve::Curve;
pub use error::{Error, Result};
pub use mittag_leffler::{e_alpha, ml_eval, EvalResult, Method};
pub use order::{FracOrder, Order};
