use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::fracops::SampledFunction;

/// ψ(t) + ∫₀ᵗ ψ(τ) K(t − τ) dτ = f(t) with K(u) = λ[1 + k u^{p−1}].
///
/// The grid is t_j = T (j/N)^r. A singular kernel makes ψ start like t^p,
/// so by default such problems are graded with r = 1/p; otherwise the grid
/// is uniform.
pub struct VolterraProblem<'a> {
    pub lambda: f64,
    pub k: f64,
    pub p: f64,
    pub forcing: SampledFunction<'a>,
    pub horizon: f64,
    pub steps: usize,
    pub grading: f64,
}

impl<'a> VolterraProblem<'a> {
    pub fn new(lambda: f64, k: f64, p: f64, forcing: SampledFunction<'a>, horizon: f64, steps: usize) -> Result<Self> {
        if !(lambda.is_finite() && lambda >= 0.0) {
            return Err(Error::Domain(format!("kernel λ must be finite and ≥ 0, got {lambda}")));
        }
        if !(k.is_finite() && k >= 0.0) {
            return Err(Error::Domain(format!("kernel k must be finite and ≥ 0, got {k}")));
        }
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::UnsupportedOrder(p));
        }
        if !(horizon.is_finite() && horizon > 0.0) {
            return Err(Error::Domain(format!("horizon must be positive, got {horizon}")));
        }
        if steps < 2 {
            return Err(Error::Domain(format!("need at least 2 steps, got {steps}")));
        }
        let grading = if p < 1.0 && lambda * k > 0.0 { 1.0 / p } else { 1.0 };
        Ok(VolterraProblem {
            lambda,
            k,
            p,
            forcing,
            horizon,
            steps,
            grading,
        })
    }

    pub fn with_grading(mut self, grading: f64) -> Result<Self> {
        if !(grading.is_finite() && grading >= 1.0) {
            return Err(Error::Domain(format!("grading exponent must be ≥ 1, got {grading}")));
        }
        self.grading = grading;
        Ok(self)
    }

    pub fn grid(&self) -> Vec<f64> {
        let n = self.steps as f64;
        (0..=self.steps)
            .map(|j| {
                if j == self.steps {
                    self.horizon
                } else {
                    self.horizon * (j as f64 / n).powf(self.grading)
                }
            })
            .collect()
    }

    /// Weights of the two end nodes of a panel u ∈ [a, a + w] against K:
    /// (∫ (a + w − u)/w K du, ∫ (u − a)/w K du).
    fn panel_weights(&self, a: f64, w: f64) -> (f64, f64) {
        let p = self.p;
        let singular = self.lambda * self.k;
        // ∫ u^{p−1} du and ∫ (u − a) u^{p−1} du over the panel
        let (m0, m1) = if a == 0.0 {
            let wp = w.powf(p);
            (wp / p, w * wp / (p + 1.0))
        } else {
            let ap = a.powf(p);
            let diff = ap * (p * (w / a).ln_1p()).exp_m1();
            (diff / p, (diff * (p * w - a) + p * w * ap) / (p * (p + 1.0)))
        };
        let far = self.lambda * w / 2.0 + singular * m1 / w;
        let near = self.lambda * w + singular * m0 - far;
        (near, far)
    }
}

/// ψ on the solver grid.
#[derive(Debug, Clone, PartialEq)]
pub struct VolterraSolution {
    pub psi: Curve,
}

impl VolterraSolution {
    /// U(t) = U(0) + ∫₀ᵗ ψ, exact for the piecewise-linear ψ.
    pub fn voltage(&self, initial: f64) -> Curve {
        self.psi.cumulative_integral(initial)
    }
}

/// Implicit product integration with piecewise-linear ψ; the kernel
/// moments over each panel are exact.
pub fn solve_volterra(prob: &VolterraProblem<'_>) -> Result<VolterraSolution> {
    let t = prob.grid();
    let n = prob.steps;
    let f: Vec<f64> = t.iter().map(|&x| prob.forcing.eval(x)).collect();
    if let Some(bad) = f.iter().position(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("forcing is not finite at t = {}", t[bad])));
    }
    let widths: Vec<f64> = t.windows(2).map(|w| w[1] - w[0]).collect();

    let mut psi = vec![0.0; n + 1];
    psi[0] = f[0];
    for m in 1..=n {
        let mut acc = 0.0;
        for j in 0..m - 1 {
            let (near, far) = prob.panel_weights(t[m] - t[j + 1], widths[j]);
            acc += near * psi[j + 1] + far * psi[j];
        }
        let (near, far) = prob.panel_weights(0.0, widths[m - 1]);
        acc += far * psi[m - 1];
        let diag = 1.0 + near;
        if !(diag > 0.0) {
            return Err(Error::SingularSystem(diag));
        }
        psi[m] = (f[m] - acc) / diag;
    }
    Ok(VolterraSolution {
        psi: Curve::new(t, psi)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vanishing_kernel_returns_forcing() {
        let f = SampledFunction::from_fn(|t: f64| (2.0 * t).cos());
        let prob = VolterraProblem::new(0.0, 3.0, 0.4, f, 2.0, 50).unwrap();
        let sol = solve_volterra(&prob).unwrap();
        for (t, v) in sol.psi.iter() {
            assert_abs_diff_eq!(v, (2.0 * t).cos(), epsilon = 1e-15);
        }
    }

    #[test]
    fn constant_kernel_gives_exponential() {
        let (lambda, k) = (0.5, 1.0);
        let c = lambda * (1.0 + k);
        let prob = VolterraProblem::new(lambda, k, 1.0, SampledFunction::from_fn(|_| 1.0), 3.0, 600).unwrap();
        let sol = solve_volterra(&prob).unwrap();
        for (t, v) in sol.psi.iter() {
            assert_abs_diff_eq!(v, (-c * t).exp(), epsilon = 1e-5);
        }
        let u = sol.voltage(2.0);
        let (t, v) = u.last();
        assert_abs_diff_eq!(v, 2.0 + (1.0 - (-c * t).exp()) / c, epsilon = 1e-5);
    }

    #[test]
    fn weights_match_direct_moments() {
        let prob = VolterraProblem::new(0.7, 2.0, 0.3, SampledFunction::from_fn(|_| 0.0), 1.0, 40).unwrap();
        let kern = |u: f64| 0.7 * (1.0 + 2.0 * u.powf(-0.7));
        for (a, w) in [(0.0, 0.025), (0.025, 0.025), (0.4, 1e-3), (0.9, 0.1)] {
            let (near, far) = prob.panel_weights(a, w);
            let q = crate::quadrature::Quadrature::with_tol(1e-14);
            let split = [a, a + 1e-6 * w, a + w];
            let m0 = q.integrate_split(kern, &split).unwrap().value;
            let m1 = q.integrate_split(|u| (u - a) / w * kern(u), &split).unwrap().value;
            assert_abs_diff_eq!(near, m0 - m1, epsilon = 1e-10);
            assert_abs_diff_eq!(far, m1, epsilon = 1e-10);
        }
    }

    #[test]
    fn grid_is_graded_only_for_singular_kernels() {
        let f = || SampledFunction::from_fn(|_| 1.0);
        let smooth = VolterraProblem::new(1.0, 0.0, 0.5, f(), 2.0, 4).unwrap();
        assert_eq!(smooth.grid(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
        let singular = VolterraProblem::new(1.0, 1.0, 0.5, f(), 1.0, 4).unwrap();
        assert_eq!(singular.grading, 2.0);
        assert_eq!(singular.grid()[1], 0.0625);
        assert!(singular.with_grading(0.5).is_err());
    }

    #[test]
    fn rejects_bad_problems() {
        let f = || SampledFunction::from_fn(|_| 1.0);
        assert!(VolterraProblem::new(-1.0, 1.0, 0.5, f(), 1.0, 10).is_err());
        assert!(VolterraProblem::new(1.0, 1.0, 0.0, f(), 1.0, 10).is_err());
        assert!(VolterraProblem::new(1.0, 1.0, 0.5, f(), 1.0, 1).is_err());
        let singular = SampledFunction::from_fn(|t: f64| t.powf(-0.5));
        let prob = VolterraProblem::new(1.0, 1.0, 0.5, singular, 1.0, 10).unwrap();
        assert!(matches!(solve_volterra(&prob), Err(Error::Domain(_))));
    }
}
