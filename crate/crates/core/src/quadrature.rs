//! Adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Globally adaptive: the panel with the largest error estimate is bisected
//! until the summed estimate meets the tolerance or the evaluation budget
//! runs out. Error estimates use the QUADPACK rescaling of |K15 − G7|.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// A quadrature result with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub abs_err: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_panels: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    res_abs: f64,
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Panel {
        a,
        b,
        value,
        err,
        res_abs,
    }
}

impl Quadrature {
    pub fn with_tol(abs_tol: f64) -> Self {
        Quadrature {
            abs_tol,
            ..Default::default()
        }
    }

    pub fn max_panels(mut self, n: usize) -> Self {
        self.max_panels = n;
        self
    }

    /// ∫ₐᵇ f over a finite interval.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<Estimate> {
        self.integrate_split(f, &[a, b])
    }

    /// ∫ over consecutive breakpoints, each panel refined independently by
    /// the global error heap.
    pub fn integrate_split<F: Fn(f64) -> f64>(&self, f: F, points: &[f64]) -> Result<Estimate> {
        assert!(points.len() >= 2, "need at least one interval");
        let mut panels: Vec<Panel> = points
            .windows(2)
            .filter(|w| w[0] != w[1])
            .map(|w| kronrod15(&f, w[0], w[1]))
            .collect();
        let mut evaluations = 15 * panels.len();
        if panels.is_empty() {
            return Ok(Estimate {
                value: 0.0,
                abs_err: 0.0,
                evaluations: 0,
            });
        }

        loop {
            let (value, err, res_abs) = panels
                .iter()
                .fold((0.0, 0.0, 0.0), |(v, e, r), p| (v + p.value, e + p.err, r + p.res_abs));
            let tol = self.abs_tol.max(self.rel_tol * value.abs());
            // below the rounding floor refinement cannot help
            if err <= tol || err <= 100.0 * f64::EPSILON * res_abs {
                return Ok(Estimate {
                    value,
                    abs_err: err,
                    evaluations,
                });
            }
            if panels.len() >= self.max_panels {
                return Err(Error::QuadratureFailure {
                    tol,
                    estimate: err,
                    evaluations,
                });
            }

            let worst = panels
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
                .map(|(i, _)| i)
                .unwrap();
            let Panel { a, b, .. } = panels.swap_remove(worst);
            let mid = 0.5 * (a + b);
            if !(mid > a.min(b) && mid < a.max(b)) {
                // panel cannot be split further in binary64
                return Err(Error::QuadratureFailure {
                    tol,
                    estimate: err,
                    evaluations,
                });
            }
            panels.push(kronrod15(&f, a, mid));
            panels.push(kronrod15(&f, mid, b));
            evaluations += 30;
        }
    }
}
