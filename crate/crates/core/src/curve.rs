use crate::error::{Error, Result};

/// A sampled function of time: strictly increasing, non-negative abscissae
/// and one value per abscissa.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    t: Vec<f64>,
    values: Vec<f64>,
}

impl Curve {
    pub fn new(t: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if t.len() != values.len() {
            return Err(Error::InvalidCurve(format!(
                "{} abscissae but {} values",
                t.len(),
                values.len()
            )));
        }
        if t.is_empty() {
            return Err(Error::InvalidCurve("empty curve".into()));
        }
        if !(t[0] >= 0.0) {
            return Err(Error::InvalidCurve(format!("negative abscissa {}", t[0])));
        }
        if let Some(w) = t.windows(2).find(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidCurve(format!(
                "abscissae not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Curve { t, values })
    }

    /// Samples `f` on `steps + 1` uniformly spaced points of [0, t_end].
    pub fn sample_uniform<F: FnMut(f64) -> f64>(t_end: f64, steps: usize, mut f: F) -> Result<Self> {
        if steps == 0 || !(t_end > 0.0) {
            return Err(Error::InvalidCurve(format!(
                "uniform grid needs t_end > 0 and steps > 0 (got {t_end}, {steps})"
            )));
        }
        let h = t_end / steps as f64;
        let t: Vec<f64> = (0..=steps).map(|i| i as f64 * h).collect();
        let values = t.iter().map(|&x| f(x)).collect();
        Curve::new(t, values)
    }

    pub fn times(&self) -> &[f64] {
        &self.t
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.t.iter().copied().zip(self.values.iter().copied())
    }

    pub fn first(&self) -> (f64, f64) {
        (self.t[0], self.values[0])
    }

    pub fn last(&self) -> (f64, f64) {
        let n = self.t.len() - 1;
        (self.t[n], self.values[n])
    }

    /// Grid spacing if the abscissae are uniform to within a relative 1e-9.
    pub fn uniform_step(&self) -> Option<f64> {
        if self.t.len() < 2 {
            return None;
        }
        let h = (self.t[self.t.len() - 1] - self.t[0]) / (self.t.len() - 1) as f64;
        let uniform = self
            .t
            .windows(2)
            .all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h);
        uniform.then_some(h)
    }

    /// Piecewise-linear interpolation, clamped outside the sampled range.
    pub fn interpolate(&self, x: f64) -> f64 {
        let n = self.t.len();
        if x <= self.t[0] {
            return self.values[0];
        }
        if x >= self.t[n - 1] {
            return self.values[n - 1];
        }
        let i = self.t.partition_point(|&ti| ti <= x) - 1;
        let (t0, t1) = (self.t[i], self.t[i + 1]);
        let w = (x - t0) / (t1 - t0);
        self.values[i] + w * (self.values[i + 1] - self.values[i])
    }

    /// Cumulative trapezoidal integral, starting from `initial`.
    pub fn cumulative_integral(&self, initial: f64) -> Curve {
        let mut acc = initial;
        let mut out = Vec::with_capacity(self.len());
        out.push(acc);
        for i in 1..self.len() {
            acc += 0.5 * (self.t[i] - self.t[i - 1]) * (self.values[i] + self.values[i - 1]);
            out.push(acc);
        }
        Curve {
            t: self.t.clone(),
            values: out,
        }
    }

    pub fn map_values<F: FnMut(f64) -> f64>(&self, f: F) -> Curve {
        Curve {
            t: self.t.clone(),
            values: self.values.iter().copied().map(f).collect(),
        }
    }
}
