//! Thin wrappers over the libm special functions used throughout the crate.

use std::f64::consts::PI;

const FRAC_1_SQRT_PI: f64 = 0.564_189_583_547_756_3;

#[inline]
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// sin(πz), exact zero at the integers.
pub fn sin_pi(z: f64) -> f64 {
    let k = z.round();
    let r = z - k;
    if r == 0.0 {
        return 0.0;
    }
    let s = (PI * r).sin();
    if (k as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// 1/Γ(z), returning exactly zero at the poles z = 0, −1, −2, …
pub fn rgamma(z: f64) -> f64 {
    if z <= 0.0 && z == z.round() {
        return 0.0;
    }
    if z > 0.5 {
        if z < 170.0 {
            1.0 / gamma(z)
        } else {
            (-ln_gamma(z)).exp()
        }
    } else {
        // reflection: 1/Γ(z) = Γ(1 − z) sin(πz) / π
        let w = 1.0 - z;
        let g = if w < 170.0 {
            gamma(w)
        } else {
            return ln_gamma(w).exp() * sin_pi(z) / PI;
        };
        g * sin_pi(z) / PI
    }
}

/// Scaled complementary error function e^{x²} erfc(x) for x ≥ 0.
pub fn erfcx(x: f64) -> f64 {
    if x < 26.0 {
        let xx = x * x;
        // low-order part of x² recovers the bits lost when rounding x·x
        let lo = x.mul_add(x, -xx);
        xx.exp() * (1.0 + lo) * libm::erfc(x)
    } else {
        // 1/(x√π) · Σ (−1)^k (2k−1)!! / (2x²)^k
        let inv = 1.0 / (2.0 * x * x);
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..12 {
            term *= -((2 * k - 1) as f64) * inv;
            sum += term;
        }
        FRAC_1_SQRT_PI * sum / x
    }
}
