//! Hardy's Z-function via the Riemann–Siegel formula with four correction terms.
//!
//! Heights are split as `base + offset`; the base-dependent part of every phase
//! `t·ln n` is reduced modulo 2π once, in double-double, so that the per-call
//! work stays in plain `f64` even at t ≈ 10^11.

use crate::dd::{Dd, PI, TWO_PI};
use num_complex::Complex64;
use std::f64::consts::{PI as PI64, TAU};

struct Term {
    inv_sqrt: f64,
    ln_n: Dd,
    base_phase: f64,
}

pub struct SiegelZ {
    base: f64,
    ln_two_pi: Dd,
    terms: Vec<Term>,
}

const CAUCHY_POINTS: usize = 64;
const CAUCHY_RADIUS: f64 = 0.7;

impl SiegelZ {
    /// Prepares the main-sum tables for heights in `base + [0, max_offset]`.
    pub fn new(base: f64, max_offset: f64) -> Self {
        assert!(base >= 0.0 && base.fract() == 0.0, "base must be a nonnegative integer");
        let t_max = base + max_offset.max(0.0) + 1.0;
        let n_max = (t_max / TAU).sqrt().floor() as usize + 2;
        let terms = (1..=n_max)
            .map(|n| {
                let ln_n = Dd::from_f64(n as f64).ln();
                Term {
                    inv_sqrt: 1.0 / (n as f64).sqrt(),
                    ln_n,
                    base_phase: ln_n.mul_f64(base).rem_two_pi(),
                }
            })
            .collect();
        SiegelZ { base, ln_two_pi: TWO_PI.ln(), terms }
    }

    fn height(&self, offset: f64) -> Dd {
        Dd::sum(self.base, offset)
    }

    /// Riemann–Siegel theta at `base + offset`, in double-double.
    pub fn theta(&self, offset: f64) -> Dd {
        let t = self.height(offset);
        let log_term = t.ln() - self.ln_two_pi;
        let tf = t.to_f64();
        let inv = 1.0 / tf;
        let inv2 = inv * inv;
        let tail = inv
            * (1.0 / 48.0
                + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0))));
        (t * log_term).mul_f64(0.5) - t.mul_f64(0.5) - PI.mul_f64(0.125) + Dd::from_f64(tail)
    }

    /// θ(base + offset) − nπ.
    pub fn theta_minus_gram(&self, offset: f64, n: f64) -> f64 {
        (self.theta(offset) - PI.mul_f64(n)).to_f64()
    }

    /// θ'(t) = ½ ln(t/2π) + O(t⁻²).
    pub fn theta_prime(&self, offset: f64) -> f64 {
        0.5 * ((self.base + offset) / TAU).ln()
    }

    pub fn z(&self, offset: f64) -> f64 {
        let t = self.height(offset).to_f64();
        let tau = t / TAU;
        let a = tau.sqrt();
        let n = a.floor() as usize;
        assert!(n < self.terms.len(), "height {t} beyond prepared range");
        let p = a - n as f64;
        let theta = self.theta(offset).rem_two_pi();

        let mut main = 0.0;
        for term in &self.terms[..n] {
            let phase = theta - term.base_phase - term.ln_n.mul_f64(offset).rem_two_pi();
            main += term.inv_sqrt * phase.cos();
        }

        let psi = psi_derivatives(p);
        let pi2 = PI64 * PI64;
        let pi4 = pi2 * pi2;
        let pi6 = pi4 * pi2;
        let pi8 = pi4 * pi4;
        let c0 = psi[0];
        let c1 = -psi[3] / (96.0 * pi2);
        let c2 = psi[2] / (64.0 * pi2) + psi[6] / (18432.0 * pi4);
        let c3 = -psi[1] / (64.0 * pi2) - psi[5] / (3840.0 * pi4) - psi[9] / (5_308_416.0 * pi6);
        let c4 = psi[0] / (128.0 * pi2)
            + 19.0 * psi[4] / (24576.0 * pi4)
            + 11.0 * psi[8] / (5_898_240.0 * pi6)
            + psi[12] / (2_038_431_744.0 * pi8);
        let h = 1.0 / a;
        let series = c0 + h * (c1 + h * (c2 + h * (c3 + h * c4)));
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        2.0 * main + sign * tau.powf(-0.25) * series
    }
}

fn psi(z: Complex64) -> Complex64 {
    let arg = (z * z - z - 1.0 / 16.0) * TAU;
    arg.cos() / (z * TAU).cos()
}

/// Ψ(p), Ψ'(p), …, Ψ⁽¹²⁾(p) for Ψ(p) = cos(2π(p² − p − 1/16)) / cos(2πp).
///
/// Ψ is entire, so the Taylor coefficients come from the trapezoidal rule on a
/// circle around p (Cauchy's integral formula), which converges geometrically.
fn psi_derivatives(p: f64) -> [f64; 13] {
    let mut coeffs = [0.0; 13];
    let values: Vec<(Complex64, Complex64)> = (0..CAUCHY_POINTS)
        .map(|j| {
            let w = Complex64::from_polar(1.0, TAU * j as f64 / CAUCHY_POINTS as f64);
            (w, psi(Complex64::new(p, 0.0) + w * CAUCHY_RADIUS))
        })
        .collect();
    let mut factorial = 1.0;
    for (k, slot) in coeffs.iter_mut().enumerate() {
        if k > 0 {
            factorial *= k as f64;
        }
        let s: Complex64 = values.iter().map(|(w, v)| v * w.powi(-(k as i32))).sum();
        let ck = s.re / CAUCHY_POINTS as f64 / CAUCHY_RADIUS.powi(k as i32);
        *slot = ck * factorial;
    }
    coeffs
}
