//! Truncated zero sums for Re Σ 1/(s − ρ).
//!
//! Distances t − γ are formed as (t_base − base) + (t_offset − offset) so
//! that heights near 10¹² keep their fractional digits.

use std::ops::RangeInclusive;

use crate::bounds::{n_envelope, n_upper_derivative};
use crate::error::{domain, Result};
use crate::quad::integrate_lorentzian;
use crate::zerodata::ZeroTable;

/// A point s = σ + it with t split as `t_base + t_offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    sigma: f64,
    t_base: f64,
    t_offset: f64,
}

impl EvalPoint {
    pub fn new(sigma: f64, t: f64) -> Result<Self> {
        Self::with_base(sigma, 0.0, t)
    }

    pub fn with_base(sigma: f64, t_base: f64, t_offset: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma < 1.0) {
            return Err(domain("EvalPoint", format!("σ = {sigma} outside (0, 1)")));
        }
        if !(t_base.is_finite() && t_offset.is_finite()) {
            return Err(domain("EvalPoint", "height must be finite"));
        }
        Ok(EvalPoint { sigma, t_base, t_offset })
    }

    pub(crate) fn unchecked(sigma: f64, t_base: f64, t_offset: f64) -> Self {
        EvalPoint { sigma, t_base, t_offset }
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn t_base(&self) -> f64 {
        self.t_base
    }

    pub fn t_offset(&self) -> f64 {
        self.t_offset
    }

    pub fn t(&self) -> f64 {
        self.t_base + self.t_offset
    }

    /// The conjugate point σ − it.
    pub fn conjugate(&self) -> Self {
        EvalPoint { sigma: self.sigma, t_base: -self.t_base, t_offset: -self.t_offset }
    }

    fn minus_distance(&self, base: f64, offset: f64) -> f64 {
        (self.t_base - base) + (self.t_offset - offset)
    }

    fn plus_distance(&self, base: f64, offset: f64) -> f64 {
        (self.t_base + base) + (self.t_offset + offset)
    }
}

/// An assumed zero β̃ + iγ̃ off the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypotheticalZero {
    beta: f64,
    gamma: f64,
}

impl HypotheticalZero {
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !(beta > 0.5 && beta < 1.0) {
            return Err(domain("HypotheticalZero", format!("β = {beta} outside (1/2, 1)")));
        }
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(domain("HypotheticalZero", format!("γ = {gamma} must be positive")));
        }
        Ok(HypotheticalZero { beta, gamma })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// Compensated (Neumaier) summation.
pub fn neumaier_sum<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn lorentz(x: f64, d: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x / (x * x + d * d)
    }
}

/// Σ_k (σ−½)/((σ−½)² + (t−γ_k)²) + (σ−½)/((σ−½)² + (t+γ_k)²) over `k_range`.
///
/// Exactly 0 on σ = ½.
pub fn re_sum_critical(
    point: &EvalPoint,
    table: &ZeroTable,
    k_range: &RangeInclusive<u64>,
) -> Result<f64> {
    let offsets = table.slice(k_range)?;
    let x = point.sigma - 0.5;
    if x == 0.0 {
        return Ok(0.0);
    }
    let base = table.base_height();
    Ok(neumaier_sum(offsets.iter().flat_map(|&o| {
        [lorentz(x, point.minus_distance(base, o)), lorentz(x, point.plus_distance(base, o))]
    })))
}

/// (S₁, S₂) with S₁ = Σ x²/(x² + (t−γ)²), S₂ = Σ x²/(x² + (t+γ)²), x = σ − ½.
pub fn s1_s2(
    point: &EvalPoint,
    table: &ZeroTable,
    k_range: &RangeInclusive<u64>,
) -> Result<(f64, f64)> {
    let offsets = table.slice(k_range)?;
    let x = point.sigma - 0.5;
    let base = table.base_height();
    let s1 = neumaier_sum(offsets.iter().map(|&o| x * lorentz(x, point.minus_distance(base, o))));
    let s2 = neumaier_sum(offsets.iter().map(|&o| x * lorentz(x, point.plus_distance(base, o))));
    Ok((s1, s2))
}

/// The four-term block per hypothetical zero: numerators σ − β̃ and
/// σ − (1 − β̃), each against (t − γ̃)² and (t + γ̃)².
pub fn hypo_contribution(point: &EvalPoint, zeros: &[HypotheticalZero]) -> f64 {
    neumaier_sum(zeros.iter().flat_map(|z| {
        let near = point.minus_distance(z.gamma, 0.0);
        let far = point.plus_distance(z.gamma, 0.0);
        let x = point.sigma - z.beta;
        let y = point.sigma - (1.0 - z.beta);
        [lorentz(x, near), lorentz(x, far), lorentz(y, near), lorentz(y, far)]
    }))
}

/// Which conjugate kernel a sum runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// 1/(a² + b²(t − γ)²)
    Minus,
    /// 1/(a² + b²(t + γ)²)
    Plus,
}

/// Σ_k 1/(a² + b²(t ∓ γ_k)²) over `k_range`, t = `t_base + t_offset`.
pub fn kernel_sum(
    table: &ZeroTable,
    k_range: &RangeInclusive<u64>,
    t_base: f64,
    t_offset: f64,
    a: f64,
    b: f64,
    side: Side,
) -> Result<f64> {
    let offsets = table.slice(k_range)?;
    let base = table.base_height();
    let (a2, b2) = (a * a, b * b);
    Ok(neumaier_sum(offsets.iter().map(|&o| {
        let d = match side {
            Side::Minus => (t_base - base) + (t_offset - o),
            Side::Plus => (t_base + base) + (t_offset + o),
        };
        1.0 / (a2 + b2 * d * d)
    })))
}

/// Upper bound for Σ_{γ > T} 1/(w² + (γ − center)²), T > center + 1.
///
/// Partial summation against the counting envelope: the tail is at most
/// (N_up − N_low)(T)·f(T) + ∫_T^∞ N_up′(u) f(u) du, the integral taken by
/// quadrature with its error estimate added.
pub fn lorentz_tail_bound(center: f64, width: f64, t_cut: f64) -> Result<f64> {
    if !(t_cut > center + 1.0) {
        return Err(domain("lorentz_tail_bound", format!("T = {t_cut} must exceed center + 1")));
    }
    if !(width > 0.0) {
        return Err(domain("lorentz_tail_bound", "width must be positive"));
    }
    let env = n_envelope(t_cut)?;
    let d = t_cut - center;
    let boundary = (env.upper - env.lower) / (width * width + d * d);
    let q = integrate_lorentzian(
        |u: f64| n_upper_derivative(u).unwrap_or(0.0).max(0.0),
        center,
        width,
        1.0,
        t_cut,
        f64::INFINITY,
        0.0,
        1e-10,
    )?;
    Ok(boundary + q.value + q.abs_error)
}

/// Upper bound on the omitted part Σ_{γ > T} of `re_sum_critical`, both
/// conjugate kernels included. Requires T > |t| + 1.
pub fn truncation_tail_estimate(point: &EvalPoint, t_cut: f64) -> Result<f64> {
    let t = point.t();
    if !(t_cut > t.abs() + 1.0) {
        return Err(domain(
            "truncation_tail_estimate",
            format!("T = {t_cut} must exceed |t| + 1 = {}", t.abs() + 1.0),
        ));
    }
    let x = (point.sigma - 0.5).abs();
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(x * (lorentz_tail_bound(t, x, t_cut)? + lorentz_tail_bound(-t, x, t_cut)?))
}

/// Upper bound on Σ_{γ > T} 1/(a² + b²(t ∓ γ)²).
pub fn kernel_tail_estimate(t: f64, a: f64, b: f64, side: Side, t_cut: f64) -> Result<f64> {
    let center = match side {
        Side::Minus => t,
        Side::Plus => -t,
    };
    Ok(lorentz_tail_bound(center, a / b, t_cut)? / (b * b))
}
