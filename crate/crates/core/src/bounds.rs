//! Closed-form explicit bounds.
//!
//! Every function here is a pure map from its arguments to an `f64`; the
//! numerical constants are the published decimal literals. Preconditions are
//! checked and reported as [`Error::Domain`].

use std::f64::consts::{E, PI, TAU};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::root;
use crate::GAMMA1;

/// Positive weight function of the height `t` (the a(t), b(t) of the kernels).
#[derive(Clone)]
pub struct Kernel {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Kernel {
    /// t ↦ √(log t).
    pub fn sqrt_log() -> Self {
        Kernel::new("sqrt(log t)", |t: f64| t.ln().sqrt())
    }

    pub fn new(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Kernel { name: name.into(), f: Arc::new(f) }
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.f)(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kernel({})", self.name)
    }
}

/// Constants shared by the bounds: the critical-line fraction `c`, the lowest
/// ordinate, the integral lower limit and the two kernels.
#[derive(Debug, Clone)]
pub struct BoundParams {
    pub c: f64,
    pub gamma1: f64,
    pub alpha: f64,
    pub kernel_a: Kernel,
    pub kernel_b: Kernel,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams {
            c: 1.0,
            gamma1: GAMMA1,
            alpha: GAMMA1,
            kernel_a: Kernel::sqrt_log(),
            kernel_b: Kernel::sqrt_log(),
        }
    }
}

impl BoundParams {
    pub fn new(c: f64, alpha: f64, kernel_a: Kernel, kernel_b: Kernel) -> Result<Self> {
        let params = BoundParams { c, gamma1: GAMMA1, alpha, kernel_a, kernel_b };
        params.validate()?;
        Ok(params)
    }

    pub fn with_c(c: f64) -> Result<Self> {
        let params = BoundParams { c, ..Default::default() };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c <= 1.0) {
            return Err(domain("BoundParams", format!("c = {} outside (0, 1]", self.c)));
        }
        if !(self.alpha > 1.0) {
            return Err(domain("BoundParams", format!("alpha = {} must exceed 1", self.alpha)));
        }
        Ok(())
    }

    /// `(a(t), b(t))`, both required positive.
    pub fn kernels_at(&self, op: &'static str, t: f64) -> Result<(f64, f64)> {
        let a = self.kernel_a.eval(t);
        let b = self.kernel_b.eval(t);
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(domain(op, format!("kernels not positive at t = {t}: a = {a}, b = {b}")));
        }
        Ok((a, b))
    }
}

/// Which reading of the third line of ε(t) to use.
///
/// The printed formula carries `(1 + log t)/2` where the integral bound it
/// comes from has `(1 + log 2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EpsilonVariant {
    AsPrinted,
    #[default]
    LemmaConsistent,
}

impl EpsilonVariant {
    pub const ALL: [EpsilonVariant; 2] = [EpsilonVariant::LemmaConsistent, EpsilonVariant::AsPrinted];

    pub fn as_str(self) -> &'static str {
        match self {
            EpsilonVariant::AsPrinted => "as_printed",
            EpsilonVariant::LemmaConsistent => "lemma_consistent",
        }
    }
}

impl fmt::Display for EpsilonVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EpsilonVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "as_printed" => Ok(EpsilonVariant::AsPrinted),
            "lemma_consistent" => Ok(EpsilonVariant::LemmaConsistent),
            other => Err(format!("unknown epsilon variant `{other}`")),
        }
    }
}

// Zero-counting envelope.

fn require_at_least_e(op: &'static str, t: f64) -> Result<()> {
    if !(t >= E) {
        return Err(domain(op, format!("T = {t} below e")));
    }
    Ok(())
}

/// T/(2π)·log(T/(2πe)) + 7/8.
pub fn n_main(t: f64) -> Result<f64> {
    require_at_least_e("n_main", t)?;
    Ok(t / TAU * (t / (TAU * E)).ln() + 7.0 / 8.0)
}

/// 0.110·log T + 0.290·log log T + 2.290 + 25/(48πT).
pub fn n_error(t: f64) -> Result<f64> {
    require_at_least_e("n_error", t)?;
    let l = t.ln();
    Ok(0.110 * l + 0.290 * l.ln() + 2.290 + 25.0 / (48.0 * PI * t))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub lower: f64,
    pub upper: f64,
}

impl Envelope {
    pub fn contains(&self, n: f64) -> bool {
        self.lower <= n && n <= self.upper
    }
}

/// Explicit lower and upper bounds on N(T), T ≥ e.
pub fn n_envelope(t: f64) -> Result<Envelope> {
    let main = n_main(t)?;
    let err = n_error(t)?;
    Ok(Envelope { lower: main - err, upper: main + err })
}

/// d/dT of the upper envelope.
pub fn n_upper_derivative(t: f64) -> Result<f64> {
    require_at_least_e("n_upper_derivative", t)?;
    let l = t.ln();
    Ok((t / TAU).ln() / TAU + 0.110 / t + 0.290 / (t * l) - 25.0 / (48.0 * PI * t * t))
}

/// d/dT of the lower envelope.
pub fn n_lower_derivative(t: f64) -> Result<f64> {
    require_at_least_e("n_lower_derivative", t)?;
    let l = t.ln();
    Ok((t / TAU).ln() / TAU - 0.110 / t - 0.290 / (t * l) + 25.0 / (48.0 * PI * t * t))
}

/// u·log u/(2π), the simplified majorant of the upper envelope used for
/// the off-line tail (it dominates the envelope once u > 8.032).
pub fn n_upper_simple_majorant(u: f64) -> f64 {
    u * u.ln() / TAU
}

// Lambert-W constant.

/// log(1 − x) + 2x; positive on (0, a), zero at 0 and at a.
pub fn log_linear_gap(x: f64) -> f64 {
    (-x).ln_1p() + 2.0 * x
}

/// a = 1 + W₀(−2e⁻²)/2 ≈ 0.7968, from the principal-branch root of
/// w·eʷ = −2e⁻² on (−1, 0).
pub fn lambert_a() -> f64 {
    let target = -2.0 * (-2.0f64).exp();
    let w = root::brent(|w: f64| w * w.exp() - target, -1.0, 0.0, 1e-16, 200)
        .expect("w e^w + 2e^-2 changes sign on (-1, 0)");
    1.0 + 0.5 * w
}

// Integral bounds.

/// The deficit g(t) of the minus-kernel integral bound, t > 2α.
pub fn g_t(t: f64, params: &BoundParams) -> Result<f64> {
    let alpha = params.alpha;
    if !(t > 2.0 * alpha) {
        return Err(domain("g_t", format!("t = {t} must exceed 2α = {}", 2.0 * alpha)));
    }
    let (a, b) = params.kernels_at("g_t", t)?;
    let (a2, b2) = (a * a, b * b);
    let ratio = alpha / t;
    let first = (t / TAU).ln() / (b2 * (t - alpha));
    let second = (t * t * b2 / (4.0 * a2)).ln_1p() / (t * b2);
    let third = (ratio * ratio.ln() - ratio + (1.0 + 2f64.ln()) / 2.0)
        / (a2 + b2 * (t - alpha).powi(2));
    Ok(first + second + third)
}

/// Lower bound for ∫_α^∞ log(u/2π)/(a² + b²(u − t)²) du:
/// π/(a·b)·log(t/2π) − g(t).
pub fn integral_lower_minus(t: f64, params: &BoundParams) -> Result<f64> {
    let g = g_t(t, params)?;
    let (a, b) = params.kernels_at("integral_lower_minus", t)?;
    if !((t - params.alpha) * b > a) {
        return Err(domain("integral_lower_minus", "requires (t − α)·b(t) > a(t)"));
    }
    Ok(PI / (a * b) * (t / TAU).ln() - g)
}

/// Lower bound for ∫_α^∞ log(u/2π)/(a² + b²(u + t)²) du:
/// log(t/2π)/(4t·b²) − α·log(α/2π)/(t²·b²).
pub fn integral_lower_plus(t: f64, params: &BoundParams) -> Result<f64> {
    let alpha = params.alpha;
    if !(t > alpha && alpha > 1.0) {
        return Err(domain("integral_lower_plus", format!("requires t > α > 1, got t = {t}")));
    }
    let (a, b) = params.kernels_at("integral_lower_plus", t)?;
    if !(t * b > a) {
        return Err(domain("integral_lower_plus", "requires t·b(t) > a(t)"));
    }
    let b2 = b * b;
    Ok((t / TAU).ln() / (4.0 * t * b2) - alpha / (t * t * b2) * (alpha / TAU).ln())
}

// Sum bounds.

fn require_above_gamma1(op: &'static str, t: f64, params: &BoundParams) -> Result<()> {
    if !(t > params.gamma1) {
        return Err(domain(op, format!("t = {t} must exceed γ₁")));
    }
    Ok(())
}

/// Lower bound for Σ_{γ>0} 1/(a² + b²(t − γ)²), given the minus-kernel
/// integral (or a lower bound for it).
pub fn sum_lower_minus(t: f64, params: &BoundParams, integral_value: f64) -> Result<f64> {
    require_above_gamma1("sum_lower_minus", t, params)?;
    let (a, b) = params.kernels_at("sum_lower_minus", t)?;
    let a2 = a * a;
    let l = t.ln();
    Ok(integral_value / TAU
        - (0.22 * l + 0.58 * l.ln() + 4.58) / a2
        - 0.166 / (t * a2) * (1.0 + 2.411 * a / b))
}

/// Lower bound for Σ_{γ>0} 1/(a² + b²(t + γ)²), given the plus-kernel
/// integral (or a lower bound for it).
pub fn sum_lower_plus(t: f64, params: &BoundParams, integral_value: f64) -> Result<f64> {
    require_above_gamma1("sum_lower_plus", t, params)?;
    let (a, b) = params.kernels_at("sum_lower_plus", t)?;
    let g1 = params.gamma1;
    Ok(integral_value / TAU - 3.811 / (a * a + b * b * (g1 + t).powi(2)) - 0.045 / (a * b))
}

// ε(t) and the main lower bound.

/// The explicit error term ε(t), t > 2γ₁, with √(log t) kernels folded in.
pub fn epsilon_t(t: f64, variant: EpsilonVariant) -> Result<f64> {
    let g1 = GAMMA1;
    if !(t > 2.0 * g1) {
        return Err(domain("epsilon_t", format!("t = {t} must exceed 2γ₁")));
    }
    let l = t.ln();
    let ll = l.ln();
    let log_t_2pi = (t / TAU).ln();

    let line1 = TAU.ln() / (TAU * l) + 0.58 * ll / l + 4.58 / l + 0.566 / (t * l);

    let line2 = -log_t_2pi / (4.0 * t * l)
        + g1 / (t * t * l) * (g1 / TAU).ln()
        + 3.811 / ((1.0 + t * (g1 + t).powi(2)) * l)
        + 0.045 / l;

    let inner = match variant {
        EpsilonVariant::AsPrinted => (1.0 + l) / 2.0,
        EpsilonVariant::LemmaConsistent => (1.0 + 2f64.ln()) / 2.0,
    };
    let ratio = g1 / t;
    let line3 = (log_t_2pi / ((t - g1) * l)
        + (t * t / 4.0).ln_1p() / (t * l)
        + (ratio * ratio.ln() - ratio + inner) / ((1.0 + (t - g1).powi(2)) * l))
        / TAU;

    Ok(line1 + line2 + line3)
}

/// 0.28·c/(σ − 1/2): the idealized bound with ε(t) dropped.
pub fn idealized_lower_bound(sigma: f64, c: f64) -> f64 {
    0.28 * c / (sigma - 0.5)
}

/// (0.28 − ε(t))·c/(σ − 1/2) on 1/2 + 1/√(log t) < σ < 1, for t past the
/// sign change of 0.28 − ε(t).
pub fn main_lower_bound(
    sigma: f64,
    t: f64,
    params: &BoundParams,
    variant: EpsilonVariant,
) -> Result<f64> {
    if !(t > E) {
        return Err(domain("main_lower_bound", format!("t = {t} must exceed e")));
    }
    let edge = 0.5 + 1.0 / t.ln().sqrt();
    if !(sigma > edge && sigma < 1.0) {
        return Err(domain(
            "main_lower_bound",
            format!("σ = {sigma} outside ({edge}, 1) at t = {t}"),
        ));
    }
    let eps = epsilon_t(t, variant)?;
    if !(0.28 - eps > 0.0) {
        return Err(domain("main_lower_bound", format!("0.28 − ε(t) ≤ 0 at t = {t}")));
    }
    Ok((0.28 - eps) * params.c / (sigma - 0.5))
}

/// Default search window for the sign change of 0.28 − ε(t).
pub const THRESHOLD_WINDOW: (f64, f64) = (1e3, 1e14);
const THRESHOLD_SCAN_FACTOR: f64 = 1.1;
const THRESHOLD_REL_TOL: f64 = 1e-6;

/// Root of 0.28 − ε(t) with the scan that certifies it is the only one.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    pub variant: EpsilonVariant,
    pub root: f64,
    /// Scan bracket `[t_k, t_{k+1}]` that holds the sign change.
    pub bracket: (f64, f64),
    pub scan_points: usize,
    pub window: (f64, f64),
}

pub fn find_threshold(variant: EpsilonVariant) -> Result<Threshold> {
    find_threshold_in(variant, THRESHOLD_WINDOW.0, THRESHOLD_WINDOW.1)
}

/// Scans `[lo, hi]` geometrically (factor 1.1), requires exactly one sign
/// change of 0.28 − ε(t), then bisects it to relative width 10⁻⁶.
/// Scan points outside the domain of ε are skipped.
pub fn find_threshold_in(variant: EpsilonVariant, lo: f64, hi: f64) -> Result<Threshold> {
    if !(lo > 0.0 && hi > lo) {
        return Err(domain("find_threshold", format!("bad window [{lo}, {hi}]")));
    }
    let margin = |t: f64| epsilon_t(t, variant).map(|e| 0.28 - e);
    let mut grid = Vec::new();
    let mut t = lo;
    while t < hi {
        grid.push(t);
        t *= THRESHOLD_SCAN_FACTOR;
    }
    grid.push(hi);
    let samples: Vec<(f64, f64)> =
        grid.iter().filter_map(|&t| margin(t).ok().map(|m| (t, m))).collect();
    let changes: Vec<usize> = samples
        .windows(2)
        .enumerate()
        .filter(|(_, w)| (w[0].1 > 0.0) != (w[1].1 > 0.0))
        .map(|(i, _)| i)
        .collect();
    match changes.len() {
        0 => Err(Error::NoSignChange { lo, hi }),
        1 => {
            let (a, b) = (samples[changes[0]].0, samples[changes[0] + 1].0);
            let f = |t: f64| margin(t).expect("bracket lies inside the domain of ε");
            let root = root::bisect_relative(f, a, b, THRESHOLD_REL_TOL);
            Ok(Threshold {
                variant,
                root,
                bracket: (a, b),
                scan_points: samples.len(),
                window: (lo, hi),
            })
        }
        count => Err(Error::MultipleSignChanges { count, lo, hi }),
    }
}

// Main terms of A(t) and B(t) (correction terms ε₁, ε₂ omitted).

/// 0.12·log(t/2π) − 2.32·log log t − 18.432.
pub fn a_t_bound(t: f64) -> Result<f64> {
    if !(t > E) {
        return Err(domain("a_t_bound", format!("t = {t} must exceed e")));
    }
    Ok(0.12 * (t / TAU).ln() - 2.32 * t.ln().ln() - 18.432)
}

/// 0.49·log(t/2π) + 0.58·log log t − 4.603.
pub fn b_t_bound(t: f64) -> Result<f64> {
    if !(t > E) {
        return Err(domain("b_t_bound", format!("t = {t} must exceed e")));
    }
    Ok(0.49 * (t / TAU).ln() + 0.58 * t.ln().ln() - 4.603)
}

/// Height up to which zeta zeros are known to lie on the critical line.
pub const RH_VERIFIED_HEIGHT: f64 = 3e12;

/// Upper bound (1/π)·(1 + log(t + γ̃₁))/(t + γ̃₁) for Σ 1/(t + γ̃_k)² over
/// off-line zeros above γ̃₁ > 3·10¹².
///
/// Accepts t = 0 as the continuous endpoint.
pub fn tail_bound_hypothetical(t: f64, gamma_tilde_1: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(domain("tail_bound_hypothetical", format!("t = {t} must be nonnegative")));
    }
    if !(gamma_tilde_1 > RH_VERIFIED_HEIGHT) {
        return Err(domain(
            "tail_bound_hypothetical",
            format!("γ̃₁ = {gamma_tilde_1:e} must exceed 3e12"),
        ));
    }
    let s = t + gamma_tilde_1;
    Ok((1.0 + s.ln()) / (PI * s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn n_main_at_two_pi_e() {
        assert!(close(n_main(TAU * E).unwrap(), 7.0 / 8.0, 1e-14));
    }

    #[test]
    fn n_main_at_100() {
        // 100/(2π)·log(100/(2πe)) + 7/8, evaluated with mpmath at 30 digits.
        assert!(close(n_main(100.0).unwrap(), 29.002_343_587_325_35, 1e-13));
    }

    #[test]
    fn n_main_below_e() {
        assert!(matches!(n_main(2.0), Err(Error::Domain { .. })));
        assert!(n_envelope(2.0).is_err());
    }

    #[test]
    fn envelope_at_two_pi_e() {
        let t = TAU * E;
        let width = 0.110 * t.ln() + 0.290 * t.ln().ln() + 2.290 + 25.0 / (48.0 * PI * t);
        let env = n_envelope(t).unwrap();
        assert!(close(env.lower, 7.0 / 8.0 - width, 1e-14));
        assert!(close(env.upper, 7.0 / 8.0 + width, 1e-14));
    }

    #[test]
    fn envelope_width_at_1e4() {
        let env = n_envelope(1e4).unwrap();
        let l = 1e4f64.ln();
        let bound = 2.0 * (0.110 * l + 0.290 * l.ln() + 2.290 + 1e-3);
        assert!(env.upper - env.lower < bound);
        assert!(env.lower <= n_main(1e4).unwrap() && n_main(1e4).unwrap() <= env.upper);
    }

    #[test]
    fn envelope_derivatives_match_finite_differences() {
        for t in [10.0, 1e3, 1e6] {
            let h = t * 1e-6;
            let up = (n_envelope(t + h).unwrap().upper - n_envelope(t - h).unwrap().upper) / (2.0 * h);
            let lo = (n_envelope(t + h).unwrap().lower - n_envelope(t - h).unwrap().lower) / (2.0 * h);
            assert!(close(n_upper_derivative(t).unwrap(), up, 1e-6));
            assert!(close(n_lower_derivative(t).unwrap(), lo, 1e-6));
        }
    }

    #[test]
    fn lambert_constant() {
        let a = lambert_a();
        // 1 + W₀(−2/e²)/2 (mpmath lambertw).
        assert!((a - 0.796_812_130_020_02).abs() < 1e-12, "{a}");
        assert!(log_linear_gap(a).abs() < 1e-10);
        assert_eq!(log_linear_gap(0.0), 0.0);
    }

    #[test]
    fn g_reference_values() {
        let p = BoundParams::default();
        // Value just above 2α, evaluated independently with mpmath.
        assert!(close(g_t(28.27, &p).unwrap(), 0.087_962_866_924_978_1, 1e-12));
        assert!(matches!(g_t(28.0, &p), Err(Error::Domain { .. })));
    }

    #[test]
    fn integral_minus_simplifies_for_sqrt_log() {
        let p = BoundParams::default();
        let t = 1e6;
        let want = PI * (t / TAU).ln() / t.ln() - g_t(t, &p).unwrap();
        assert!(close(integral_lower_minus(t, &p).unwrap(), want, 1e-14));
        assert!(integral_lower_minus(20.0, &p).is_err());
    }

    #[test]
    fn integral_plus_domain_and_sign() {
        let p = BoundParams::default();
        assert!(integral_lower_plus(p.alpha, &p).is_err());
        let mut t = 100.0;
        while t < 1e9 {
            assert!(integral_lower_plus(t, &p).unwrap() > 0.0, "t = {t}");
            t *= 1.3;
        }
    }

    #[test]
    fn sum_minus_reproduces_proof_chain() {
        // Fed the integral bound, the minus-sum bound collapses to
        // 0.28 − log 2π/(2 log t) − g/(2π) − 0.58 loglog t/log t − 4.58/log t
        //   − 0.166·3.411/(t log t).
        let p = BoundParams::default();
        for t in [1e3_f64, 1e6, 1e10] {
            let l: f64 = t.ln();
            let g = g_t(t, &p).unwrap();
            let chain = 0.28 - TAU.ln() / (2.0 * l) - g / TAU - 0.58 * l.ln() / l - 4.58 / l
                - 0.166 * 3.411 / (t * l);
            let got = sum_lower_minus(t, &p, integral_lower_minus(t, &p).unwrap()).unwrap();
            assert!((got - chain).abs() < 1e-14, "t = {t}: {got} vs {chain}");
        }
        assert!(sum_lower_minus(10.0, &p, 0.0).is_err());
    }

    #[test]
    fn sum_plus_denominator_for_sqrt_log() {
        let p = BoundParams::default();
        let t: f64 = 1e4;
        let l = t.ln();
        let want = 1.0 / TAU - 3.811 / (l * (1.0 + (GAMMA1 + t).powi(2))) - 0.045 / l;
        assert!(close(sum_lower_plus(t, &p, 1.0).unwrap(), want, 1e-14));
        assert!(sum_lower_plus(10.0, &p, 1.0).is_err());
    }

    #[test]
    fn epsilon_domain_and_decay() {
        assert!(epsilon_t(20.0, EpsilonVariant::LemmaConsistent).is_err());
        for v in EpsilonVariant::ALL {
            let e10 = epsilon_t(1e10, v).unwrap();
            let e12 = epsilon_t(1e12, v).unwrap();
            let e15 = epsilon_t(1e15, v).unwrap();
            assert!(e15 < e12 && e12 < e10);
        }
    }

    #[test]
    fn epsilon_reference_values() {
        // Direct evaluation of the three-line formula with mpmath (30 digits).
        let cases = [
            (1e3, 0.874_458_876_850_320_6, 0.874_458_950_510_259_3),
            (1e4, 0.673_759_875_802_968_9, 0.673_759_876_540_940_3),
            (1e6, 0.466_176_777_050_439_3, 0.466_176_777_050_514_9),
        ];
        for (t, lemma, printed) in cases {
            assert!(close(epsilon_t(t, EpsilonVariant::LemmaConsistent).unwrap(), lemma, 1e-12));
            assert!(close(epsilon_t(t, EpsilonVariant::AsPrinted).unwrap(), printed, 1e-12));
        }
    }

    #[test]
    fn threshold_near_3_11e10() {
        for v in EpsilonVariant::ALL {
            let th = find_threshold(v).unwrap();
            // mpmath root: 3.10649127627766e10 for both variants.
            assert!(close(th.root, 3.106_491_276_277_66e10, 2e-6), "{v}: {}", th.root);
            assert!(0.28 - epsilon_t(2.0 * th.root, v).unwrap() > 0.0);
            assert!(0.28 - epsilon_t(th.root / 2.0, v).unwrap() < 0.0);
        }
    }

    #[test]
    fn threshold_window_without_crossing() {
        assert!(matches!(
            find_threshold_in(EpsilonVariant::LemmaConsistent, 10.0, 20.0),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            find_threshold_in(EpsilonVariant::LemmaConsistent, 1e12, 1e14),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn main_bound_behaviour() {
        let p = BoundParams::default();
        let v = EpsilonVariant::LemmaConsistent;
        let t: f64 = 1e12;
        let edge = 0.5 + 1.0 / t.ln().sqrt();
        let near = main_lower_bound(edge + 1e-9, t, &p, v).unwrap();
        let limit = (0.28 - epsilon_t(t, v).unwrap()) * t.ln().sqrt();
        assert!(close(near, limit, 1e-6));
        assert!(main_lower_bound(0.5, t, &p, v).is_err());
        assert!(main_lower_bound(1.0, t, &p, v).is_err());
        assert!(main_lower_bound(0.9, 1e6, &p, v).is_err());
        assert!(close(idealized_lower_bound(0.7, 1.0), 1.4, 1e-14));
    }

    #[test]
    fn a_and_b_main_terms() {
        // Root of the A main term, mpmath: 1.98311501e114, just under 1.984e114.
        assert!(a_t_bound(1.984e114).unwrap() > 0.0);
        assert!(a_t_bound(1.983e114).unwrap() < 0.0);
        // Without ε₂ the B main term is negative near 14.635 and turns
        // positive at t ≈ 5852.087 (mpmath).
        assert!(b_t_bound(14.636).unwrap() < 0.0);
        assert!(b_t_bound(5852.0).unwrap() < 0.0 && b_t_bound(5852.2).unwrap() > 0.0);
        assert!(a_t_bound(2.0).is_err() && b_t_bound(2.0).is_err());
    }

    #[test]
    fn tail_bound_limits() {
        let g = 3e12 + 1.0;
        assert!(close(tail_bound_hypothetical(0.0, g).unwrap(), (1.0 + g.ln()) / (PI * g), 1e-15));
        assert!(tail_bound_hypothetical(1e-300, g).is_ok());
        assert!(tail_bound_hypothetical(1.0, 1e10).is_err());
        assert!(tail_bound_hypothetical(-1.0, g).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(BoundParams::with_c(0.0).is_err());
        assert!(BoundParams::with_c(1.5).is_err());
        assert!(BoundParams::with_c(5.0 / 12.0).is_ok());
        assert!(BoundParams::new(1.0, 1.0, Kernel::sqrt_log(), Kernel::sqrt_log()).is_err());
    }

    #[test]
    fn variant_round_trip() {
        for v in EpsilonVariant::ALL {
            assert_eq!(v.as_str().parse::<EpsilonVariant>().unwrap(), v);
        }
        assert!("other".parse::<EpsilonVariant>().is_err());
    }
}
