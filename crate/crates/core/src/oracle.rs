//! Independent numerical checks for the closed-form bounds.

use std::f64::consts::TAU;

use crate::bounds::{n_envelope, n_upper_derivative, BoundParams, RH_VERIFIED_HEIGHT};
use crate::error::{domain, Error, Result};
use crate::quad::{integrate, integrate_lorentzian, Quadrature};
use crate::sums::neumaier_sum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: usize,
}

impl From<Quadrature> for QuadratureResult {
    fn from(q: Quadrature) -> Self {
        QuadratureResult {
            value: q.value,
            abs_error_estimate: q.abs_error,
            subdivisions: q.intervals.max(1),
        }
    }
}

fn check_tolerance(rel_tol: f64) -> Result<()> {
    if !(rel_tol > 1e-12 && rel_tol < 1e-2) {
        return Err(Error::InvalidTolerance(rel_tol));
    }
    Ok(())
}

fn log_over_two_pi(u: f64) -> f64 {
    (u / TAU).ln()
}

/// ∫_α^∞ log(u/2π)/(a² + b²(u − t)²) du, t > α.
pub fn quad_minus_kernel(t: f64, params: &BoundParams, rel_tol: f64) -> Result<QuadratureResult> {
    check_tolerance(rel_tol)?;
    if !(t > params.alpha) {
        return Err(domain("quad_minus_kernel", format!("t = {t} must exceed α")));
    }
    let (a, b) = params.kernels_at("quad_minus_kernel", t)?;
    integrate_lorentzian(log_over_two_pi, t, a, b, params.alpha, f64::INFINITY, 0.0, rel_tol)
        .map(Into::into)
}

/// ∫_α^∞ log(u/2π)/(a² + b²(u + t)²) du, t > α.
pub fn quad_plus_kernel(t: f64, params: &BoundParams, rel_tol: f64) -> Result<QuadratureResult> {
    check_tolerance(rel_tol)?;
    if !(t > params.alpha) {
        return Err(domain("quad_plus_kernel", format!("t = {t} must exceed α")));
    }
    let (a, b) = params.kernels_at("quad_plus_kernel", t)?;
    integrate_lorentzian(log_over_two_pi, -t, a, b, params.alpha, f64::INFINITY, 0.0, rel_tol)
        .map(Into::into)
}

/// Test hook: ∫_{t−M}^{t+M} du/(a² + b²(u − t)²) through the same
/// substitution as the kernels; equals (2/(ab))·atan(Mb/a).
pub fn quad_constant_kernel(
    t: f64,
    a: f64,
    b: f64,
    half_width: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    check_tolerance(rel_tol)?;
    integrate_lorentzian(|_| 1.0, t, a, b, t - half_width, t + half_width, 0.0, rel_tol)
        .map(Into::into)
}

/// Both sides of Σ_{n≤x} aₙ f(n) = A(x) f(x) − ∫₁ˣ A(u) f′(u) du.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSummation {
    pub lhs: f64,
    pub rhs: f64,
    /// Quadrature error estimate of the integral term.
    pub abs_error: f64,
}

/// Evaluates both sides with `a_seq[0]` as a₁. The integral is taken by
/// quadrature on each unit step of A.
pub fn partial_summation_check(
    a_seq: &[f64],
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    x: f64,
) -> Result<PartialSummation> {
    if !(x >= 1.0) {
        return Err(domain("partial_summation_check", format!("x = {x} below 1")));
    }
    let upto = (x.floor() as usize).min(a_seq.len());
    let lhs = neumaier_sum((1..=upto).map(|n| a_seq[n - 1] * f(n as f64)));
    let mut running = 0.0;
    let mut pieces = Vec::with_capacity(upto);
    let mut abs_error = 0.0;
    let mut n = 1usize;
    while (n as f64) < x {
        if n <= a_seq.len() {
            running += a_seq[n - 1];
        }
        let lo = n as f64;
        let hi = ((n + 1) as f64).min(x);
        let q = integrate(|u| running * df(u), lo, hi, 1e-15, 1e-13)?;
        pieces.push(q.value);
        abs_error += q.abs_error;
        n += 1;
    }
    let a_x = neumaier_sum(a_seq[..upto].iter().copied());
    let rhs = a_x * f(x) - neumaier_sum(pieces);
    Ok(PartialSummation { lhs, rhs, abs_error })
}

/// Spacing rule for synthetic ordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityMode {
    /// Gap 2π/log(γ/2π) at the current ordinate.
    RiemannVonMangoldt,
    /// Constant gap 2π/log(start/2π).
    Uniform,
}

impl std::str::FromStr for DensityMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "riemann_von_mangoldt" => Ok(DensityMode::RiemannVonMangoldt),
            "uniform" => Ok(DensityMode::Uniform),
            other => Err(format!("unknown density mode `{other}`")),
        }
    }
}

/// Strictly increasing ordinates from `start_height`; gaps are accumulated
/// as offsets and added to the start once, so rounding does not drift.
pub fn synth_zero_sequence(start_height: f64, count: usize, mode: DensityMode) -> Result<Vec<f64>> {
    if !(start_height > RH_VERIFIED_HEIGHT) {
        return Err(domain(
            "synth_zero_sequence",
            format!("start {start_height:e} must exceed 3e12"),
        ));
    }
    if count == 0 {
        return Err(domain("synth_zero_sequence", "count must be at least 1"));
    }
    let start_gap = TAU / (start_height / TAU).ln();
    let mut out = Vec::with_capacity(count);
    let mut offset = 0.0f64;
    for _ in 0..count {
        out.push(start_height + offset);
        offset += match mode {
            DensityMode::RiemannVonMangoldt => TAU / ((start_height + offset) / TAU).ln(),
            DensityMode::Uniform => start_gap,
        };
    }
    Ok(out)
}

/// Upper bound for Σ 1/(t + γ)² over a sequence continuing past `last`
/// with at most the counting envelope's density:
/// (N_up − N_low)(L)/(t + L)² + ∫_L^∞ N_up′(u)/(t + u)² du.
pub fn density_tail(t: f64, last: f64) -> Result<f64> {
    if !(t >= 0.0 && last > 0.0) {
        return Err(domain("density_tail", "requires t ≥ 0 and last > 0"));
    }
    let env = n_envelope(last)?;
    let s = t + last;
    // w = 1/(t + u) maps [L, ∞) onto (0, 1/(t + L)] with unit weight.
    let q = integrate(
        |w: f64| n_upper_derivative(1.0 / w - t).unwrap_or(0.0).max(0.0),
        0.0,
        1.0 / s,
        0.0,
        1e-10,
    )?;
    Ok((env.upper - env.lower) / (s * s) + q.value + q.abs_error)
}

/// Σ 1/(t + γ̃_k)² over the given ordinates plus [`density_tail`] past the last.
pub fn inverse_square_sum_with_tail(t: f64, ordinates: &[f64]) -> Result<f64> {
    let last = *ordinates.last().ok_or(Error::Empty)?;
    let direct = neumaier_sum(ordinates.iter().map(|&g| 1.0 / ((t + g) * (t + g))));
    Ok(direct + density_tail(t, last)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{integral_lower_minus, integral_lower_plus, n_main, tail_bound_hypothetical};

    #[test]
    fn tolerance_guard() {
        let p = BoundParams::default();
        for tol in [1.0, 1e-2, 1e-12, 0.0, f64::NAN] {
            assert!(matches!(quad_minus_kernel(1e3, &p, tol), Err(Error::InvalidTolerance(_))));
        }
    }

    #[test]
    fn kernels_dominate_bounds_at_1e3() {
        let p = BoundParams::default();
        let m = quad_minus_kernel(1e3, &p, 1e-10).unwrap();
        assert!(m.value > integral_lower_minus(1e3, &p).unwrap());
        assert!(m.abs_error_estimate < 1e-9 * m.value);
        let q = quad_plus_kernel(1e3, &p, 1e-10).unwrap();
        assert!(q.value >= integral_lower_plus(1e3, &p).unwrap());
    }

    #[test]
    fn minus_kernel_reference_value() {
        // mpmath quad of the same integral at t = 1e4.
        let p = BoundParams::default();
        let m = quad_minus_kernel(1e4, &p, 1e-11).unwrap();
        assert!((m.value - MINUS_1E4).abs() < 1e-9 * MINUS_1E4, "{}", m.value);
    }
    const MINUS_1E4: f64 = 2.514_623_610_020_375;

    #[test]
    fn plus_kernel_decreasing() {
        let p = BoundParams::default();
        let v: Vec<f64> = [1e2, 1e3, 1e4]
            .iter()
            .map(|&t| quad_plus_kernel(t, &p, 1e-10).unwrap().value)
            .collect();
        assert!(v[0] > v[1] && v[1] > v[2]);
        assert!(matches!(quad_plus_kernel(p.alpha / 2.0, &p, 1e-8), Err(Error::Domain { .. })));
    }

    #[test]
    fn constant_kernel_closed_form() {
        for (a, b, m) in [(1.0, 1.0, 3.0), (3.7, 3.7, 200.0), (0.5, 2.0, 1e6)] {
            let q = quad_constant_kernel(1e3, a, b, m, 1e-11).unwrap();
            let exact = 2.0 / (a * b) * (m * b / a).atan();
            assert!((q.value - exact).abs() < 1e-10, "{} vs {exact}", q.value);
        }
    }

    #[test]
    fn halving_tolerance_is_consistent() {
        let p = BoundParams::default();
        for t in [1e2, 1e5, 1e8] {
            let mut prev = quad_minus_kernel(t, &p, 1e-4).unwrap();
            for tol in [5e-5, 1e-6, 1e-8, 1e-10] {
                let cur = quad_minus_kernel(t, &p, tol).unwrap();
                assert!(
                    (cur.value - prev.value).abs()
                        <= cur.abs_error_estimate + prev.abs_error_estimate + 1e-14
                );
                prev = cur;
            }
        }
    }

    #[test]
    fn partial_summation_examples() {
        let r = partial_summation_check(&[1.0; 5], |t| t, |_| 1.0, 5.0).unwrap();
        assert!((r.lhs - 15.0).abs() < 1e-12 && (r.rhs - 15.0).abs() < 1e-12);

        let r = partial_summation_check(&[1.0; 10], |t| 1.0 / (t * t), |t| -2.0 / (t * t * t), 10.0)
            .unwrap();
        let direct: f64 = (1..=10).map(|n| 1.0 / (n * n) as f64).sum();
        assert!((r.lhs - direct).abs() < 1e-14);
        assert!((r.rhs - direct).abs() < 1e-12);
    }

    #[test]
    fn partial_summation_random_log() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let a: Vec<f64> = (0..200).map(|_| rng.gen::<f64>()).collect();
        let r = partial_summation_check(&a, f64::ln, |t| 1.0 / t, 187.5).unwrap();
        assert!((r.lhs - r.rhs).abs() < 1e-8);
        assert!((r.lhs - r.rhs).abs() <= r.abs_error + 1e-11);
    }

    #[test]
    fn synthetic_sequences() {
        assert_eq!(synth_zero_sequence(3.5e12, 1, DensityMode::Uniform).unwrap(), vec![3.5e12]);
        assert!(synth_zero_sequence(1e10, 5, DensityMode::Uniform).is_err());
        let seq = synth_zero_sequence(3.1e12, 100_000, DensityMode::RiemannVonMangoldt).unwrap();
        assert!(seq.windows(2).all(|w| w[1] > w[0]));
        let span = n_main(*seq.last().unwrap()).unwrap() - n_main(seq[0]).unwrap();
        assert!(((seq.len() - 1) as f64 - span).abs() < 0.01 * span);
    }

    #[test]
    fn tail_bound_on_synthetic_sequence() {
        let seq = synth_zero_sequence(3.001e12, 10_000, DensityMode::RiemannVonMangoldt).unwrap();
        for t in [0.0, 1.0, 1e6, 1e12] {
            let s = inverse_square_sum_with_tail(t, &seq).unwrap();
            assert!(s <= tail_bound_hypothetical(t, seq[0]).unwrap());
        }
    }
}
