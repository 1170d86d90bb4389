//! Adaptive Gauss–Kronrod (G7/K15) quadrature.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_4;

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

pub const MAX_INTERVALS: usize = 1 << 16;

/// Integral estimate with its error bound and work counters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_error: f64,
    pub intervals: usize,
    pub evaluations: usize,
}

/// One K15 panel on `[a, b]`: (Kronrod value, |K15 − G7|).
pub fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        k += WGK[j] * pair;
        if j % 2 == 1 {
            g += WG[j / 2] * pair;
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn sum_sorted(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|p, q| p.abs().total_cmp(&q.abs()));
    xs.into_iter().sum()
}

/// Adaptive integration of `f` over the finite interval `[a, b]`.
///
/// Bisects the panel with the largest error until the summed error is below
/// `max(abs_tol, rel_tol·|I|)`. Panels narrower than the local floating-point
/// resolution are frozen; if the target then lies below the roundoff floor
/// (64ε·Σ|panel|) the floor is accepted. Exceeding [`MAX_INTERVALS`] gives
/// [`Error::NoConvergence`].
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Quadrature> {
    if a == b {
        return Ok(Quadrature { value: 0.0, abs_error: 0.0, intervals: 0, evaluations: 0 });
    }
    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Panel> = Vec::new();
    let (v, e) = gk15(&mut f, a, b);
    let mut evaluations = 15;
    let mut value = v;
    let mut error = e;
    let mut magnitude = v.abs();
    heap.push(Panel { a, b, value: v, error: e });
    loop {
        let target = abs_tol.max(rel_tol * value.abs());
        let floor = 64.0 * f64::EPSILON * magnitude;
        if error <= target || error <= floor {
            break;
        }
        let Some(worst) = heap.pop() else {
            break;
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b)
            || (worst.b - worst.a) <= 1e3 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE)
        {
            frozen.push(worst);
            continue;
        }
        if heap.len() + frozen.len() + 2 > MAX_INTERVALS {
            heap.push(worst);
            let best = sum_sorted(heap.iter().chain(&frozen).map(|p| p.value).collect());
            let abs_error = heap.iter().chain(&frozen).map(|p| p.error).sum();
            return Err(Error::NoConvergence { best, abs_error });
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid);
        let (v2, e2) = gk15(&mut f, mid, worst.b);
        evaluations += 30;
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        magnitude += v1.abs() + v2.abs() - worst.value.abs();
        heap.push(Panel { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, error: e2 });
    }
    let panels: Vec<Panel> = heap.into_iter().chain(frozen).collect();
    let value = sum_sorted(panels.iter().map(|p| p.value).collect());
    let abs_error = sum_sorted(panels.iter().map(|p| p.error).collect());
    if !value.is_finite() {
        return Err(Error::NoConvergence { best: value, abs_error });
    }
    Ok(Quadrature { value, abs_error, intervals: panels.len(), evaluations })
}

/// ∫ F(u)/(a² + b²(u − center)²) du over `[lower, upper]` (`upper` may be +∞).
///
/// With x = b(u − center)/a the measure becomes dx/(a·b·(1 + x²)); |x| ≤ 1 is
/// mapped by x = tan φ and each tail by x = ±cot ψ, so every piece is a finite
/// interval of length at most π/4 with a bounded weight.
#[allow(clippy::too_many_arguments)]
pub fn integrate_lorentzian<F: FnMut(f64) -> f64>(
    mut f: F,
    center: f64,
    a: f64,
    b: f64,
    lower: f64,
    upper: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Quadrature> {
    let scale = a / b;
    let ab = a * b;
    let x_lo = (lower - center) / scale;
    let x_hi = (upper - center) / scale;
    let mut total = Quadrature { value: 0.0, abs_error: 0.0, intervals: 0, evaluations: 0 };
    let mut parts: Vec<Quadrature> = Vec::with_capacity(3);

    // Pieces share the absolute tolerance; the relative one applies per piece.
    let piece_abs = abs_tol / 3.0;

    // Left tail x ≤ −1: x = −cot ψ.
    if x_lo < -1.0 {
        let psi_lo = (-1.0 / x_lo).atan();
        let psi_hi = if x_hi < -1.0 { (-1.0 / x_hi).atan() } else { FRAC_PI_4 };
        parts.push(integrate(
            |psi: f64| f(center - scale * psi.cos() / psi.sin()) / ab,
            psi_lo,
            psi_hi,
            piece_abs,
            rel_tol,
        )?);
    }
    // Middle |x| ≤ 1: x = tan φ.
    let m_lo = x_lo.max(-1.0);
    let m_hi = x_hi.min(1.0);
    if m_lo < m_hi {
        parts.push(integrate(
            |phi: f64| f(center + scale * phi.tan()) / ab,
            m_lo.atan(),
            m_hi.atan(),
            piece_abs,
            rel_tol,
        )?);
    }
    // Right tail x ≥ 1: x = cot ψ, ψ ∈ [atan(1/x_hi), atan(1/x_lo)].
    if x_hi > 1.0 {
        let psi_lo = if x_hi.is_infinite() { 0.0 } else { (1.0 / x_hi).atan() };
        let psi_hi = if x_lo > 1.0 { (1.0 / x_lo).atan() } else { FRAC_PI_4 };
        parts.push(integrate(
            |psi: f64| f(center + scale * psi.cos() / psi.sin()) / ab,
            psi_lo,
            psi_hi,
            piece_abs,
            rel_tol,
        )?);
    }
    for p in &parts {
        total.abs_error += p.abs_error;
        total.intervals += p.intervals;
        total.evaluations += p.evaluations;
    }
    total.value = sum_sorted(parts.iter().map(|p| p.value).collect());
    Ok(total)
}
