//! The check suite behind `xipos check-lemmas`.

use xipos::bounds::{
    g_t, integral_lower_minus, integral_lower_plus, lambert_a, log_linear_gap, n_envelope,
    n_upper_simple_majorant, sum_lower_minus, sum_lower_plus, tail_bound_hypothetical,
};
use xipos::oracle::{
    inverse_square_sum_with_tail, quad_minus_kernel, quad_plus_kernel, synth_zero_sequence,
    DensityMode,
};
use xipos::sums::{kernel_sum, kernel_tail_estimate, Side};
use xipos::{BoundParams, ZeroTable};

use crate::report::{Check, Report};

pub fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64)).collect()
}

pub fn run(report: &mut Report, params: &BoundParams, tables: &[(String, ZeroTable)]) -> xipos::Result<()> {
    let counting: Vec<&(String, ZeroTable)> = tables.iter().filter(|(_, t)| t.first_index() == 1).collect();

    // Counting envelope against the data.
    if counting.is_empty() {
        report.check(Check::skipped("counting_envelope", "needs a table starting at the first zero"));
    } else {
        for (label, table) in &counting {
            let hi = table.max_height();
            let mut worst = f64::INFINITY;
            for k in 0..1000 {
                let t = 15.0 + (hi - 15.0) * (k as f64 + 0.5) / 1000.0;
                let n = table.count_up_to(t).expect("height inside table") as f64;
                let env = n_envelope(t)?;
                worst = worst.min((n - env.lower).min(env.upper - n));
            }
            report.check(Check::new(
                "counting_envelope",
                worst >= 0.0,
                Some(worst),
                format!("1000 heights in [15, {hi:.1}] of {label}"),
            ));
        }
    }

    // Lambert constant.
    let a = lambert_a();
    let mut worst = f64::INFINITY;
    for k in 1..=500 {
        let x = 1e-6 + (a - 2e-6) * k as f64 / 501.0;
        worst = worst.min(log_linear_gap(x));
    }
    let at_root = log_linear_gap(a).abs();
    let past = log_linear_gap(a + 1e-3);
    report.check(Check::new(
        "lambert_constant",
        worst > 0.0 && at_root < 1e-10 && past < 0.0 && (a - 0.7968).abs() < 5e-5,
        Some(worst),
        format!("a = {a:.12}, |f(a)| = {at_root:.1e}, f(a + 1e-3) = {past:.3e}"),
    ));

    // Size of g.
    let lo = 2.0 * params.alpha;
    let grid: Vec<f64> = (1..=10_000).map(|k| lo * (1e8 / lo).powf(k as f64 / 10_000.0)).collect();
    let mut g_max: f64 = 0.0;
    for &t in &grid {
        g_max = g_max.max(g_t(t, params)?.abs());
    }
    report.check(Check::new(
        "g_bound",
        g_max < 0.0879,
        Some(0.0879 - g_max),
        format!("max |g(t)| = {g_max:.6} on 10^4 points of (2α, 1e8]"),
    ));
    let tg = 1e8 * g_t(1e8, params)?;
    report.check(Check::new(
        "g_asymptotic",
        (1.9..=2.1).contains(&tg),
        Some((tg - 1.9).min(2.1 - tg)),
        format!("t·g(t) = {tg:.6} at t = 1e8, expected in [1.9, 2.1]"),
    ));

    // Integral bounds against quadrature.
    let mut minus_margin = f64::INFINITY;
    let mut plus_margin = f64::INFINITY;
    let mut worst_rel_err: f64 = 0.0;
    for t in geometric(1e2, 1e8, 50) {
        let q = quad_minus_kernel(t, params, 1e-6)?;
        minus_margin = minus_margin.min(q.value - integral_lower_minus(t, params)?);
        worst_rel_err = worst_rel_err.max(q.abs_error_estimate / q.value.abs());
        let q = quad_plus_kernel(t, params, 1e-6)?;
        plus_margin = plus_margin.min(q.value - integral_lower_plus(t, params)?);
        worst_rel_err = worst_rel_err.max(q.abs_error_estimate / q.value.abs());
    }
    let tight = worst_rel_err < 1e-6;
    report.check(Check::new(
        "integral_minus_oracle",
        minus_margin >= 0.0 && tight,
        Some(minus_margin),
        format!("50 heights in [1e2, 1e8]; worst oracle rel. error {worst_rel_err:.1e}"),
    ));
    report.check(Check::new(
        "integral_plus_oracle",
        plus_margin >= 0.0 && tight,
        Some(plus_margin),
        format!("50 heights in [1e2, 1e8]; worst oracle rel. error {worst_rel_err:.1e}"),
    ));

    // Sum bounds against the data.
    if counting.is_empty() {
        report.check(Check::skipped("sum_minus_data", "needs a table starting at the first zero"));
        report.check(Check::skipped("sum_plus_data", "needs a table starting at the first zero"));
    } else {
        for (label, table) in &counting {
            let hi = table.max_height();
            let range = table.index_range();
            let mut m7 = f64::INFINITY;
            let mut m8 = f64::INFINITY;
            let mut tail: f64 = 0.0;
            for t in geometric(100.0, 0.9 * hi, 20) {
                let (a, b) = params.kernels_at("sum_minus_data", t)?;
                let minus = kernel_sum(table, &range, 0.0, t, a, b, Side::Minus)?;
                let plus = kernel_sum(table, &range, 0.0, t, a, b, Side::Plus)?;
                let i_minus = quad_minus_kernel(t, params, 1e-8)?.value;
                let i_plus = quad_plus_kernel(t, params, 1e-8)?.value;
                m7 = m7.min(minus - sum_lower_minus(t, params, i_minus)?);
                m8 = m8.min(plus - sum_lower_plus(t, params, i_plus)?);
                tail = tail
                    .max(kernel_tail_estimate(t, a, b, Side::Minus, hi)?)
                    .max(kernel_tail_estimate(t, a, b, Side::Plus, hi)?);
            }
            let detail = format!("20 heights in [100, {:.0}] of {label}; omitted tail ≤ {tail:.3e}", 0.9 * hi);
            report.check(Check::new("sum_minus_data", m7 > 0.0, Some(m7), detail.clone()));
            report.check(Check::new("sum_plus_data", m8 > 0.0, Some(m8), detail));
        }
    }

    // Tail majorant.
    let mut worst = f64::INFINITY;
    for u in geometric(8.04, 1e10, 1000) {
        worst = worst.min(n_upper_simple_majorant(u) - n_envelope(u)?.upper);
    }
    let sharp = n_upper_simple_majorant(7.5) - n_envelope(7.5)?.upper;
    report.check(Check::new(
        "tail_majorant",
        worst > 0.0 && sharp < 0.0,
        Some(worst),
        format!("1000 points u in [8.04, 1e10]; at u = 7.5 slack {sharp:.4}"),
    ));
    let seq = synth_zero_sequence(3.001e12, 100_000, DensityMode::RiemannVonMangoldt)?;
    let mut worst = f64::INFINITY;
    for k in 0..20 {
        let t = 1e12 * k as f64 / 19.0;
        let bound = tail_bound_hypothetical(t, seq[0])?;
        let sum = inverse_square_sum_with_tail(t, &seq)?;
        worst = worst.min((bound - sum) / bound);
    }
    report.check(Check::new(
        "tail_synthetic",
        worst >= 0.0,
        Some(worst),
        "10^5 synthetic ordinates from 3.001e12 plus envelope tail, 20 heights in [0, 1e12]; relative slack",
    ));
    Ok(())
}
