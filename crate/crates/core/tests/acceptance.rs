//! One PASS/FAIL line per acceptance criterion. Exits nonzero when any fails.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand::rngs::StdRng;
use xipos::bounds::{
    find_threshold, g_t, integral_lower_minus, integral_lower_plus, lambert_a, log_linear_gap,
    n_envelope, n_upper_simple_majorant, sum_lower_minus, sum_lower_plus, tail_bound_hypothetical,
};
use xipos::oracle::{
    inverse_square_sum_with_tail, quad_minus_kernel, quad_plus_kernel, synth_zero_sequence,
    DensityMode,
};
use xipos::regions::{emit_csv, preset, scan, RegionCriterion, RegionKind};
use xipos::sums::{hypo_contribution, kernel_sum, kernel_tail_estimate, re_sum_critical, s1_s2, Side};
use xipos::{BoundParams, EpsilonVariant, EvalPoint, HypotheticalZero, TableManifest, ZeroTable};

type Outcome = Result<(bool, String), String>;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn table(name: &str) -> Result<ZeroTable, String> {
    let path = data(name);
    TableManifest::from_path(&path)
        .and_then(|m| m.load())
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn geometric(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64))
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let (ok, detail) = f()?;
    let took = start.elapsed();
    match limit {
        Some(l) => Ok((ok && took < l, format!("{detail}; {took:.2?} (limit {l:?})"))),
        None => Ok((ok, format!("{detail}; {took:.2?}"))),
    }
}

fn threshold() -> Outcome {
    let th = find_threshold(EpsilonVariant::LemmaConsistent).map_err(|e| e.to_string())?;
    let sig2 = (th.root / 1e9).round() * 1e9;
    let ok = (2.8e10..=3.4e10).contains(&th.root) && sig2 == 3.1e10;
    Ok((ok, format!("root {:.6e}, bracket [{:.4e}, {:.4e}]", th.root, th.bracket.0, th.bracket.1)))
}

fn g_bound() -> Outcome {
    let params = BoundParams::default();
    let lo = 2.0 * params.alpha;
    let mut worst: f64 = 0.0;
    for k in 1..=10_000 {
        let t = lo * (1e8 / lo).powf(k as f64 / 10_000.0);
        worst = worst.max(g_t(t, &params).map_err(|e| e.to_string())?.abs());
    }
    Ok((worst < 0.0879, format!("max |g(t)| = {worst:.7} over (2α, 1e8]")))
}

fn g_asymptotic() -> Outcome {
    let tg = 1e8 * g_t(1e8, &BoundParams::default()).map_err(|e| e.to_string())?;
    Ok(((1.9..=2.1).contains(&tg), format!("t·g(t) = {tg:.6} at t = 1e8")))
}

fn envelope(zeros: &ZeroTable) -> Outcome {
    let hi = zeros.max_height();
    let mut worst = f64::INFINITY;
    for k in 0..1000 {
        let t = 15.0 + (hi - 15.0) * (k as f64 + 0.5) / 1000.0;
        let n = zeros.count_up_to(t).ok_or("height outside table")? as f64;
        let env = n_envelope(t).map_err(|e| e.to_string())?;
        worst = worst.min((n - env.lower).min(env.upper - n));
    }
    Ok((worst >= 0.0, format!("1000 heights up to {hi:.1}; worst slack {worst:.4}")))
}

fn lambert() -> Outcome {
    let a = lambert_a();
    let mut worst = f64::INFINITY;
    for k in 1..=500 {
        let x = 1e-6 + (a - 2e-6) * k as f64 / 501.0;
        worst = worst.min(log_linear_gap(x));
    }
    let residual = log_linear_gap(a).abs();
    let ok = worst > 0.0 && residual < 1e-10 && (a * 1e4).round() == 7968.0;
    Ok((ok, format!("a = {a:.13}, |f(a)| = {residual:.1e}, min f on grid = {worst:.3e}")))
}

fn oracle_domination() -> Outcome {
    let params = BoundParams::default();
    let (mut m_minus, mut m_plus) = (f64::INFINITY, f64::INFINITY);
    for t in geometric(1e2, 1e8, 50) {
        let q = quad_minus_kernel(t, &params, 1e-6).map_err(|e| e.to_string())?;
        m_minus = m_minus.min(q.value - integral_lower_minus(t, &params).map_err(|e| e.to_string())?);
        let q = quad_plus_kernel(t, &params, 1e-6).map_err(|e| e.to_string())?;
        m_plus = m_plus.min(q.value - integral_lower_plus(t, &params).map_err(|e| e.to_string())?);
    }
    Ok((m_minus >= 0.0 && m_plus >= 0.0, format!("margins minus {m_minus:.3e}, plus {m_plus:.3e}")))
}

fn sum_lower_bounds(zeros: &ZeroTable) -> Outcome {
    let params = BoundParams::default();
    let hi = zeros.max_height();
    let range = zeros.index_range();
    let (mut m7, mut m8, mut tail) = (f64::INFINITY, f64::INFINITY, 0.0_f64);
    let err = |e: xipos::Error| e.to_string();
    for t in geometric(100.0, 0.9 * hi, 20) {
        let (a, b) = params.kernels_at("acceptance", t).map_err(err)?;
        let minus = kernel_sum(zeros, &range, 0.0, t, a, b, Side::Minus).map_err(err)?;
        let plus = kernel_sum(zeros, &range, 0.0, t, a, b, Side::Plus).map_err(err)?;
        let i_minus = quad_minus_kernel(t, &params, 1e-8).map_err(err)?.value;
        let i_plus = quad_plus_kernel(t, &params, 1e-8).map_err(err)?.value;
        m7 = m7.min(minus - sum_lower_minus(t, &params, i_minus).map_err(err)?);
        m8 = m8.min(plus - sum_lower_plus(t, &params, i_plus).map_err(err)?);
        tail = tail
            .max(kernel_tail_estimate(t, a, b, Side::Minus, hi).map_err(err)?)
            .max(kernel_tail_estimate(t, a, b, Side::Plus, hi).map_err(err)?);
    }
    Ok((
        m7 > 0.0 && m8 > 0.0,
        format!("{} zeros, 20 heights; margins {m7:.4e} / {m8:.4e}; omitted tail ≤ {tail:.2e}", zeros.len()),
    ))
}

fn figure1(zeros: ZeroTable) -> Outcome {
    let err = |e: xipos::Error| e.to_string();
    let zeros = Arc::new(zeros);
    let (criterion, spec) = preset("fig1", 1.0, Some(zeros.clone()), None).map_err(err)?;
    let grid = scan(&criterion, &spec).map_err(err)?;
    let offsets = zeros.offsets();
    let distance = |t: f64| offsets.iter().map(|o| (o - t).abs()).fold(f64::INFINITY, f64::min);
    let (mut in_lobe, mut lobe_miss, mut far, mut far_hit) = (0, 0, 0, 0);
    for i in 0..spec.n_t {
        let d = distance(spec.t_offset_at(i));
        for j in 0..spec.n_sigma {
            let sigma = spec.sigma_at(j);
            if d <= 0.05 && sigma >= 0.7 {
                in_lobe += 1;
                lobe_miss += usize::from(!grid.get(i, j));
            }
            if d >= 0.1 && sigma <= 0.55 {
                far += 1;
                far_hit += usize::from(grid.get(i, j));
            }
        }
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    emit_csv(&grid, &mut first).map_err(err)?;
    emit_csv(&scan(&criterion, &spec).map_err(err)?, &mut second).map_err(err)?;
    let ok = in_lobe > 0 && far > 0 && lobe_miss == 0 && far_hit == 0 && first == second;
    Ok((
        ok,
        format!(
            "{}x{} lattice, {} cells gray; lobe misses {lobe_miss}/{in_lobe}, far hits {far_hit}/{far}; reruns identical: {}",
            spec.n_sigma,
            spec.n_t,
            grid.count_true(),
            first == second
        ),
    ))
}

fn tail_stress() -> Outcome {
    let err = |e: xipos::Error| e.to_string();
    let seq = synth_zero_sequence(3.001e12, 100_000, DensityMode::RiemannVonMangoldt).map_err(err)?;
    let mut worst = f64::INFINITY;
    for k in 0..20 {
        let t = 1e12 * k as f64 / 19.0;
        let bound = tail_bound_hypothetical(t, seq[0]).map_err(err)?;
        let sum = inverse_square_sum_with_tail(t, &seq).map_err(err)?;
        worst = worst.min((bound - sum) / bound);
    }
    let mut majorant = f64::INFINITY;
    for u in geometric(8.04, 1e10, 1000) {
        majorant = majorant.min(n_upper_simple_majorant(u) - n_envelope(u).map_err(err)?.upper);
    }
    let at_7_5 = n_upper_simple_majorant(7.5) - n_envelope(7.5).map_err(err)?.upper;
    Ok((
        worst >= 0.0 && majorant > 0.0 && at_7_5 < 0.0,
        format!("tail relative slack {worst:.4}; u log u/2π − n_upper ≥ {majorant:.3e} on (8.04, 1e10), {at_7_5:.4} at 7.5"),
    ))
}

fn scenarios() -> Outcome {
    let err = |e: xipos::Error| e.to_string();
    let zero = HypotheticalZero::new(0.75, 4e12 + 1.0).map_err(err)?;
    let point = EvalPoint::with_base(0.75 - 1e-3, 4e12, 1.0).map_err(err)?;
    let pocket = hypo_contribution(&point, &[zero]);
    let mut subset = true;
    let mut cells = (0, 0);
    for name in ["scenario1", "scenario2", "merging"] {
        let (strong, mut spec) = preset(name, 1.0, None, None).map_err(err)?;
        spec.n_sigma = 120;
        spec.n_t = 120;
        let weak = RegionCriterion::new(RegionKind::HypotheticalFinite, 0.4, strong.source.clone());
        let a = scan(&weak, &spec).map_err(err)?;
        let b = scan(&strong, &spec).map_err(err)?;
        subset &= a.mask.iter().zip(&b.mask).all(|(&w, &s)| !w || s);
        cells.0 += a.count_true();
        cells.1 += b.count_true();
    }
    Ok((
        pocket < -900.0 && subset,
        format!("pocket value {pocket:.2}; mask(c=0.4) ⊆ mask(c=1): {subset} ({} vs {} cells)", cells.0, cells.1),
    ))
}

fn identities(zeros: &ZeroTable) -> Outcome {
    let err = |e: xipos::Error| e.to_string();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let last = zeros.last_index();
    let mut worst: f64 = 0.0;
    let mut critical_nonzero = 0;
    for _ in 0..1000 {
        let sigma = rng.gen_range(0.0..1.0);
        let t = rng.gen_range(0.0..zeros.max_height());
        let k1 = rng.gen_range(1..=last);
        let k2 = rng.gen_range(k1..=last.min(k1 + 5000));
        let range = k1..=k2;
        let point = EvalPoint::new(sigma, t).map_err(err)?;
        let (s1, s2) = s1_s2(&point, zeros, &range).map_err(err)?;
        let re = re_sum_critical(&point, zeros, &range).map_err(err)?;
        let scaled = (sigma - 0.5) * re;
        if scaled != 0.0 {
            worst = worst.max(((s1 + s2) - scaled).abs() / scaled.abs());
        }
        let half = EvalPoint::new(0.5, t).map_err(err)?;
        critical_nonzero += usize::from(re_sum_critical(&half, zeros, &range).map_err(err)? != 0.0);
    }
    Ok((
        worst <= 1e-12 && critical_nonzero == 0,
        format!("worst relative gap {worst:.2e} over 1000 points; nonzero at σ = 1/2: {critical_nonzero}"),
    ))
}

fn main() -> ExitCode {
    let low = table("zeros_100k.manifest");
    let high = table("zeros_1e12.manifest");
    let criteria: Vec<(&str, &str, Outcome)> = vec![
        ("1", "threshold reproduction", timed(Some(Duration::from_secs(1)), threshold)),
        ("2a", "bound |g(t)| < 0.0879", timed(Some(Duration::from_secs(1)), g_bound)),
        ("2b", "asymptotic t·g(t) in [1.9, 2.1]", timed(Some(Duration::from_secs(1)), g_asymptotic)),
        (
            "3",
            "counting envelope vs first-100k table",
            timed(Some(Duration::from_secs(5)), || envelope(low.as_ref().map_err(Clone::clone)?)),
        ),
        ("4", "Lambert constant and log(1-x) + 2x > 0", timed(None, lambert)),
        ("5", "integral bounds below quadrature oracles", timed(Some(Duration::from_secs(30)), oracle_domination)),
        (
            "6",
            "kernel sum lower bounds vs data",
            timed(None, || sum_lower_bounds(low.as_ref().map_err(Clone::clone)?)),
        ),
        (
            "7",
            "fig1 lobes at height 2.68e11",
            timed(Some(Duration::from_secs(10)), || figure1(high.clone()?)),
        ),
        ("8", "hypothetical tail bound stress", timed(None, tail_stress)),
        ("9", "negativity pocket and monotonicity in c", timed(None, scenarios)),
        ("10", "S1 + S2 identity and critical-line zero", timed(None, || identities(low.as_ref().map_err(Clone::clone)?))),
    ];
    let mut failed = 0;
    for (id, name, outcome) in criteria {
        let (status, detail) = match outcome {
            Ok((true, d)) => ("PASS", d),
            Ok((false, d)) => ("FAIL", d),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        failed += usize::from(status == "FAIL");
        println!("{status} {id:<3} {name}: {detail}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
