//! Zero isolation between Gram points, block by block (Rosser's rule).

use crate::siegel::SiegelZ;

#[derive(Debug, Clone, Copy)]
pub struct Zero {
    pub index: u64,
    pub offset: f64,
}

const MAX_REFINE_LEVELS: usize = 12;

/// Offset of the Gram point g_n, θ(g_n) = nπ.
pub fn gram_offset(z: &SiegelZ, n: f64, guess: f64) -> f64 {
    let mut x = guess;
    for _ in 0..60 {
        let step = z.theta_minus_gram(x, n) / z.theta_prime(x);
        x -= step;
        if step.abs() <= 1e-13 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

fn is_good(n: i64, zv: f64) -> bool {
    let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    sign * zv > 0.0
}

fn bracket_root(z: &SiegelZ, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    // Illinois variant of regula falsi; stops on bracket width.
    let mut side = 0;
    for _ in 0..200 {
        if (b - a).abs() <= 4.0 * f64::EPSILON * b.abs().max(1.0) {
            break;
        }
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c <= a.min(b) || c >= a.max(b) { 0.5 * (a + b) } else { c };
        let fc = z.z(c);
        if fc == 0.0 {
            return c;
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
    }
    0.5 * (a + b)
}

fn sign_change_brackets(points: &[(f64, f64)]) -> Vec<usize> {
    (0..points.len() - 1)
        .filter(|&i| points[i].1.signum() != points[i + 1].1.signum())
        .collect()
}

/// Finds `count` consecutive zeros starting after the Gram point of index
/// `start_gram` (stepped back to the nearest good Gram point).
///
/// The first zero after a good Gram point g_n is numbered n + 2.
pub fn zeros_from_gram(
    z: &SiegelZ,
    start_gram: i64,
    guess: f64,
    count: usize,
) -> Result<Vec<Zero>, String> {
    let mut n = start_gram;
    let mut g = gram_offset(z, n as f64, guess);
    let mut zg = z.z(g);
    while !is_good(n, zg) {
        n -= 1;
        g = gram_offset(z, n as f64, g - 1.0 / z.theta_prime(g));
        zg = z.z(g);
    }
    let mut zeros = Vec::with_capacity(count);
    let mut next_index = (n + 2) as u64;

    while zeros.len() < count {
        let mut points = vec![(g, zg)];
        let mut m = n;
        loop {
            m += 1;
            let last = points.last().unwrap().0;
            let gm = gram_offset(z, m as f64, last + std::f64::consts::PI / z.theta_prime(last));
            let zm = z.z(gm);
            points.push((gm, zm));
            if is_good(m, zm) {
                break;
            }
            if m - n > 64 {
                return Err(format!("no good Gram point after g_{n}"));
            }
        }
        let need = (m - n) as usize;
        let mut brackets = sign_change_brackets(&points);
        let mut level = 0;
        while brackets.len() < need {
            level += 1;
            if level > MAX_REFINE_LEVELS {
                return Err(format!(
                    "Gram block g_{n}..g_{m} holds {} sign changes, expected {need}",
                    brackets.len()
                ));
            }
            let mut refined = Vec::with_capacity(points.len() * 2);
            for w in points.windows(2) {
                refined.push(w[0]);
                let mid = 0.5 * (w[0].0 + w[1].0);
                refined.push((mid, z.z(mid)));
            }
            refined.push(*points.last().unwrap());
            points = refined;
            brackets = sign_change_brackets(&points);
        }
        if brackets.len() > need {
            return Err(format!(
                "Gram block g_{n}..g_{m} holds {} sign changes, expected {need}",
                brackets.len()
            ));
        }
        for i in brackets {
            let (a, fa) = points[i];
            let (b, fb) = points[i + 1];
            zeros.push(Zero { index: next_index, offset: bracket_root(z, a, b, fa, fb) });
            next_index += 1;
        }
        n = m;
        let (gl, zl) = *points.last().unwrap();
        g = gl;
        zg = zl;
    }
    zeros.truncate(count);
    Ok(zeros)
}
