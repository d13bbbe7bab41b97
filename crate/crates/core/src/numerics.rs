//! Quadrature, finite differences and bracketed root finding.
//!
//! These serve as independent oracles for the distribution functions: none of them
//! evaluates an integrand at an interval endpoint, so densities that diverge at zero
//! and beta integrands with shapes below one can be integrated directly.

use crate::error::{domain, Error, Result};

/// Kronrod abscissae on [−1, 1] (non-negative half); odd indices are the 7-point
/// Gauss nodes.
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

const MAX_DEPTH: u32 = 60;
const MAX_SEGMENTS: usize = 20_000;
const BRENT_MAX_ITER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
    depth: u32,
}

fn kronrod15<F: FnMut(f64) -> f64>(f: &mut F, lo: f64, hi: f64) -> (f64, f64) {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Globally adaptive Gauss–Kronrod (7, 15) quadrature of f over (lo, hi).
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops to `tol`. An interval that would need splitting past depth 60
/// is a convergence failure.
pub fn adaptive_quad<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<QuadResult> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain(format!(
            "quadrature needs finite lo < hi, got ({lo}, {hi})"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!(
            "quadrature tolerance must be > 0, got {tol}"
        )));
    }

    let mut evaluations = 15;
    let (value, error) = kronrod15(&mut f, lo, hi);
    let mut segments = vec![Segment {
        lo,
        hi,
        value,
        error,
        depth: 0,
    }];

    loop {
        let total_value: f64 = segments.iter().map(|s| s.value).sum();
        let total_error: f64 = segments.iter().map(|s| s.error).sum();
        if !total_value.is_finite() {
            return Err(domain("integrand produced a non-finite value"));
        }
        if total_error <= tol {
            return Ok(QuadResult {
                value: total_value,
                abs_error_estimate: total_error,
                evaluations,
            });
        }

        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.error.total_cmp(&b.1.error))
            .expect("at least one segment");
        let seg = segments.swap_remove(worst);
        if seg.depth >= MAX_DEPTH || segments.len() + 2 > MAX_SEGMENTS {
            return Err(Error::Convergence {
                method: "adaptive quadrature",
                iterations: evaluations,
            });
        }
        let mid = 0.5 * (seg.lo + seg.hi);
        for (a, b) in [(seg.lo, mid), (mid, seg.hi)] {
            let (value, error) = kronrod15(&mut f, a, b);
            segments.push(Segment {
                lo: a,
                hi: b,
                value,
                error,
                depth: seg.depth + 1,
            });
        }
        evaluations += 30;
    }
}

/// Integral of f over (lo, ∞) through the substitution x = lo + t/(1 − t).
pub fn adaptive_quad_semi_infinite<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    tol: f64,
) -> Result<QuadResult> {
    adaptive_quad(
        |t| {
            let w = 1.0 - t;
            let x = lo + t / w;
            let v = f(x);
            if v == 0.0 {
                0.0
            } else {
                v / (w * w)
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// Integral of f over (lo, hi) through x = lo + (hi − lo) t^power, which clusters
/// nodes at lo. With power k, an endpoint behaviour (x − lo)^{s−1} becomes
/// t^{ks−1}, so k ≥ 1/s turns an integrable singularity into a bounded integrand.
pub fn adaptive_quad_power<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    power: f64,
    tol: f64,
) -> Result<QuadResult> {
    if !(power >= 1.0 && power.is_finite()) {
        return Err(domain(format!(
            "power substitution needs power >= 1, got {power}"
        )));
    }
    let width = hi - lo;
    adaptive_quad(
        |t| {
            let tp = t.powf(power - 1.0);
            let v = f(lo + width * tp * t);
            if v == 0.0 {
                0.0
            } else {
                v * width * power * tp
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// Five-point central difference, the Richardson extrapolation of the two-point
/// differences at h and 2h; truncation error is O(h⁴).
pub fn central_diff<F: FnMut(f64) -> f64>(mut f: F, x: f64, h: f64) -> f64 {
    let d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    let d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
    (4.0 * d1 - d2) / 3.0
}

/// Brent's method on a sign-changing bracket.
pub fn brent_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.is_nan() || fb.is_nan() || fa * fb > 0.0 {
        return Err(domain(format!(
            "brent_root needs a sign change on [{lo}, {hi}], got f = ({fa}, {fb})"
        )));
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;

    for _ in 0..BRENT_MAX_ITER {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 || fb.abs() <= tol {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    Err(Error::Convergence {
        method: "brent_root",
        iterations: BRENT_MAX_ITER,
    })
}
