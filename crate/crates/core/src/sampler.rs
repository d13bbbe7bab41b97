//! Inverse-transform sampling with explicit cured outcomes, plus KS statistics.
//!
//! Uniforms come from ChaCha8 (`rand_chacha`) seeded with `seed_from_u64` and
//! positioned on `stream`. Each outcome consumes exactly one 64-bit output, mapped
//! to `(x >> 11) * 2^-53` in [0, 1).

use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bmw::Bmw6Params;
use crate::error::{domain, Error, Result};
use crate::special::inv_reg_inc_beta_split;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SeedSpec {
    pub seed: u64,
    pub stream: u64,
}

impl SeedSpec {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DrawOutcome {
    Finite(f64),
    /// The draw landed in the defective mass; the unit never fails.
    Cured,
}

impl DrawOutcome {
    pub fn value(self) -> Option<f64> {
        match self {
            DrawOutcome::Finite(x) => Some(x),
            DrawOutcome::Cured => None,
        }
    }

    pub fn is_cured(self) -> bool {
        matches!(self, DrawOutcome::Cured)
    }
}

impl fmt::Display for DrawOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawOutcome::Finite(x) => write!(f, "{x}"),
            DrawOutcome::Cured => f.write_str("cured"),
        }
    }
}

fn unit_uniform(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("sample size must be >= 1"));
    }
    Ok(())
}

/// Maps one uniform u in [0, 1) to an outcome by inverting the full cdf.
pub fn outcome_for_uniform(p: &Bmw6Params, u: f64, mass: f64) -> Result<DrawOutcome> {
    if u >= mass {
        return Ok(DrawOutcome::Cured);
    }
    match p.quantile(u) {
        Ok(x) => Ok(DrawOutcome::Finite(x)),
        // u a few ulps under the mass can still overshoot after inversion
        Err(Error::MassExceeded { .. }) => Ok(DrawOutcome::Cured),
        Err(e) => Err(e),
    }
}

/// Inverse-transform draws: Finite(quantile(u)) below the total mass, Cured above.
pub fn sample(p: &Bmw6Params, n: usize, seed: SeedSpec) -> Result<Vec<DrawOutcome>> {
    check_n(n)?;
    let mass = p.total_mass()?;
    let mut rng = seed.rng();
    (0..n)
        .map(|_| outcome_for_uniform(p, unit_uniform(&mut rng), mass))
        .collect()
}

/// Draws V ~ Beta(a, b) by inversion, then X = G⁻¹(V) through the inner quantile.
pub fn sample_beta_compose(p: &Bmw6Params, n: usize, seed: SeedSpec) -> Result<Vec<DrawOutcome>> {
    check_n(n)?;
    let inner = p.inner();
    let inner_mass = inner.total_mass();
    let mut rng = seed.rng();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let u = unit_uniform(&mut rng);
        let (v, v_comp) = inv_reg_inc_beta_split(u, p.shape(), p.ln_beta())?;
        if v >= inner_mass {
            out.push(DrawOutcome::Cured);
            continue;
        }
        out.push(match inner.quantile_split(v, v_comp) {
            Ok(x) => DrawOutcome::Finite(x),
            Err(Error::MassExceeded { .. }) => DrawOutcome::Cured,
            Err(e) => return Err(e),
        });
    }
    Ok(out)
}

/// Finite values of a draw sequence, in draw order.
pub fn finite_values(draws: &[DrawOutcome]) -> Vec<f64> {
    draws.iter().filter_map(|d| d.value()).collect()
}

/// One-sample Kolmogorov–Smirnov statistic sup|F_n − F|. For τ < 0 the model is the
/// conditional cdf F/mass, matching what the finite draws are distributed as.
pub fn ks_statistic(samples: &[f64], p: &Bmw6Params) -> Result<f64> {
    if samples.is_empty() {
        return Err(domain("KS statistic needs at least one sample"));
    }
    let mut xs = samples.to_vec();
    if xs.iter().any(|x| x.is_nan()) {
        return Err(domain("samples contain NaN"));
    }
    xs.sort_by(f64::total_cmp);
    let mass = p.total_mass()?;
    let n = xs.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let f = p.cdf(x)? / mass;
        let lo = i as f64 / n;
        let hi = (i + 1) as f64 / n;
        d = d.max(hi - f).max(f - lo);
    }
    Ok(d)
}

/// Two-sample KS statistic sup|F_m − G_n|.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.is_empty() || y.is_empty() {
        return Err(domain("two-sample KS needs two nonempty samples"));
    }
    if x.iter().chain(y).any(|v| v.is_nan()) {
        return Err(domain("samples contain NaN"));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    let (m, n) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < xs.len() && j < ys.len() {
        let t = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= t {
            i += 1;
        }
        while j < ys.len() && ys[j] <= t {
            j += 1;
        }
        d = d.max((i as f64 / m - j as f64 / n).abs());
    }
    Ok(d)
}

/// Asymptotic 1% critical value of the one-sample KS statistic.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.63 / (n as f64).sqrt()
}

/// Asymptotic 1% critical value of the two-sample KS statistic.
pub fn ks_two_sample_critical_1pct(m: usize, n: usize) -> f64 {
    let (m, n) = (m as f64, n as f64);
    1.63 * ((m + n) / (m * n)).sqrt()
}
