//! The four-parameter modified Weibull baseline G(x; γ, β, λ, τ).
//!
//! Its survival function is exp(−Φ(x)) with cumulative hazard
//!
//! ```text
//! Φ(x) = [λ^{1−τ} ((x/β)^γ + λ)^τ − λ] / τ = λ · expm1(τ · ln(1 + (x/β)^γ / λ)) / τ
//! ```
//!
//! The right-hand form is what gets evaluated; it is continuous through τ = 0, where it
//! becomes λ · ln(1 + (x/β)^γ / λ). For τ < 0, Φ is bounded by λ/|τ| and the
//! distribution is defective with total mass 1 − exp(−λ/|τ|).

use crate::error::{domain, Error, Result};

/// Parameters of the modified Weibull baseline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerParams {
    gamma: f64,
    beta: f64,
    lambda: f64,
    tau: f64,
    ln_lambda: f64,
}

impl InnerParams {
    /// γ, β, λ must be positive and finite; τ may be any finite value, including zero.
    pub fn new(gamma: f64, beta: f64, lambda: f64, tau: f64) -> Result<Self> {
        for (name, v) in [("gamma", gamma), ("beta", beta), ("lambda", lambda)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(domain(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !tau.is_finite() {
            return Err(domain(format!("tau must be finite, got {tau}")));
        }
        Ok(Self {
            gamma,
            beta,
            lambda,
            tau,
            ln_lambda: lambda.ln(),
        })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Φ(x), the cumulative hazard.
    pub fn cumulative_hazard(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        Ok(self.phi_from_log1p(self.log1p_ratio(x)))
    }

    /// S(x) = exp(−Φ(x)).
    pub fn survival(&self, x: f64) -> Result<f64> {
        Ok((-self.cumulative_hazard(x)?).exp())
    }

    /// G(x) = 1 − exp(−Φ(x)).
    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(-(-self.cumulative_hazard(x)?).exp_m1())
    }

    /// h(x) = γ (x/β)^γ λ^{1−τ} / (x [(x/β)^γ + λ]^{1−τ}), defined for x > 0.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        Ok(self.ln_hazard(x)?.exp())
    }

    /// g(x) = h(x) S(x), defined for x > 0.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        let ln_h = self.ln_hazard(x)?;
        let phi = self.cumulative_hazard(x)?;
        Ok((ln_h - phi).exp())
    }

    /// lim_{x→∞} G(x): one unless τ < 0.
    pub fn total_mass(&self) -> f64 {
        match self.max_cumulative_hazard() {
            Some(limit) => -(-limit).exp_m1(),
            None => 1.0,
        }
    }

    /// Closed-form inverse of [`cdf`](Self::cdf).
    pub fn quantile(&self, y: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&y) {
            return Err(domain(format!("quantile requires 0 <= y < 1, got {y}")));
        }
        let mass = self.total_mass();
        if y >= mass {
            return Err(Error::MassExceeded { requested: y, mass });
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        self.quantile_from_cumulative_hazard(-(-y).ln_1p())
            .map_err(|e| match e {
                Error::MassExceeded { .. } => Error::MassExceeded { requested: y, mass },
                other => other,
            })
    }

    /// Quantile from the split pair (y, 1 − y), so that 1 − y close to zero keeps its
    /// relative precision.
    pub(crate) fn quantile_split(&self, y: f64, y_comp: f64) -> Result<f64> {
        if y <= 0.0 {
            return Ok(0.0);
        }
        let s = if y < 0.5 { -(-y).ln_1p() } else { -y_comp.ln() };
        self.quantile_from_cumulative_hazard(s)
    }

    /// Solves Φ(x) = s.
    pub(crate) fn quantile_from_cumulative_hazard(&self, s: f64) -> Result<f64> {
        if let Some(limit) = self.max_cumulative_hazard() {
            if s >= limit {
                return Err(Error::MassExceeded {
                    requested: -(-s).exp_m1(),
                    mass: self.total_mass(),
                });
            }
        }
        if s == 0.0 {
            return Ok(0.0);
        }
        // u = ln(1 + z/λ) with z = (x/β)^γ.
        let u = if self.tau == 0.0 {
            s / self.lambda
        } else {
            (self.tau * s / self.lambda).ln_1p() / self.tau
        };
        let ln_z = self.ln_lambda + ln_expm1(u);
        Ok(self.beta * (ln_z / self.gamma).exp())
    }

    /// Supremum of Φ when it is finite (τ < 0).
    pub(crate) fn max_cumulative_hazard(&self) -> Option<f64> {
        (self.tau < 0.0).then(|| self.lambda / -self.tau)
    }

    /// ln(1 + (x/β)^γ / λ) evaluated as a softplus of ln z − ln λ.
    fn log1p_ratio(&self, x: f64) -> f64 {
        softplus(self.gamma * (x / self.beta).ln() - self.ln_lambda)
    }

    fn phi_from_log1p(&self, l: f64) -> f64 {
        if self.tau == 0.0 {
            self.lambda * l
        } else {
            self.lambda * (self.tau * l).exp_m1() / self.tau
        }
    }

    /// ln Φ(x), finite even where Φ itself underflows.
    pub(crate) fn ln_cumulative_hazard(&self, x: f64) -> Result<f64> {
        check_nonneg(x)?;
        let t = self.gamma * (x / self.beta).ln() - self.ln_lambda;
        let l = softplus(t);
        let ln_l = if t < -30.0 { t - 0.5 * t.exp() } else { l.ln() };
        let ratio = if self.tau == 0.0 {
            0.0
        } else {
            ln_expm1_over(self.tau * l)
        };
        Ok(self.ln_lambda + ln_l + ratio)
    }

    /// ln G(x) = ln(1 − exp(−Φ(x))), accurate for small Φ.
    pub(crate) fn ln_cdf_from(&self, x: f64, phi: f64) -> Result<f64> {
        if phi > 1e-10 {
            return Ok((-(-phi).exp_m1()).ln());
        }
        // 1 − e^{−Φ} = Φ (1 − Φ/2 + …)
        Ok(self.ln_cumulative_hazard(x)? - 0.5 * phi)
    }

    /// ln h(x) = ln(γ/x) + ln z − (1 − τ) ln(1 + z/λ).
    pub(crate) fn ln_hazard(&self, x: f64) -> Result<f64> {
        if !(x.is_finite() && x > 0.0) {
            return Err(domain(format!(
                "hazard and density require finite x > 0, got {x}"
            )));
        }
        let ln_z = self.gamma * (x / self.beta).ln();
        let l = softplus(ln_z - self.ln_lambda);
        Ok((self.gamma / x).ln() + ln_z - (1.0 - self.tau) * l)
    }
}

fn check_nonneg(x: f64) -> Result<()> {
    if x.is_nan() || x < 0.0 {
        return Err(domain(format!("x must be >= 0, got {x}")));
    }
    Ok(())
}

/// ln(1 + e^t) without overflow.
pub(crate) fn softplus(t: f64) -> f64 {
    if t > 0.0 {
        t + (-t).exp().ln_1p()
    } else {
        t.exp().ln_1p()
    }
}

/// ln(e^u − 1) for u > 0.
fn ln_expm1(u: f64) -> f64 {
    if u > 30.0 {
        u + (-(-u).exp()).ln_1p()
    } else {
        u.exp_m1().ln()
    }
}

/// ln(expm1(u) / u), with the removable singularity at u = 0.
fn ln_expm1_over(u: f64) -> f64 {
    if u == 0.0 {
        0.0
    } else if u > 30.0 {
        ln_expm1(u) - u.ln()
    } else {
        (u.exp_m1() / u).ln()
    }
}
