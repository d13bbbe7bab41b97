//! The six-parameter beta modified Weibull distribution.
//!
//! F(x) = I_{G(x)}(a, b), where G is the modified Weibull baseline of
//! [`InnerParams`] and I is the regularized incomplete beta function.
//! The density is the composition G^{a−1} (1 − G)^{b−1} g / B(a, b).

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::inner::InnerParams;
use crate::special::{inv_reg_inc_beta_split, log_beta, reg_inc_beta_split, BetaShape};

/// The six parameters as plain named numbers, before validation.
///
/// This is also the on-disk form used by parameter files.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamValues {
    pub a: f64,
    pub b: f64,
    pub lambda: f64,
    pub beta: f64,
    pub gamma: f64,
    pub tau: f64,
}

/// Validated parameters of the six-parameter distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bmw6Params {
    shape: BetaShape,
    inner: InnerParams,
    ln_beta: f64,
}

impl Bmw6Params {
    pub fn new(shape: BetaShape, inner: InnerParams) -> Self {
        Self {
            shape,
            inner,
            ln_beta: log_beta(shape),
        }
    }

    pub fn from_values(v: ParamValues) -> Result<Self> {
        let shape = BetaShape::new(v.a, v.b)?;
        let inner = InnerParams::new(v.gamma, v.beta, v.lambda, v.tau)?;
        Ok(Self::new(shape, inner))
    }

    pub fn values(&self) -> ParamValues {
        ParamValues {
            a: self.shape.a(),
            b: self.shape.b(),
            lambda: self.inner.lambda(),
            beta: self.inner.beta(),
            gamma: self.inner.gamma(),
            tau: self.inner.tau(),
        }
    }

    pub fn shape(&self) -> BetaShape {
        self.shape
    }

    pub fn inner(&self) -> InnerParams {
        self.inner
    }

    /// ln B(a, b), cached at construction.
    pub fn ln_beta(&self) -> f64 {
        self.ln_beta
    }

    /// Returns (F(x), S(x)) from one continued-fraction evaluation.
    fn cdf_and_survival(&self, x: f64) -> Result<(f64, f64)> {
        let phi = self.inner.cumulative_hazard(x)?;
        let g = -(-phi).exp_m1();
        let g_comp = (-phi).exp();
        reg_inc_beta_split(g, g_comp, self.shape, self.ln_beta)
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(self.cdf_and_survival(x)?.0)
    }

    /// S(x) = I_{1−G(x)}(b, a); exp(−Φ) is handed to the incomplete beta directly so
    /// the right tail keeps its relative precision.
    pub fn survival(&self, x: f64) -> Result<f64> {
        Ok(self.cdf_and_survival(x)?.1)
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.log_pdf(x)?.exp())
    }

    /// ln f(x) = (a−1) ln G − bΦ + ln h − ln B(a, b).
    pub fn log_pdf(&self, x: f64) -> Result<f64> {
        let ln_h = self.inner.ln_hazard(x)?;
        let phi = self.inner.cumulative_hazard(x)?;
        let a = self.shape.a();
        let lower = if a == 1.0 {
            0.0
        } else {
            (a - 1.0) * self.inner.ln_cdf_from(x, phi)?
        };
        let upper = if phi.is_infinite() {
            f64::NEG_INFINITY
        } else {
            -self.shape.b() * phi
        };
        Ok(lower + upper + ln_h - self.ln_beta)
    }

    /// h(x) = f(x) / S(x). Fails when S(x) is no longer a normal float.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        let survival = self.survival(x)?;
        if survival < f64::MIN_POSITIVE {
            return Err(Error::Overflow(format!(
                "survival underflows at x = {x} (S = {survival:e}); hazard not representable"
            )));
        }
        Ok(self.pdf(x)? / survival)
    }

    /// lim_{x→∞} F(x): one unless τ < 0, then I_{1−exp(−λ/|τ|)}(a, b).
    ///
    /// Only the incomplete-beta evaluation for τ < 0 can fail.
    pub fn total_mass(&self) -> Result<f64> {
        match self.inner.max_cumulative_hazard() {
            None => Ok(1.0),
            Some(limit) => {
                let g = -(-limit).exp_m1();
                let g_comp = (-limit).exp();
                Ok(reg_inc_beta_split(g, g_comp, self.shape, self.ln_beta)?.0)
            }
        }
    }

    /// Inverse of [`cdf`](Self::cdf): x = G⁻¹(I⁻¹(q; a, b)).
    ///
    /// `quantile(0)` is 0, the infimum of the support.
    pub fn quantile(&self, q: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&q) {
            return Err(domain(format!("quantile requires 0 <= q < 1, got {q}")));
        }
        if q == 0.0 {
            return Ok(0.0);
        }
        let mass = self.total_mass()?;
        if q >= mass {
            return Err(Error::MassExceeded { requested: q, mass });
        }
        let (v, v_comp) = inv_reg_inc_beta_split(q, self.shape, self.ln_beta)?;
        self.inner.quantile_split(v, v_comp).map_err(|e| match e {
            Error::MassExceeded { .. } => Error::MassExceeded { requested: q, mass },
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: f64, b: f64, lambda: f64, beta: f64, gamma: f64, tau: f64) -> Bmw6Params {
        Bmw6Params::from_values(ParamValues {
            a,
            b,
            lambda,
            beta,
            gamma,
            tau,
        })
        .unwrap()
    }

    fn rel(got: f64, want: f64) -> f64 {
        ((got - want) / want).abs()
    }

    fn n1() -> Bmw6Params {
        params(1.5, 0.8, 1.2, 0.8, 1.2, 2.0)
    }

    #[test]
    fn rejects_invalid_values() {
        let mut v = n1().values();
        v.a = -1.0;
        assert!(Bmw6Params::from_values(v).is_err());
        let mut v = n1().values();
        v.tau = f64::NAN;
        assert!(Bmw6Params::from_values(v).is_err());
    }

    #[test]
    fn cdf_values() {
        let uniform_shape = params(1.0, 1.0, 0.7, 1.3, 1.6, 0.4);
        for x in [0.1, 1.0, 2.5] {
            let want = uniform_shape.inner().cdf(x).unwrap();
            assert!(rel(uniform_shape.cdf(x).unwrap(), want) < 1e-14);
        }
        // G(x) = 1/2 at x = β ln 2 for the exponential baseline; I_y(2,1) = y².
        let sq = params(2.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        assert!((sq.cdf(std::f64::consts::LN_2).unwrap() - 0.25).abs() < 1e-15);
        // Quadrature of the beta integrand up to G(1), 40 digits.
        let got = n1().cdf(1.0).unwrap();
        assert!((got - 0.727_381_846_320_341_3).abs() < 1e-13, "got {got}");
        assert_eq!(n1().cdf(0.0).unwrap(), 0.0);
    }

    #[test]
    fn survival_values() {
        assert_eq!(n1().survival(0.0).unwrap(), 1.0);
        let e = params(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        assert!(rel(e.survival(2.0).unwrap(), 0.135_335_283_236_612_7) < 1e-14);
        let got = n1().survival(1.0).unwrap();
        assert!((got - 0.272_618_153_679_658_7).abs() < 1e-13, "got {got}");
    }

    #[test]
    fn pdf_values() {
        let flat = params(1.0, 1.0, 0.7, 1.3, 1.6, 0.4);
        for x in [0.1, 1.0, 2.5] {
            let want = flat.inner().pdf(x).unwrap();
            assert!(rel(flat.pdf(x).unwrap(), want) < 1e-13);
        }
        let sq = params(2.0, 1.0, 0.9, 1.1, 1.7, 0.3);
        for x in [0.2, 1.0, 3.0] {
            let inner = sq.inner();
            let want = 2.0 * inner.cdf(x).unwrap() * inner.pdf(x).unwrap();
            assert!(rel(sq.pdf(x).unwrap(), want) < 1e-13);
        }
        // Numerical derivative of the 40-digit cdf.
        let n2 = params(1.5, 3.5, 0.5, 1.5, 4.0, 4.0);
        let got = n2.pdf(1.0).unwrap();
        assert!(rel(got, 2.800_498_794_031_288) < 1e-12, "got {got}");
        assert!(matches!(n2.pdf(0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn log_pdf_values() {
        let e = params(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        assert!((e.log_pdf(2.0).unwrap() + 2.0).abs() < 1e-15);
        // ln(2 G g) with G = 1 − e^{−1}, g = 2 e^{−1}.
        let r = params(2.0, 1.0, 1.0, 1.0, 2.0, 1.0);
        let got = r.log_pdf(1.0).unwrap();
        assert!((got + 0.072_380_784_267_191_27).abs() < 1e-14, "got {got}");
        assert!(matches!(r.log_pdf(-1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn log_pdf_where_cdf_underflows() {
        // Φ underflows to 0 but ln Φ is still finite, so the log density stays exact
        // while the density itself is 0.
        let p = params(2.0, 1.0, 1.0, 1.0, 2.0, 1.0);
        let x = 1e-200;
        assert_eq!(p.inner().cumulative_hazard(x).unwrap(), 0.0);
        let lp = p.log_pdf(x).unwrap();
        // G ≈ Φ = x², h = 2x, B(2, 1) = 1/2.
        let want = 2.0 * x.ln() + (2.0 * x).ln() + 2f64.ln();
        assert!(rel(lp, want) < 1e-13, "lp={lp} want={want}");
        assert_eq!(p.pdf(x).unwrap(), 0.0);
    }

    #[test]
    fn hazard_values() {
        let e = params(1.0, 1.0, 0.5, 1.5, 1.0, 1.0);
        for x in [0.01, 1.0, 7.0, 30.0] {
            assert!((e.hazard(x).unwrap() - 1.0 / 1.5).abs() < 1e-12);
        }
        let r = params(1.0, 1.0, 1.0, 1.0, 2.0, 1.0);
        assert!((r.hazard(1.0).unwrap() - 2.0).abs() < 1e-14);
        // pdf / survival from the 40-digit oracles.
        let n3 = params(0.5, 0.5, 0.5, 0.5, 0.5, 0.5);
        let got = n3.hazard(1.0).unwrap();
        assert!(rel(got, 0.213_488_179_464_542_35) < 1e-12, "got {got}");
    }

    #[test]
    fn hazard_reports_underflow() {
        let n2 = params(1.5, 3.5, 0.5, 1.5, 4.0, 4.0);
        assert!(matches!(n2.hazard(8.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn total_mass_values() {
        assert_eq!(
            params(0.3, 2.0, 1.0, 1.0, 1.0, 2.0).total_mass().unwrap(),
            1.0
        );
        let m = params(1.0, 1.0, 1.0, 1.0, 1.0, -1.0).total_mass().unwrap();
        assert!((m - 0.632_120_558_828_557_7).abs() < 1e-15);
        // I_y(2,2) = 3y² − 2y³ at y = 1 − e^{−1}.
        let m = params(2.0, 2.0, 1.0, 1.0, 1.0, -1.0).total_mass().unwrap();
        assert!((m - 0.693_568_287_025_889_8).abs() < 1e-14, "m={m}");
    }

    #[test]
    fn quantile_values() {
        let e = params(1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
        assert!((e.quantile(0.5).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(n1().quantile(0.0).unwrap(), 0.0);
        // Bracketed root solve of the 40-digit cdf.
        let got = n1().quantile(0.9).unwrap();
        assert!(rel(got, 1.341_542_478_243_465_3) < 1e-12, "got {got}");
        assert!(matches!(n1().quantile(1.0), Err(Error::Domain(_))));
        assert!(matches!(n1().quantile(-0.2), Err(Error::Domain(_))));
        let defective = params(2.0, 2.0, 1.0, 1.0, 1.0, -1.0);
        assert!(matches!(
            defective.quantile(0.7),
            Err(Error::MassExceeded { .. })
        ));
        assert!(defective.quantile(0.69).is_ok());
    }

    #[test]
    fn cdf_and_survival_sum_to_one() {
        let sets = [
            n1(),
            params(0.2, 3.0, 0.001, 2.4, 3.5, 3.5),
            params(0.5, 0.5, 0.5, 0.5, 0.5, 0.5),
            params(4.0, 0.3, 2.0, 1.0, 2.0, -0.7),
        ];
        for p in sets {
            for i in 0..200 {
                let x = 0.02 * i as f64;
                let s = p.cdf(x).unwrap() + p.survival(x).unwrap();
                assert!((s - 1.0).abs() <= 1e-12, "{p:?} x={x}");
            }
        }
    }
}
