//! Catalog of named sub-families obtained by pinning some of the six parameters,
//! with independent closed-form references for each.

use std::fmt;

use crate::bmw::{Bmw6Params, ParamValues};
use crate::error::{domain, Error, Result};
use crate::special::{log_beta, reg_inc_beta, BetaShape};

/// Matching tolerance used by [`equivalence_report`] to check its precondition.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-12;

/// Sup-norm threshold for an equivalence report to count as a pass.
pub const EQUIVALENCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Param {
    A,
    B,
    Gamma,
    Beta,
    Lambda,
    Tau,
}

impl Param {
    pub const ALL: [Param; 6] = [
        Param::A,
        Param::B,
        Param::Gamma,
        Param::Beta,
        Param::Lambda,
        Param::Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::Gamma => "gamma",
            Param::Beta => "beta",
            Param::Lambda => "lambda",
            Param::Tau => "tau",
        }
    }

    fn of(self, v: &ParamValues) -> f64 {
        match self {
            Param::A => v.a,
            Param::B => v.b,
            Param::Gamma => v.gamma,
            Param::Beta => v.beta,
            Param::Lambda => v.lambda,
            Param::Tau => v.tau,
        }
    }
}

/// A row of the sub-distribution table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    Bmw6,
    BetaWeibull,
    BetaModifiedRayleigh,
    BetaRayleigh,
    BetaExponential,
    ExponentiatedWeibull,
    ExponentiatedExponential,
    Weibull4,
    GeneralizedWeibullTau0,
    ModifiedRayleigh,
    ClassicalWeibull,
    Rayleigh,
    Exponential,
}

use NamedFamily::*;
use Param::{Beta as PBeta, Gamma as PGamma, Lambda as PLambda, Tau as PTau, A as PA, B as PB};

impl NamedFamily {
    /// All rows, in table order.
    pub const ALL: [NamedFamily; 13] = [
        Bmw6,
        BetaWeibull,
        BetaModifiedRayleigh,
        BetaRayleigh,
        BetaExponential,
        ExponentiatedWeibull,
        ExponentiatedExponential,
        Weibull4,
        GeneralizedWeibullTau0,
        ModifiedRayleigh,
        ClassicalWeibull,
        Rayleigh,
        Exponential,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bmw6 => "BMW6",
            BetaWeibull => "BetaWeibull",
            BetaModifiedRayleigh => "BetaModifiedRayleigh",
            BetaRayleigh => "BetaRayleigh",
            BetaExponential => "BetaExponential",
            ExponentiatedWeibull => "ExponentiatedWeibull",
            ExponentiatedExponential => "ExponentiatedExponential",
            Weibull4 => "Weibull4",
            GeneralizedWeibullTau0 => "GeneralizedWeibullTau0",
            ModifiedRayleigh => "ModifiedRayleigh",
            ClassicalWeibull => "ClassicalWeibull",
            Rayleigh => "Rayleigh",
            Exponential => "Exponential",
        }
    }

    /// Parameters pinned by the table row, with their values.
    pub fn fixed(self) -> &'static [(Param, f64)] {
        match self {
            Bmw6 => &[],
            BetaWeibull => &[(PLambda, 1.0), (PTau, 1.0)],
            BetaModifiedRayleigh => &[(PB, 1.0), (PGamma, 2.0), (PLambda, 1.0), (PTau, 1.0)],
            BetaRayleigh => &[
                (PB, 1.0),
                (PGamma, 2.0),
                (PBeta, 1.0),
                (PLambda, 1.0),
                (PTau, 1.0),
            ],
            BetaExponential => &[(PGamma, 1.0), (PLambda, 1.0), (PTau, 1.0)],
            ExponentiatedWeibull => &[(PB, 1.0), (PLambda, 1.0), (PTau, 1.0)],
            ExponentiatedExponential => &[(PB, 1.0), (PGamma, 1.0), (PLambda, 1.0), (PTau, 1.0)],
            Weibull4 => &[(PA, 1.0), (PB, 1.0)],
            GeneralizedWeibullTau0 => &[(PA, 1.0), (PB, 1.0), (PTau, 0.0)],
            ModifiedRayleigh => &[
                (PA, 1.0),
                (PB, 1.0),
                (PGamma, 2.0),
                (PLambda, 1.0),
                (PTau, 1.0),
            ],
            ClassicalWeibull => &[(PA, 1.0), (PB, 1.0), (PLambda, 1.0), (PTau, 1.0)],
            Rayleigh => &[
                (PA, 1.0),
                (PB, 1.0),
                (PGamma, 2.0),
                (PBeta, 1.0),
                (PLambda, 1.0),
                (PTau, 1.0),
            ],
            Exponential => &[
                (PA, 1.0),
                (PB, 1.0),
                (PGamma, 1.0),
                (PLambda, 1.0),
                (PTau, 1.0),
            ],
        }
    }

    /// Parameters the row leaves free.
    pub fn free_params(self) -> Vec<Param> {
        Param::ALL
            .into_iter()
            .filter(|p| !self.fixed().iter().any(|(q, _)| q == p))
            .collect()
    }

    /// The constraints actually checked by [`classify`]: λ drops out whenever τ = 1
    /// is pinned, since the cumulative hazard is then (x/β)^γ for every λ.
    fn constraints(self) -> impl Iterator<Item = (Param, f64)> {
        let fixed = self.fixed();
        let tau_one = fixed.iter().any(|&(p, v)| p == PTau && v == 1.0);
        fixed
            .iter()
            .copied()
            .filter(move |&(p, _)| !(tau_one && p == PLambda))
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The most specific row whose pinned parameters all match within `tol`.
///
/// Ties go to the row that pins more parameters, then to table order.
pub fn classify(p: &Bmw6Params, tol: f64) -> NamedFamily {
    let v = p.values();
    let mut best = Bmw6;
    let mut best_count = 0;
    for family in NamedFamily::ALL {
        let mut count = 0;
        let matches = family.constraints().all(|(param, want)| {
            count += 1;
            (param.of(&v) - want).abs() <= tol
        });
        if matches && count > best_count {
            best = family;
            best_count = count;
        }
    }
    best
}

fn weibull_z(x: f64, beta: f64, gamma: f64) -> f64 {
    (x / beta).powf(gamma)
}

/// One minus exp(−z), kept accurate for small z.
fn one_minus_exp(z: f64) -> f64 {
    -(-z).exp_m1()
}

/// Closed-form cdf of a named sub-family, evaluated without going through the
/// six-parameter composition.
pub fn reference_cdf(family: NamedFamily, params: &Bmw6Params, x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(domain(format!("x must be >= 0, got {x}")));
    }
    let v = params.values();
    let (a, b) = (v.a, v.b);
    let shape = || BetaShape::new(a, b);
    let value = match family {
        Bmw6 => return Err(Error::Unsupported("BMW6 has no reduced closed form".into())),
        BetaWeibull => reg_inc_beta(one_minus_exp(weibull_z(x, v.beta, v.gamma)), shape()?)?,
        BetaModifiedRayleigh => one_minus_exp((x / v.beta).powi(2)).powf(a),
        BetaRayleigh => one_minus_exp(x * x).powf(a),
        BetaExponential => reg_inc_beta(one_minus_exp(x / v.beta), shape()?)?,
        ExponentiatedWeibull => one_minus_exp(weibull_z(x, v.beta, v.gamma)).powf(a),
        ExponentiatedExponential => one_minus_exp(x / v.beta).powf(a),
        Weibull4 => params.inner().cdf(x)?,
        GeneralizedWeibullTau0 => {
            1.0 - (1.0 + weibull_z(x, v.beta, v.gamma) / v.lambda).powf(-v.lambda)
        }
        ModifiedRayleigh => one_minus_exp((x / v.beta).powi(2)),
        ClassicalWeibull => one_minus_exp(weibull_z(x, v.beta, v.gamma)),
        Rayleigh => one_minus_exp(x * x),
        Exponential => one_minus_exp(x / v.beta),
    };
    Ok(value)
}

/// Closed-form density of a named sub-family, defined for x > 0.
pub fn reference_pdf(family: NamedFamily, params: &Bmw6Params, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain(format!("densities need finite x > 0, got {x}")));
    }
    let v = params.values();
    let (a, b) = (v.a, v.b);
    // Weibull density (γ/β)(x/β)^{γ−1} e^{−z} and its cdf.
    let weibull = |beta: f64, gamma: f64| {
        let z = weibull_z(x, beta, gamma);
        let dens = gamma / beta * (x / beta).powf(gamma - 1.0) * (-z).exp();
        (one_minus_exp(z), dens)
    };
    let beta_fn = || -> Result<f64> { Ok(log_beta(BetaShape::new(a, b)?).exp()) };
    let value = match family {
        Bmw6 => return Err(Error::Unsupported("BMW6 has no reduced closed form".into())),
        BetaWeibull | BetaExponential => {
            let gamma = if family == BetaExponential {
                1.0
            } else {
                v.gamma
            };
            let z = weibull_z(x, v.beta, gamma);
            let (g_cdf, g_pdf) = weibull(v.beta, gamma);
            g_cdf.powf(a - 1.0) * (-(b - 1.0) * z).exp() * g_pdf / beta_fn()?
        }
        BetaModifiedRayleigh | BetaRayleigh | ExponentiatedWeibull | ExponentiatedExponential => {
            let (beta, gamma) = match family {
                BetaModifiedRayleigh => (v.beta, 2.0),
                BetaRayleigh => (1.0, 2.0),
                ExponentiatedWeibull => (v.beta, v.gamma),
                _ => (v.beta, 1.0),
            };
            let (g_cdf, g_pdf) = weibull(beta, gamma);
            a * g_cdf.powf(a - 1.0) * g_pdf
        }
        Weibull4 => params.inner().pdf(x)?,
        GeneralizedWeibullTau0 => {
            let z = weibull_z(x, v.beta, v.gamma);
            v.gamma / v.beta
                * (x / v.beta).powf(v.gamma - 1.0)
                * (1.0 + z / v.lambda).powf(-v.lambda - 1.0)
        }
        ModifiedRayleigh => weibull(v.beta, 2.0).1,
        ClassicalWeibull => weibull(v.beta, v.gamma).1,
        Rayleigh => 2.0 * x * (-x * x).exp(),
        Exponential => (-x / v.beta).exp() / v.beta,
    };
    Ok(value)
}

/// Sup-norm distance between the six-parameter functions and a sub-family's closed
/// forms over a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub family: NamedFamily,
    pub points: usize,
    pub max_cdf_diff: f64,
    pub max_pdf_diff: f64,
}

impl EquivalenceReport {
    pub fn passes(&self) -> bool {
        self.max_cdf_diff <= EQUIVALENCE_TOL && self.max_pdf_diff <= EQUIVALENCE_TOL
    }

    pub fn to_table(&self) -> String {
        format!(
            "{:<26} {:>6} {:>14} {:>14} {:>5}\n{:<26} {:>6} {:>14.3e} {:>14.3e} {:>5}\n",
            "family",
            "points",
            "max_cdf_diff",
            "max_pdf_diff",
            "pass",
            self.family.name(),
            self.points,
            self.max_cdf_diff,
            self.max_pdf_diff,
            self.passes(),
        )
    }

    pub fn to_csv(&self) -> String {
        format!(
            "family,points,max_cdf_diff,max_pdf_diff,pass\n{},{},{:.16e},{:.16e},{}\n",
            self.family.name(),
            self.points,
            self.max_cdf_diff,
            self.max_pdf_diff,
            self.passes(),
        )
    }
}

/// Compares `p` against the closed forms of `family` on every grid point.
///
/// `p` must classify as `family`.
pub fn equivalence_report(
    p: &Bmw6Params,
    family: NamedFamily,
    grid: &[f64],
) -> Result<EquivalenceReport> {
    let actual = classify(p, DEFAULT_CLASSIFY_TOL);
    if actual != family {
        return Err(Error::Precondition(format!(
            "parameters classify as {actual}, not {family}"
        )));
    }
    if family == Bmw6 {
        return Err(Error::Unsupported("BMW6 has no reduced closed form".into()));
    }
    let mut max_cdf_diff: f64 = 0.0;
    let mut max_pdf_diff: f64 = 0.0;
    for &x in grid {
        let dc = (p.cdf(x)? - reference_cdf(family, p, x)?).abs();
        let dp = (p.pdf(x)? - reference_pdf(family, p, x)?).abs();
        max_cdf_diff = max_cdf_diff.max(dc);
        max_pdf_diff = max_pdf_diff.max(dp);
    }
    Ok(EquivalenceReport {
        family,
        points: grid.len(),
        max_cdf_diff,
        max_pdf_diff,
    })
}

/// A representative parameter set for each reduced row, with the free parameters
/// set to non-special values.
pub fn representative(family: NamedFamily) -> ParamValues {
    let mut v = ParamValues {
        a: 1.7,
        b: 0.6,
        lambda: 2.3,
        beta: 1.4,
        gamma: 0.8,
        tau: 1.8,
    };
    for &(p, value) in family.fixed() {
        match p {
            Param::A => v.a = value,
            Param::B => v.b = value,
            Param::Gamma => v.gamma = value,
            Param::Beta => v.beta = value,
            Param::Lambda => v.lambda = value,
            Param::Tau => v.tau = value,
        }
    }
    v
}
