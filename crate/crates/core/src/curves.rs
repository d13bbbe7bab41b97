//! Evaluation grids and CSV curve tables.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bmw::Bmw6Params;
use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl FromStr for Spacing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(format!("unknown spacing '{other}', expected linear or log")),
        }
    }
}

/// `n` points from `lo` to `hi` inclusive; both endpoints are exact.
pub fn grid(lo: f64, hi: f64, n: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(domain(format!("a grid needs at least 2 points, got {n}")));
    }
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(domain(format!(
            "grid bounds must be finite with lo < hi, got [{lo}, {hi}]"
        )));
    }
    let last = (n - 1) as f64;
    let mut xs: Vec<f64> = match spacing {
        Spacing::Linear => (0..n).map(|i| lo + (hi - lo) * (i as f64 / last)).collect(),
        Spacing::Log => {
            if lo <= 0.0 {
                return Err(domain(format!("log spacing needs lo > 0, got {lo}")));
            }
            let (l0, l1) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| (l0 + (l1 - l0) * (i as f64 / last)).exp())
                .collect()
        }
    };
    xs[0] = lo;
    xs[n - 1] = hi;
    Ok(xs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Pdf,
    Cdf,
    Survival,
    Hazard,
    Quantile,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Pdf => "pdf",
            Func::Cdf => "cdf",
            Func::Survival => "survival",
            Func::Hazard => "hazard",
            Func::Quantile => "quantile",
        }
    }

    pub fn eval(self, p: &Bmw6Params, x: f64) -> Result<f64> {
        match self {
            Func::Pdf => p.pdf(x),
            Func::Cdf => p.cdf(x),
            Func::Survival => p.survival(x),
            Func::Hazard => p.hazard(x),
            Func::Quantile => p.quantile(x),
        }
    }
}

impl FromStr for Func {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pdf" => Ok(Func::Pdf),
            "cdf" => Ok(Func::Cdf),
            "survival" => Ok(Func::Survival),
            "hazard" => Ok(Func::Hazard),
            "quantile" => Ok(Func::Quantile),
            other => Err(format!("unknown function '{other}'")),
        }
    }
}

/// A grid with named value columns. A `None` cell is written as an empty CSV field.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    x: Vec<f64>,
    columns: Vec<(String, Vec<Option<f64>>)>,
}

impl CurveTable {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if !x.windows(2).all(|w| w[0] < w[1]) {
            return Err(domain("grid must be strictly increasing"));
        }
        Ok(Self {
            x,
            columns: Vec::new(),
        })
    }

    pub fn push_column(&mut self, name: impl Into<String>, values: Vec<Option<f64>>) -> Result<()> {
        let name = name.into();
        if values.len() != self.x.len() {
            return Err(Error::Precondition(format!(
                "column {name} has {} values for {} grid points",
                values.len(),
                self.x.len()
            )));
        }
        self.columns.push((name, values));
        Ok(())
    }

    /// Evaluates each function on the grid, failing on the first error.
    pub fn evaluate(p: &Bmw6Params, x: Vec<f64>, funcs: &[Func]) -> Result<Self> {
        let mut table = Self::new(x)?;
        for &func in funcs {
            let values = table
                .x
                .iter()
                .map(|&x| func.eval(p, x).map(Some))
                .collect::<Result<Vec<_>>>()?;
            table.push_column(func.name(), values)?;
        }
        Ok(table)
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn column(&self, name: &str) -> Option<&[Option<f64>]> {
        self.columns
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }

    pub fn column_names(&self) -> impl Iterator<Item = &str> {
        self.columns.iter().map(|(n, _)| n.as_str())
    }

    /// CSV with an `x,...` header, 17 significant digits, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x");
        for (name, _) in &self.columns {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (i, x) in self.x.iter().enumerate() {
            let _ = write!(out, "{x:.16e}");
            for (_, values) in &self.columns {
                out.push(',');
                if let Some(v) = values[i] {
                    let _ = write!(out, "{v:.16e}");
                }
            }
            out.push('\n');
        }
        out
    }
}
