//! The built-in density and hazard plot sets, and a dense-scan shape classifier.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::bmw::{Bmw6Params, ParamValues};
use crate::curves::{grid, CurveTable, Spacing};
use crate::error::{Error, Result};

pub const FIGURE_GRID_MIN: f64 = 1e-3;
pub const FIGURE_GRID_MAX: f64 = 8.0;
pub const FIGURE_GRID_POINTS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Panel {
    FigA,
    FigB,
}

impl Panel {
    pub fn name(self) -> &'static str {
        match self {
            Panel::FigA => "FigA",
            Panel::FigB => "FigB",
        }
    }
}

/// Which panels a `figure` run should emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PanelSelection {
    One(Panel),
    All,
}

impl PanelSelection {
    pub fn includes(self, panel: Panel) -> bool {
        match self {
            PanelSelection::One(p) => p == panel,
            PanelSelection::All => true,
        }
    }
}

impl FromStr for PanelSelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "FigA" => Ok(PanelSelection::One(Panel::FigA)),
            "FigB" => Ok(PanelSelection::One(Panel::FigB)),
            "all" => Ok(PanelSelection::All),
            other => Err(format!(
                "unknown panel '{other}', expected FigA, FigB or all"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureSet {
    pub label: &'static str,
    pub panel: Panel,
    pub values: ParamValues,
}

impl FigureSet {
    pub fn params(&self) -> Result<Bmw6Params> {
        Bmw6Params::from_values(self.values)
    }

    pub fn file_name(&self) -> String {
        format!("{}_{}.csv", self.panel.name(), self.label)
    }
}

const fn set(label: &'static str, panel: Panel, v: [f64; 6]) -> FigureSet {
    // (a, b, λ, β, γ, τ)
    FigureSet {
        label,
        panel,
        values: ParamValues {
            a: v[0],
            b: v[1],
            lambda: v[2],
            beta: v[3],
            gamma: v[4],
            tau: v[5],
        },
    }
}

pub const FIGURE_SETS: [FigureSet; 11] = [
    set("BW", Panel::FigA, [0.8, 0.8, 0.8, 0.8, 1.5, 1.0]),
    set("BE", Panel::FigA, [0.7, 0.7, 0.7, 1.3, 1.0, 1.0]),
    set("N1", Panel::FigA, [1.5, 0.8, 1.2, 0.8, 1.2, 2.0]),
    set("N2", Panel::FigA, [1.5, 3.5, 0.5, 1.5, 4.0, 4.0]),
    set("N3", Panel::FigA, [0.5, 0.5, 0.5, 0.5, 0.5, 0.5]),
    set("GMW", Panel::FigB, [0.2, 1.0, 0.001, 2.4, 3.5, 3.5]),
    set("WE", Panel::FigB, [1.5, 1.0, 1.9, 0.6, 1.4, 1.0]),
    set("GR", Panel::FigB, [0.25, 1.0, 0.001, 1.0, 2.0, 1.0]),
    set("W", Panel::FigB, [1.0, 1.0, 0.5, 0.2, 0.6, 1.0]),
    set("EE", Panel::FigB, [0.4, 1.0, 3.5, 3.0, 1.0, 1.0]),
    set("E", Panel::FigB, [1.0, 1.0, 0.5, 1.5, 1.0, 1.0]),
];

pub fn figure_set(label: &str) -> Option<&'static FigureSet> {
    FIGURE_SETS.iter().find(|s| s.label == label)
}

pub fn figure_grid() -> Vec<f64> {
    grid(
        FIGURE_GRID_MIN,
        FIGURE_GRID_MAX,
        FIGURE_GRID_POINTS,
        Spacing::Log,
    )
    .expect("constant grid bounds are valid")
}

/// pdf and hazard on the figure grid. Hazard cells where the survival function
/// underflows are left empty.
pub fn figure_table(set: &FigureSet) -> Result<CurveTable> {
    let p = set.params()?;
    let x = figure_grid();
    let pdf = x
        .iter()
        .map(|&x| p.pdf(x).map(Some))
        .collect::<Result<Vec<_>>>()?;
    let hazard = x
        .iter()
        .map(|&x| match p.hazard(x) {
            Ok(h) => Ok(Some(h)),
            Err(Error::Overflow(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = CurveTable::new(x)?;
    table.push_column("pdf", pdf)?;
    table.push_column("hazard", hazard)?;
    Ok(table)
}

/// Writes one CSV per selected set into `dir` (created if missing) and returns the paths.
pub fn write_figures(selection: PanelSelection, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for set in FIGURE_SETS.iter().filter(|s| selection.includes(s.panel)) {
        let path = dir.join(set.file_name());
        let csv = figure_table(set)?.to_csv();
        fs::write(&path, csv).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    Constant,
    Increasing,
    Decreasing,
    /// Decreasing then increasing.
    Bathtub,
    /// Increasing then decreasing.
    Unimodal,
    Other,
}

/// Relative step size below which consecutive values count as equal.
pub const FLAT_REL_TOL: f64 = 1e-10;

/// Classifies a sequence by the sign changes of its successive differences.
/// Steps within [`FLAT_REL_TOL`] (relative) are ignored.
pub fn classify_shape(values: &[f64]) -> ShapeClass {
    let mut signs = values.windows(2).filter_map(|w| {
        let d = w[1] - w[0];
        let scale = w[0].abs().max(w[1].abs());
        if d.abs() <= FLAT_REL_TOL * scale {
            None
        } else {
            Some(d > 0.0)
        }
    });
    let Some(first) = signs.next() else {
        return ShapeClass::Constant;
    };
    let mut changes = 0;
    let mut current = first;
    for s in signs {
        if s != current {
            changes += 1;
            current = s;
        }
    }
    match (changes, first) {
        (0, true) => ShapeClass::Increasing,
        (0, false) => ShapeClass::Decreasing,
        (1, false) => ShapeClass::Bathtub,
        (1, true) => ShapeClass::Unimodal,
        _ => ShapeClass::Other,
    }
}

/// Shape of `f` from a dense log-spaced scan; points where `f` fails are skipped.
pub fn dense_scan_shape<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    lo: f64,
    hi: f64,
    n: usize,
) -> Result<ShapeClass> {
    let x = grid(lo, hi, n, Spacing::Log)?;
    let values: Vec<f64> = x
        .into_iter()
        .filter_map(|x| f(x).ok())
        .filter(|v| v.is_finite())
        .collect();
    Ok(classify_shape(&values))
}
