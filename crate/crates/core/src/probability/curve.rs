use std::io::{BufRead, Write};

use rayon::prelude::*;

use super::{class_probability_with, ProbabilityError, DEFAULT_TOL};
use crate::enumeration::{ClassTag, KernelWeightTable};

const GRID_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub lambda: f64,
    pub p: f64,
    pub error_bound: f64,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityCurve {
    pub class: ClassTag,
    pub r_max: usize,
    pub points: Vec<CurvePoint>,
}

impl ProbabilityCurve {
    pub fn certified(&self) -> bool {
        self.points.iter().all(|p| p.certified)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "lambda,p,error_bound")?;
        for pt in &self.points {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", pt.lambda, pt.p, pt.error_bound)?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("ascii")
    }
}

/// Evaluates every grid point; points are computed in parallel and returned
/// in grid order.
pub fn probability_curve(
    table: &KernelWeightTable,
    grid: &[f64],
) -> Result<ProbabilityCurve, ProbabilityError> {
    probability_curve_with(table, grid, DEFAULT_TOL)
}

pub fn probability_curve_with(
    table: &KernelWeightTable,
    grid: &[f64],
    tol: f64,
) -> Result<ProbabilityCurve, ProbabilityError> {
    if grid.iter().any(|x| !x.is_finite()) {
        return Err(ProbabilityError::InvalidGrid("non-finite lambda".into()));
    }
    if grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(ProbabilityError::InvalidGrid("lambda values must be sorted".into()));
    }
    let points = grid
        .par_iter()
        .map(|&lambda| {
            class_probability_with(table, lambda, tol).map(|c| CurvePoint {
                lambda,
                p: c.p,
                error_bound: c.error_bound,
                certified: c.certified,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProbabilityCurve {
        class: table.class().clone(),
        r_max: table.r_max(),
        points,
    })
}

/// Parses `min:max:step` into `min, min + step, ...` up to `max` inclusive
/// (with 1e-12 slack). `min > max` gives an empty grid.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, ProbabilityError> {
    let bad = |why: &str| ProbabilityError::InvalidGrid(format!("{spec:?}: {why}"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [min, max, step] = parts[..] else {
        return Err(bad("expected min:max:step"));
    };
    let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
    let (min, max, step) = (parse(min)?, parse(max)?, parse(step)?);
    if !(min.is_finite() && max.is_finite() && step.is_finite()) {
        return Err(bad("values must be finite"));
    }
    if step <= 0.0 {
        return Err(bad("step must be positive"));
    }
    if min > max {
        return Ok(Vec::new());
    }
    let count = ((max - min) / step + GRID_SLACK).floor() as usize + 1;
    Ok((0..count).map(|i| tidy(min + i as f64 * step)).collect())
}

// Removes float noise such as 0.30000000000000004 from grid points.
fn tidy(x: f64) -> f64 {
    let rounded = (x * 1e9).round() / 1e9;
    if (rounded - x).abs() < GRID_SLACK {
        rounded
    } else {
        x
    }
}

/// Reads a `lambda,p,error_bound` CSV.
pub fn read_curve_csv<R: BufRead>(input: R) -> Result<Vec<CurvePoint>, ProbabilityError> {
    let mut points = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let csv_err = |reason: String| ProbabilityError::Csv {
            line: line_no,
            reason,
        };
        let line = line.map_err(|e| csv_err(e.to_string()))?;
        if i == 0 {
            if line.trim() != "lambda,p,error_bound" {
                return Err(csv_err(format!("unexpected header {line:?}")));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| csv_err(e.to_string()))?;
        let [lambda, p, error_bound] = fields[..] else {
            return Err(csv_err(format!("expected 3 fields, got {}", fields.len())));
        };
        points.push(CurvePoint {
            lambda,
            p,
            error_bound,
            certified: true,
        });
    }
    Ok(points)
}
