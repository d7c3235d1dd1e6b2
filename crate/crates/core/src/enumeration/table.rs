use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{all_cubic_weight, solve_planar_system, solve_sp_system, EnumerationError};
use crate::series::{rat, Rational};

/// Rows computed for the cached standard tables.
pub const DEFAULT_R_MAX: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassTag {
    All,
    Planar,
    SeriesParallel,
    Custom(String),
}

impl ClassTag {
    pub fn outerplanar() -> Self {
        ClassTag::Custom("outerplanar".to_string())
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassTag::All => f.write_str("all"),
            ClassTag::Planar => f.write_str("planar"),
            ClassTag::SeriesParallel => f.write_str("sp"),
            ClassTag::Custom(name) => f.write_str(name),
        }
    }
}

impl FromStr for ClassTag {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(ClassTag::All),
            "planar" => Ok(ClassTag::Planar),
            "sp" | "series-parallel" | "series_parallel" => Ok(ClassTag::SeriesParallel),
            "outerplanar" => Ok(ClassTag::outerplanar()),
            "" => Err(EnumerationError::InvalidTable("empty class name".into())),
            other => Ok(ClassTag::Custom(other.to_string())),
        }
    }
}

/// Exact weighted kernel counts `h_r = [z^(2r)]` of a class's exponential
/// generating function, for `r = 0..=r_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelWeightTable {
    class: ClassTag,
    weights: Vec<Rational>,
    note: Option<String>,
}

impl KernelWeightTable {
    /// A caller-supplied table. `h_0` must be 1 and every entry nonnegative.
    pub fn custom(name: &str, weights: Vec<Rational>) -> Result<Self, EnumerationError> {
        Self::checked(ClassTag::Custom(name.to_string()), weights, None)
    }

    fn checked(
        class: ClassTag,
        weights: Vec<Rational>,
        note: Option<String>,
    ) -> Result<Self, EnumerationError> {
        match weights.first() {
            Some(h0) if h0.is_one() => {}
            Some(h0) => {
                return Err(EnumerationError::InvalidTable(format!(
                    "h_0 must be 1 (the empty kernel), got {h0}"
                )))
            }
            None => return Err(EnumerationError::InvalidTable("no rows".into())),
        }
        if let Some(r) = weights.iter().position(Signed::is_negative) {
            return Err(EnumerationError::InvalidTable(format!(
                "h_{r} is negative"
            )));
        }
        Ok(Self {
            class,
            weights,
            note,
        })
    }

    /// `e_r` for every cubic multigraph.
    pub fn all(r_max: usize) -> Self {
        Self {
            class: ClassTag::All,
            weights: (0..=r_max as u64).map(all_cubic_weight).collect(),
            note: None,
        }
    }

    /// The outerplanar counts through eight vertices. Only these four
    /// nontrivial terms are known here, so probabilities built from this table
    /// are truncated at `r = 4` without a certified error bound.
    pub fn outerplanar() -> Self {
        Self {
            class: ClassTag::outerplanar(),
            weights: vec![
                rat(1, 1),
                rat(5, 24),
                rat(337, 1152),
                rat(55565, 82944),
                rat(14853793, 7962624),
            ],
            note: Some("truncated at r=4, error bound not certified".into()),
        }
    }

    pub fn class(&self) -> &ClassTag {
        &self.class
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, r: usize) -> &Rational {
        &self.weights[r]
    }

    pub fn r_max(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// Keeps rows `0..=r_max`.
    pub fn truncated(&self, r_max: usize) -> Result<Self, EnumerationError> {
        if r_max > self.r_max() {
            return Err(EnumerationError::RowsExceedTruncation {
                requested: r_max,
                available: self.r_max(),
            });
        }
        Ok(Self {
            class: self.class.clone(),
            weights: self.weights[..=r_max].to_vec(),
            note: self.note.clone(),
        })
    }

    /// Writes `r,numerator,denominator` rows.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "r,numerator,denominator")?;
        for (r, h) in self.weights.iter().enumerate() {
            writeln!(out, "{r},{},{}", h.numer(), h.denom())?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("ascii")
    }

    /// Reads the format written by [`write_csv`](Self::write_csv). Rows must
    /// be consecutive from `r = 0`.
    pub fn read_csv<R: BufRead>(class: ClassTag, input: R) -> Result<Self, EnumerationError> {
        let bad = |line: usize, why: &str| EnumerationError::Csv {
            line,
            reason: why.to_string(),
        };
        let mut weights = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let line = line.map_err(|e| bad(i + 1, &e.to_string()))?;
            if i == 0 {
                if line.trim() != "r,numerator,denominator" {
                    return Err(bad(1, "expected header r,numerator,denominator"));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            let [r, num, den] = fields[..] else {
                return Err(bad(i + 1, "expected three fields"));
            };
            let r: usize = r.trim().parse().map_err(|_| bad(i + 1, "bad r"))?;
            if r != weights.len() {
                return Err(bad(i + 1, "rows must be consecutive from r = 0"));
            }
            let num: BigInt = num.trim().parse().map_err(|_| bad(i + 1, "bad numerator"))?;
            let den: BigInt = den.trim().parse().map_err(|_| bad(i + 1, "bad denominator"))?;
            if !den.is_positive() {
                return Err(bad(i + 1, "denominator must be positive"));
            }
            weights.push(Rational::new(num, den));
        }
        Self::checked(class, weights, None)
    }
}

/// Builds the table for a standard class, solving its system at order
/// `2 * r_max`. Custom classes have no generator; use
/// [`KernelWeightTable::custom`] or [`KernelWeightTable::outerplanar`].
pub fn kernel_table(class: &ClassTag, r_max: usize) -> Result<KernelWeightTable, EnumerationError> {
    let order = (2 * r_max).max(2);
    let weights = match class {
        ClassTag::All => return Ok(KernelWeightTable::all(r_max)),
        ClassTag::Planar => solve_planar_system(order)?.kernel_weights(r_max)?,
        ClassTag::SeriesParallel => solve_sp_system(order)?.kernel_weights(r_max)?,
        ClassTag::Custom(name) if name == "outerplanar" => {
            return KernelWeightTable::outerplanar().truncated(r_max)
        }
        ClassTag::Custom(name) => return Err(EnumerationError::NoGenerator(name.clone())),
    };
    KernelWeightTable::checked(class.clone(), weights, None)
}

/// Shared, lazily built tables with [`DEFAULT_R_MAX`] rows for the three
/// standard classes. Returns `None` for custom classes.
pub fn cached_table(class: &ClassTag) -> Option<&'static KernelWeightTable> {
    static ALL: OnceLock<KernelWeightTable> = OnceLock::new();
    static PLANAR: OnceLock<KernelWeightTable> = OnceLock::new();
    static SP: OnceLock<KernelWeightTable> = OnceLock::new();
    let cell = match class {
        ClassTag::All => &ALL,
        ClassTag::Planar => &PLANAR,
        ClassTag::SeriesParallel => &SP,
        ClassTag::Custom(_) => return None,
    };
    Some(cell.get_or_init(|| {
        kernel_table(class, DEFAULT_R_MAX).expect("standard classes solve at the default order")
    }))
}
