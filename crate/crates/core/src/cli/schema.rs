//! JSON documents read and written by the command-line tool.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::spectra::{RegionBox, SpectralClassification, SpectralKind, MAX_RESOLUTION};
use crate::symbol::{FourierSymbol, RationalRotation};
use crate::wco::MoebiusAutomorphism;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    LambdaToeplitz,
    Wco,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    #[serde(rename = "box")]
    pub bounds: RegionBox,
    pub resolution: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    /// Width of the near-boundary band used by classification.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classify: Option<f64>,
}

/// Input problem description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub symbol: FourierSymbol,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<RationalRotation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<MoebiusAutomorphism>,
    #[serde(default)]
    pub queries: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub tolerances: ToleranceOverrides,
}

impl ProblemSpec {
    /// Checks the invariants serde cannot express.
    pub fn validate(&self) -> Result<(), String> {
        match (self.kind, &self.rotation, &self.automorphism) {
            (ProblemKind::LambdaToeplitz, Some(_), None) | (ProblemKind::Wco, None, Some(_)) => {}
            (ProblemKind::LambdaToeplitz, _, _) => {
                return Err("kind lambda_toeplitz needs `rotation` and no `automorphism`".into())
            }
            (ProblemKind::Wco, _, _) => return Err("kind wco needs `automorphism` and no `rotation`".into()),
        }
        self.symbol.check_analytic().map_err(|e| e.to_string())?;
        if let Some(bad) = self.queries.iter().find(|q| !q[0].is_finite() || !q[1].is_finite()) {
            return Err(format!("query {bad:?} is not finite"));
        }
        if let Some(grid) = &self.grid {
            let b = grid.bounds;
            RegionBox::new(b.re_min, b.re_max, b.im_min, b.im_max).map_err(|e| e.to_string())?;
            check_resolution(grid.resolution)?;
        }
        if let Some(tol) = self.tolerances.classify {
            check_tolerance(tol)?;
        }
        Ok(())
    }

    pub fn query_points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.queries.iter().map(|q| Complex64::new(q[0], q[1]))
    }
}

pub(crate) fn check_resolution(resolution: usize) -> Result<(), String> {
    if resolution == 0 || resolution > MAX_RESOLUTION {
        return Err(format!("resolution must be in 1..={MAX_RESOLUTION}, got {resolution}"));
    }
    Ok(())
}

pub(crate) fn check_tolerance(tol: f64) -> Result<(), String> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(format!("tolerance must be positive and finite, got {tol}"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub mu: [f64; 2],
    pub kind: SpectralKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<i64>,
    pub distance: f64,
}

impl ClassificationRecord {
    pub fn new(mu: Complex64, c: SpectralClassification) -> Self {
        Self { mu: [mu.re, mu.im], kind: c.kind, index: c.index, distance: c.distance }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scalars {
    pub ess_radius: f64,
    pub sup_norm_twisted: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator_norm_estimate: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UsedTolerances {
    pub classify: f64,
    pub fredholm: f64,
    pub certification: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleCounts {
    /// FFT grid behind the product-symbol curve.
    pub curve_grid: usize,
    /// Taylor degree kept after the conjugation (wco only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pullback_degree: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub version: String,
    pub tolerances: UsedTolerances,
    pub sample_counts: SampleCounts,
}

/// How a weighted composition problem was reduced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionRecord {
    pub fixed_point: [f64; 2],
    pub multiplier: [f64; 2],
    pub rotation: RationalRotation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionRecord {
    pub n: usize,
    pub factorization_error: f64,
    pub power_identity_error: f64,
    pub op_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SigmaMinRecord {
    pub mu: [f64; 2],
    /// One value per entry of the schedule.
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationBlock {
    pub schedule: Vec<usize>,
    pub factorization_error: f64,
    pub power_identity_error: f64,
    pub dimensions: Vec<DimensionRecord>,
    pub sigma_min: Vec<SigmaMinRecord>,
}

/// Output of `classify` and `validate`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub kind: ProblemKind,
    pub classifications: Vec<ClassificationRecord>,
    pub scalars: Scalars,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationBlock>,
    pub provenance: Provenance,
}

impl ResultDoc {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("ResultDoc always serializes");
        s.push('\n');
        s
    }
}
